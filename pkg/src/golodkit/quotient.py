"""Standard-graded Artinian quotient rings with exact arithmetic.

``make_ring`` turns a homogeneous presentation k[x_1..x_n]/(f_1..f_m)
into a concrete finite-dimensional algebra: a reduced Groebner basis, the
standard monomial basis (the canonical vector-space coordinates used by
every downstream computation), and the full multiplication table on that
basis.  Ring elements are sparse coordinate vectors.

Also here: numeric invariants, socle computation, annihilators, the
exactness test for pairs of zero divisors, and the four constructions
(tensor product, fiber product, connected sum, Teter quotient).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence, Union

from .errors import InternalCheckError, ValidationError
from .fields import Field, Scalar
from .groebner import GroebnerBasis, StandardBasis, buchberger, standard_monomials
from .linalg import Span, nullspace_list, rank_columns
from .monomials import Monomial, MonomialOrder, ORDERS, variable_monomial
from .parser import parse_poly
from .poly import Polynomial, PolyContext

PolyLike = Union[str, Polynomial]


@dataclass(frozen=True)
class RingInvariants:
    """Numeric profile of an Artinian graded quotient.

    ``length`` doubles as the multiplicity; ``codim`` equals ``edim``
    because the Krull dimension is zero.
    """

    edim: int
    dimension: int
    codim: int
    length: int
    socle_degree: int
    loewy_length: int
    hilbert: tuple[int, ...]
    socle_dimension: int
    gorenstein: bool

    @property
    def multiplicity(self) -> int:
        return self.length


class RingElement:
    """Element of a quotient ring as sparse standard-basis coordinates."""

    __slots__ = ("ring", "coords")

    def __init__(self, ring: "QuotientRing", coords: dict[int, Scalar]):
        self.ring = ring
        self.coords = coords

    def is_zero(self) -> bool:
        return not self.coords

    def __add__(self, other: "RingElement") -> "RingElement":
        self._chk(other)
        f = self.ring.field
        acc = dict(self.coords)
        for i, c in other.coords.items():
            s = f.add(acc.get(i, f.zero), c)
            if f.is_zero(s):
                acc.pop(i, None)
            else:
                acc[i] = s
        return RingElement(self.ring, acc)

    def __neg__(self) -> "RingElement":
        f = self.ring.field
        return RingElement(self.ring, {i: f.neg(c) for i, c in self.coords.items()})

    def __sub__(self, other: "RingElement") -> "RingElement":
        return self + (-other)

    def __mul__(self, other: "RingElement") -> "RingElement":
        self._chk(other)
        return RingElement(self.ring, self.ring.multiply_coords(self.coords, other.coords))

    def scale(self, c) -> "RingElement":
        f = self.ring.field
        c = f.coerce(c)
        if f.is_zero(c):
            return RingElement(self.ring, {})
        return RingElement(self.ring, {i: f.mul(v, c) for i, v in self.coords.items()})

    def _chk(self, other: "RingElement"):
        if self.ring is not other.ring:
            raise ValidationError("elements of different rings")

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, RingElement)
            and self.ring is other.ring
            and self.coords == other.coords
        )

    def __hash__(self):
        return hash((id(self.ring), frozenset(self.coords.items())))

    def degree(self) -> int | None:
        """Degree when homogeneous, else None; None for zero."""
        degs = {self.ring.basis.flat[i].degree for i in self.coords}
        if len(degs) == 1:
            return degs.pop()
        return None

    def is_unit(self) -> bool:
        return 0 in self.coords if self.ring.length else False

    def to_polynomial(self) -> Polynomial:
        return Polynomial(
            self.ring.context,
            {self.ring.basis.flat[i]: c for i, c in self.coords.items()},
        )

    def __str__(self):
        return str(self.to_polynomial())

    def __repr__(self):
        return f"RingElement({self.to_polynomial()})"


class QuotientRing:
    """Finite-dimensional graded algebra; construct via ``make_ring``."""

    def __init__(
        self,
        context: PolyContext,
        relations: tuple[Polynomial, ...],
        gb: GroebnerBasis,
        basis: StandardBasis,
    ):
        self.context = context
        self.relations = relations
        self.gb = gb
        self.basis = basis
        self.field = context.field
        hf = basis.hilbert_function()
        self._offsets = [0]
        for h in hf:
            self._offsets.append(self._offsets[-1] + h)
        self._table: dict[tuple[int, int], dict[int, Scalar]] = {}
        self._build_table()
        self._socle_cache: list[RingElement] | None = None

    # -- construction internals ----------------------------------------

    def _build_table(self):
        flat = self.basis.flat
        top = self.basis.top_degree
        for i, a in enumerate(flat):
            for j in range(i, len(flat)):
                b = flat[j]
                if a.degree + b.degree > top:
                    continue
                prod = Polynomial(self.context, {a.mul(b): self.field.one})
                nf = self.gb.normal_form(prod)
                coords = {
                    self.basis.index[m]: c for m, c in nf.terms.items()
                }
                if coords:
                    self._table[(i, j)] = coords

    # -- structure ------------------------------------------------------

    @property
    def length(self) -> int:
        return self.basis.length

    @property
    def nvars(self) -> int:
        return self.context.nvars

    def hilbert_function(self) -> tuple[int, ...]:
        return self.basis.hilbert_function()

    @property
    def socle_degree(self) -> int:
        return self.basis.top_degree

    def degree_indices(self, d: int) -> range:
        if d < 0 or d > self.basis.top_degree:
            return range(0, 0)
        return range(self._offsets[d], self._offsets[d + 1])

    def dim_at(self, d: int) -> int:
        if d < 0 or d > self.basis.top_degree:
            return 0
        return self._offsets[d + 1] - self._offsets[d]

    def product_coords(self, i: int, j: int) -> dict[int, Scalar]:
        if i > j:
            i, j = j, i
        return self._table.get((i, j), {})

    def multiply_coords(
        self, u: dict[int, Scalar], v: dict[int, Scalar]
    ) -> dict[int, Scalar]:
        f = self.field
        acc: dict[int, Scalar] = {}
        for i, a in u.items():
            for j, b in v.items():
                t = self.product_coords(i, j)
                if not t:
                    continue
                ab = f.mul(a, b)
                for k, c in t.items():
                    s = f.add(acc.get(k, f.zero), f.mul(ab, c))
                    if f.is_zero(s):
                        acc.pop(k, None)
                    else:
                        acc[k] = s
        return acc

    def variable_index(self, v: int) -> int:
        mono = variable_monomial(self.nvars, v)
        return self.basis.index[mono]

    def variable_columns(self, v: int) -> list[dict[int, Scalar]]:
        """Column ``j`` is the coordinate vector of x_v * basis_j."""
        vi = self.variable_index(v)
        return [self.product_coords(vi, j) for j in range(self.length)]

    # -- element factories ----------------------------------------------

    def zero(self) -> RingElement:
        return RingElement(self, {})

    def one(self) -> RingElement:
        return RingElement(self, {0: self.field.one}) if self.length else RingElement(self, {})

    def element(self, value: PolyLike) -> RingElement:
        if isinstance(value, str):
            value = parse_poly(value, self.context)
        if value.context != self.context:
            raise ValidationError("polynomial over a different context")
        nf = self.gb.normal_form(value) if len(self.gb) else value
        coords = {self.basis.index[m]: c for m, c in nf.terms.items()}
        return RingElement(self, coords)

    def from_coords(self, coords: dict[int, Scalar]) -> RingElement:
        f = self.field
        return RingElement(
            self, {i: f.coerce(c) for i, c in coords.items() if not f.is_zero(f.coerce(c))}
        )

    def __repr__(self):
        vars_s = ",".join(self.context.variables) or "-"
        return f"QuotientRing({self.field}[{vars_s}], {len(self.relations)} relations, length {self.length})"

    # -- invariants and socle -------------------------------------------

    def socle(self) -> list[RingElement]:
        """Homogeneous basis of the annihilator of the maximal ideal,
        degree ascending; deterministic."""
        if self._socle_cache is not None:
            return list(self._socle_cache)
        out: list[RingElement] = []
        if self.length == 0:
            self._socle_cache = []
            return []
        if self.nvars == 0:
            out = [self.one()]
        else:
            for d in range(self.basis.top_degree + 1):
                idxs = list(self.degree_indices(d))
                if not idxs:
                    continue
                cols = []
                for j in idxs:
                    stacked: dict[int, Scalar] = {}
                    for v in range(self.nvars):
                        vi = self.variable_index(v)
                        prod = self.product_coords(vi, j)
                        for k, c in prod.items():
                            stacked[v * self.length + k] = c
                    cols.append(stacked)
                for vec in nullspace_list(cols, self.field):
                    coords = {idxs[local]: self.field.coerce(c) for local, c in vec.items()}
                    out.append(RingElement(self, coords))
        self._socle_cache = out
        return list(out)

    def invariants(self) -> RingInvariants:
        hf = self.hilbert_function()
        soc = self.socle()
        return RingInvariants(
            edim=self.nvars,
            dimension=0,
            codim=self.nvars,
            length=self.length,
            socle_degree=self.basis.top_degree,
            loewy_length=self.basis.top_degree + 1 if self.length else 0,
            hilbert=hf,
            socle_dimension=len(soc),
            gorenstein=len(soc) == 1,
        )


def make_ring(
    field: Field,
    variables: Sequence[str],
    relations: Iterable[PolyLike],
    order: str | MonomialOrder = "degrevlex",
) -> QuotientRing:
    """Build the quotient of a polynomial ring by homogeneous relations.

    Relations must be nonzero, homogeneous of degree >= 2, and the
    quotient must be finite dimensional.  An empty relation list is only
    legal with no variables (the base field itself).
    """
    if isinstance(order, str):
        if order not in ORDERS:
            raise ValidationError(f"unsupported order {order!r}")
        order = ORDERS[order]
    context = PolyContext(tuple(variables), field)
    polys: list[Polynomial] = []
    for rel in relations:
        p = parse_poly(rel, context) if isinstance(rel, str) else rel
        if p.context != context:
            raise ValidationError("relation over a different context")
        check = p.homogeneous_degree()
        if check.is_zero:
            raise ValidationError("zero relation")
        if check.degree is None:
            raise ValidationError(f"relation {p} is not homogeneous")
        if check.degree < 2:
            raise ValidationError(f"relation {p} has degree {check.degree} < 2")
        polys.append(p)
    if not polys:
        if context.nvars:
            raise ValidationError("no relations: quotient is not Artinian")
        gb = GroebnerBasis(context, order, ())
    else:
        gb = buchberger(polys, order)
    basis = standard_monomials(gb)
    return QuotientRing(context, tuple(polys), gb, basis)


# -- annihilators and exact pairs ---------------------------------------


def annihilator(a: RingElement) -> list[RingElement]:
    """Basis of the annihilator ideal of ``a``; rejects zero and units."""
    ring = a.ring
    if a.is_zero():
        raise ValidationError("annihilator of zero")
    if a.is_unit():
        raise ValidationError("annihilator of a unit is zero; rejected")
    cols = [ring.multiply_coords(a.coords, {j: ring.field.one}) for j in range(ring.length)]
    return [
        RingElement(ring, {i: ring.field.coerce(c) for i, c in vec.items()})
        for vec in nullspace_list(cols, ring.field)
    ]


def principal_ideal_span(b: RingElement):
    ring = b.ring
    sp = Span(ring.field)
    for j in range(ring.length):
        sp.add(ring.multiply_coords(b.coords, {j: ring.field.one}), ring.field)
    return sp


def exact_pair_check(a: RingElement, b: RingElement) -> bool:
    """True when ann(a) equals the ideal (b) and ann(b) equals (a)."""
    if a.ring is not b.ring:
        raise ValidationError("elements of different rings")
    for x, y in ((a, b), (b, a)):
        ann = annihilator(x)
        ideal = principal_ideal_span(y)
        if len(ann) != ideal.dim:
            return False
        if not all(ideal.contains(v.coords, x.ring.field) for v in ann):
            return False
    return True


# -- constructions ------------------------------------------------------


def _translate(p: Polynomial, big: PolyContext, offset: int) -> Polynomial:
    nb = big.nvars
    terms = {}
    for m, c in p.terms.items():
        exps = [0] * nb
        for i, e in enumerate(m.exponents):
            exps[offset + i] = e
        terms[Monomial(tuple(exps))] = c
    return Polynomial(big, terms)


def _merge_contexts(S: QuotientRing, T: QuotientRing) -> PolyContext:
    if S.field != T.field:
        raise ValidationError("rings over different fields")
    overlap = set(S.context.variables) & set(T.context.variables)
    if overlap:
        raise ValidationError(f"variable names overlap: {sorted(overlap)}")
    return PolyContext(S.context.variables + T.context.variables, S.field)


def tensor_product(S: QuotientRing, T: QuotientRing) -> QuotientRing:
    """Coordinate ring of the product construction: union of variables,
    union of relations."""
    big = _merge_contexts(S, T)
    rels = [_translate(p, big, 0) for p in S.relations] + [
        _translate(p, big, S.nvars) for p in T.relations
    ]
    return make_ring(S.field, big.variables, rels, S.gb.order)


def fiber_product(S: QuotientRing, T: QuotientRing) -> QuotientRing:
    """Glue along the residue field: tensor relations plus every mixed
    product of a variable from each side."""
    if S.length < 2 or T.length < 2:
        raise ValidationError("fiber product factors must be non-trivial")
    big = _merge_contexts(S, T)
    rels = [_translate(p, big, 0) for p in S.relations] + [
        _translate(p, big, S.nvars) for p in T.relations
    ]
    for u in S.context.variables:
        for v in T.context.variables:
            rels.append(big.variable(u) * big.variable(v))
    return make_ring(S.field, big.variables, rels, S.gb.order)


def _normalized_socle_generator(R: QuotientRing) -> Polynomial:
    soc = R.socle()
    if len(soc) != 1:
        raise ValidationError("ring is not Gorenstein (socle dimension != 1)")
    gen = soc[0]
    first = min(gen.coords)
    gen = gen.scale(R.field.inv(gen.coords[first]))
    return gen.to_polynomial()


def connected_sum(S: QuotientRing, T: QuotientRing) -> QuotientRing:
    """Gorenstein connected sum: fiber product relations plus the
    identification of the two normalized socle generators."""
    for R in (S, T):
        if len(R.socle()) != 1:
            raise ValidationError("connected sum factors must be Gorenstein")
        if R.length < 3:
            raise ValidationError("connected sum factors must have length >= 3")
    if S.socle_degree != T.socle_degree:
        raise ValidationError(
            f"socle degrees differ ({S.socle_degree} vs {T.socle_degree}); "
            "the identification would not be homogeneous"
        )
    big = _merge_contexts(S, T)
    rels = [_translate(p, big, 0) for p in S.relations] + [
        _translate(p, big, S.nvars) for p in T.relations
    ]
    for u in S.context.variables:
        for v in T.context.variables:
            rels.append(big.variable(u) * big.variable(v))
    sig_s = _translate(_normalized_socle_generator(S), big, 0)
    sig_t = _translate(_normalized_socle_generator(T), big, S.nvars)
    rels.append(sig_s - sig_t)
    return make_ring(S.field, big.variables, rels, S.gb.order)


def teter_quotient(R: QuotientRing) -> QuotientRing:
    """Quotient by the socle ideal.  Degree-1 socle elements are
    eliminated by substitution so the result keeps the degree >= 2
    relation contract; the zero-variable presentation of the base field
    can come out (length 1)."""
    if R.length <= 1:
        raise ValidationError("ring of length <= 1 has no Teter quotient")
    soc = R.socle()
    linear: list[Polynomial] = []
    higher: list[Polynomial] = []
    for s in soc:
        p = s.to_polynomial()
        d = p.homogeneous_degree().degree
        (linear if d == 1 else higher).append(p)
    ctx = R.context
    rels = [p for p in R.relations] + higher
    if linear:
        # solve the linear forms for pivot variables, substitute them away
        f = R.field
        rows = [
            {i: p.coefficient(variable_monomial(ctx.nvars, i)) for i in range(ctx.nvars)}
            for p in linear
        ]
        rows = [{i: c for i, c in r.items() if not f.is_zero(c)} for r in rows]
        pivots: dict[int, dict[int, Scalar]] = {}
        for r in rows:
            r = dict(r)
            while r:
                c = min(r)
                if c not in pivots:
                    break
                prow = pivots[c]
                factor = f.div(r[c], prow[c])
                for k, v in prow.items():
                    nv = f.sub(r.get(k, f.zero), f.mul(factor, v))
                    if f.is_zero(nv):
                        r.pop(k, None)
                    else:
                        r[k] = nv
            if r:
                pivots[min(r)] = r
        keep = [i for i in range(ctx.nvars) if i not in pivots]
        # back-substitute so each pivot row involves only kept variables
        for pc in sorted(pivots, reverse=True):
            row = pivots[pc]
            for qc, qrow in pivots.items():
                if qc != pc and pc in qrow:
                    factor = f.div(qrow[pc], row[pc])
                    for k, v in row.items():
                        nv = f.sub(qrow.get(k, f.zero), f.mul(factor, v))
                        if f.is_zero(nv):
                            qrow.pop(k, None)
                        else:
                            qrow[k] = nv
        assignment = {}
        for pc, row in pivots.items():
            expr = ctx.zero()
            for k, v in row.items():
                if k != pc:
                    expr = expr + ctx.variable(ctx.variables[k]).scale(
                        f.neg(f.div(v, row[pc]))
                    )
            assignment[ctx.variables[pc]] = expr
        new_vars = tuple(ctx.variables[i] for i in keep)
        small = PolyContext(new_vars, f)
        out_rels = []
        for p in rels:
            q = p.substitute(assignment)
            if q.is_zero():
                continue
            # re-express over the smaller variable set
            terms = {}
            for m, c in q.terms.items():
                exps = tuple(m.exponents[i] for i in keep)
                if sum(exps) != m.degree:
                    raise InternalCheckError("substitution left an eliminated variable")
                terms[Monomial(exps)] = c
            out_rels.append(Polynomial(small, terms))
        result = make_ring(f, new_vars, out_rels, R.gb.order)
    else:
        result = make_ring(R.field, ctx.variables, rels, R.gb.order)
    if result.length != R.length - len(soc):
        raise InternalCheckError(
            f"Teter quotient length {result.length} != {R.length} - {len(soc)}"
        )
    return result


# -- numeric bound ------------------------------------------------------


@dataclass(frozen=True)
class MultiplicityBound:
    """The inequality e <= 2c + l - 3 between multiplicity, codimension,
    and Loewy length, with its strict variant."""

    multiplicity: int
    codim: int
    loewy_length: int
    bound: int
    holds: bool
    strict_bound: int
    holds_strict: bool


def montano_lyle_check(R: QuotientRing) -> MultiplicityBound:
    inv = R.invariants()
    e, c, l = inv.length, inv.codim, inv.loewy_length
    return MultiplicityBound(
        multiplicity=e,
        codim=c,
        loewy_length=l,
        bound=2 * c + l - 3,
        holds=e <= 2 * c + l - 3,
        strict_bound=2 * c + l - 4,
        holds_strict=e <= 2 * c + l - 4,
    )
