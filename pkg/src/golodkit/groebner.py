"""Buchberger's algorithm, normal forms, and standard monomial bases.

The construction is deterministic end to end: pairs are processed by the
normal selection strategy (smallest lcm first under the chosen order),
both classical discard criteria are applied, and the returned basis is
reduced, monic, and sorted by leading monomial.  Homogeneous input stays
homogeneous throughout, so the pair queue is effectively degree by degree.
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass

from .errors import NotArtinianError, ValidationError
from .fields import Scalar
from .monomials import Monomial, MonomialOrder, DEGREVLEX
from .poly import Polynomial, PolyContext, monomials_of_degree


def leading_term(p: Polynomial, order: MonomialOrder) -> tuple[Monomial, Scalar]:
    if p.is_zero():
        raise ValidationError("leading term of zero polynomial")
    m = max(p.terms, key=order.key)
    return m, p.terms[m]


def _reduce_full(
    terms: dict[Monomial, Scalar],
    basis: list[tuple[Monomial, Scalar, dict[Monomial, Scalar]]],
    order: MonomialOrder,
    field,
) -> dict[Monomial, Scalar]:
    """Fully reduce a term dict by the basis; deterministic: always the
    first listed reducer whose leading monomial divides."""
    work = dict(terms)
    out: dict[Monomial, Scalar] = {}
    key = order.key
    while work:
        m = max(work, key=key)
        c = work.pop(m)
        for lm, lc, gterms in basis:
            if lm.divides(m):
                shift = m.div(lm)
                f = field.div(c, lc)
                for gm, gc in gterms.items():
                    tm = gm.mul(shift)
                    if tm == m:
                        continue
                    nv = field.sub(work.get(tm, field.zero), field.mul(f, gc))
                    if field.is_zero(nv):
                        work.pop(tm, None)
                    else:
                        work[tm] = nv
                break
        else:
            out[m] = c
    return out


class GroebnerBasis:
    """A reduced Groebner basis; iterable over its polynomials."""

    def __init__(self, context: PolyContext, order: MonomialOrder, polys: tuple[Polynomial, ...]):
        self.context = context
        self.order = order
        self.polys = polys
        self._basis_data = [
            (*leading_term(g, order), g.terms) for g in polys
        ]

    @property
    def leading_monomials(self) -> tuple[Monomial, ...]:
        return tuple(lm for lm, _, _ in self._basis_data)

    def __iter__(self):
        return iter(self.polys)

    def __len__(self):
        return len(self.polys)

    def normal_form(self, f: Polynomial) -> Polynomial:
        if f.context != self.context:
            raise ValidationError("polynomial context differs from basis context")
        reduced = _reduce_full(f.terms, self._basis_data, self.order, self.context.field)
        return Polynomial(self.context, reduced)

    def reduces_to_zero(self, f: Polynomial) -> bool:
        return self.normal_form(f).is_zero()


def s_polynomial(f: Polynomial, g: Polynomial, order: MonomialOrder) -> Polynomial:
    lmf, lcf = leading_term(f, order)
    lmg, lcg = leading_term(g, order)
    l = lmf.lcm(lmg)
    field = f.context.field
    sf = Polynomial(f.context, {l.div(lmf): field.inv(lcf)})
    sg = Polynomial(g.context, {l.div(lmg): field.inv(lcg)})
    return sf * f - sg * g


def _monic(p: Polynomial, order: MonomialOrder) -> Polynomial:
    _, lc = leading_term(p, order)
    return p.scale(p.context.field.inv(lc))


def buchberger(
    generators: list[Polynomial], order: MonomialOrder = DEGREVLEX
) -> GroebnerBasis:
    """Reduced Groebner basis of the ideal the generators span."""
    gens = [g for g in generators if not g.is_zero()]
    if not gens:
        raise ValidationError("no nonzero generators")
    context = gens[0].context
    for g in gens:
        if g.context != context:
            raise ValidationError("generators over mixed contexts")
    basis = [_monic(g, order) for g in gens]
    lms = [leading_term(g, order)[0] for g in basis]

    heap: list = []
    treated: set[tuple[int, int]] = set()

    def push(i: int, j: int):
        l = lms[i].lcm(lms[j])
        heapq.heappush(heap, (l.degree, order.key(l), i, j))

    for j in range(len(basis)):
        for i in range(j):
            push(i, j)

    while heap:
        _, _, i, j = heapq.heappop(heap)
        pair = (i, j)
        if pair in treated:
            continue
        treated.add(pair)
        if lms[i].coprime(lms[j]):
            continue
        l = lms[i].lcm(lms[j])
        chained = False
        for k in range(len(basis)):
            if k in (i, j) or not lms[k].divides(l):
                continue
            a = (min(i, k), max(i, k))
            b = (min(j, k), max(j, k))
            if a in treated and b in treated:
                chained = True
                break
        if chained:
            continue
        data = [(lms[k], leading_term(basis[k], order)[1], basis[k].terms) for k in range(len(basis))]
        s = s_polynomial(basis[i], basis[j], order)
        rem = _reduce_full(s.terms, data, order, context.field)
        if rem:
            newp = _monic(Polynomial(context, rem), order)
            basis.append(newp)
            lms.append(leading_term(newp, order)[0])
            new = len(basis) - 1
            for k in range(new):
                push(k, new)

    return _reduce_basis(basis, order, context)


def _reduce_basis(basis: list[Polynomial], order: MonomialOrder, context: PolyContext) -> GroebnerBasis:
    lms = [leading_term(g, order)[0] for g in basis]
    keep = []
    for i, lm in enumerate(lms):
        redundant = False
        for j, other in enumerate(lms):
            if i == j:
                continue
            if other.divides(lm) and (other != lm or j < i):
                redundant = True
                break
        if not redundant:
            keep.append(basis[i])
    changed = True
    while changed:
        changed = False
        for i in range(len(keep)):
            others = [
                (*leading_term(g, order), g.terms) for k, g in enumerate(keep) if k != i
            ]
            rem = _reduce_full(keep[i].terms, others, order, context.field)
            newp = Polynomial(context, rem)
            if newp.terms != keep[i].terms:
                if newp.is_zero():
                    keep.pop(i)
                else:
                    keep[i] = _monic(newp, order)
                changed = True
                break
    keep.sort(key=lambda g: order.key(leading_term(g, order)[0]))
    return GroebnerBasis(context, order, tuple(keep))


@dataclass(frozen=True)
class StandardBasis:
    """Monomials outside the leading-term ideal, grouped by degree.

    ``at_degree[d]`` lists degree-``d`` standard monomials in descending
    term order; ``flat`` concatenates the groups (degree ascending), and
    that flat position is the global coordinate index used everywhere.
    """

    at_degree: tuple[tuple[Monomial, ...], ...]
    flat: tuple[Monomial, ...]
    index: dict

    @property
    def length(self) -> int:
        return len(self.flat)

    @property
    def top_degree(self) -> int:
        return len(self.at_degree) - 1

    def hilbert_function(self) -> tuple[int, ...]:
        return tuple(len(g) for g in self.at_degree)


def standard_monomials(gb: GroebnerBasis) -> StandardBasis:
    """Standard monomial basis of the quotient; raises ``NotArtinianError``
    (naming a witness variable) when the quotient has infinite dimension."""
    lms = gb.leading_monomials
    nvars = gb.context.nvars
    if any(lm.degree == 0 for lm in lms):
        return StandardBasis((), (), {})
    for i in range(nvars):
        if not any(
            all(e == 0 for k, e in enumerate(lm.exponents) if k != i) and lm.exponents[i] > 0
            for lm in lms
        ):
            raise NotArtinianError(gb.context.variables[i])
    groups: list[tuple[Monomial, ...]] = []
    d = 0
    while True:
        level = [
            m
            for m in monomials_of_degree(nvars, d)
            if not any(lm.divides(m) for lm in lms)
        ]
        if not level:
            break
        level.sort(key=gb.order.key, reverse=True)
        groups.append(tuple(level))
        d += 1
    flat = tuple(m for g in groups for m in g)
    index = {m: i for i, m in enumerate(flat)}
    return StandardBasis(tuple(groups), flat, index)
