"""Minimal graded free resolutions by exact degreewise linear algebra.

A module is presented by a free cover (generator degrees) and relation
columns whose entries are ring elements.  The resolver minimalizes the
presentation, then extends it one homological step at a time: the kernel
of each differential is computed degree by degree as an exact null
space, and new generators are chosen by extending the span of
m * (kernel one degree lower) to a basis of the kernel piece.  For a
standard graded ring that span is exactly the degree-d part of m*K, so
the chosen lifts are a basis of K/mK and the resolution stays minimal.

Kernel generators can only live in degrees (min generator degree + 1)
through (max generator degree + s), s the socle degree: below, columns
of a minimal differential are independent; above, the free module is
zero.  Matrix widths are capped (GOLODKIT_MAX_MATRIX, default 20000
columns); hitting the cap aborts the step and returns what was built.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence, Union

from .errors import BudgetExceededError, InternalCheckError, ValidationError
from .fields import Field, Scalar
from .linalg import Span, nullspace_columns, rank_columns
from .quotient import PolyLike, QuotientRing, RingElement

Column = tuple[RingElement, ...]
IntVec = dict[int, int]

DEFAULT_MATRIX_CAP = 20000


def matrix_cap() -> int:
    raw = os.environ.get("GOLODKIT_MAX_MATRIX")
    if raw is None:
        return DEFAULT_MATRIX_CAP
    try:
        cap = int(raw)
    except ValueError:
        raise ValidationError(f"GOLODKIT_MAX_MATRIX={raw!r} is not an integer")
    if cap < 1:
        raise ValidationError("GOLODKIT_MAX_MATRIX must be positive")
    return cap


# -- presentations ------------------------------------------------------


@dataclass(frozen=True)
class ModulePresentation:
    """Finitely generated graded module: free cover plus relation columns.

    Rows of the relation matrix correspond to generators, columns to
    relations; every entry must be homogeneous and the degrees within a
    column consistent.  ``label`` is a display tag (set by the cyclic
    and residue-field constructors).
    """

    ring: QuotientRing
    gen_degrees: tuple[int, ...]
    columns: tuple[Column, ...]
    label: str | None = None

    def __post_init__(self):
        for col in self.columns:
            if len(col) != len(self.gen_degrees):
                raise ValidationError("relation column length != generator count")
            self._column_degree(col)

    def _column_degree(self, col: Column) -> int:
        degs = set()
        for t, u in enumerate(col):
            if u.ring is not self.ring:
                raise ValidationError("matrix entry from a different ring")
            if u.is_zero():
                continue
            d = u.degree()
            if d is None:
                raise ValidationError(f"matrix entry {u} is not homogeneous")
            degs.add(d + self.gen_degrees[t])
        if not degs:
            raise ValidationError("zero relation column")
        if len(degs) > 1:
            raise ValidationError(f"inconsistent degrees in relation column: {sorted(degs)}")
        return degs.pop()

    def column_degree(self, j: int) -> int:
        return self._column_degree(self.columns[j])

    @staticmethod
    def residue_field(ring: QuotientRing) -> "ModulePresentation":
        cols = []
        for v in range(ring.nvars):
            col = [ring.zero()]
            col[0] = ring.element(ring.context.variable(ring.context.variables[v]))
            cols.append(tuple(col))
        return ModulePresentation(ring, (0,), tuple(cols), label="k")

    @staticmethod
    def cyclic(
        ring: QuotientRing, gens: Sequence[PolyLike | RingElement], label: str | None = None
    ) -> "ModulePresentation":
        cols = []
        for g in gens:
            el = g if isinstance(g, RingElement) else ring.element(g)
            if el.is_zero():
                raise ValidationError("zero ideal generator in cyclic presentation")
            cols.append((el,))
        return ModulePresentation(ring, (0,), tuple(cols), label=label)

    @staticmethod
    def free(ring: QuotientRing, degrees: Sequence[int] = (0,)) -> "ModulePresentation":
        return ModulePresentation(ring, tuple(degrees), ())


# -- graded layout helpers ---------------------------------------------


def free_dim_at(ring: QuotientRing, degrees: Sequence[int], d: int) -> int:
    return sum(ring.dim_at(d - g) for g in degrees)


def _layout(ring: QuotientRing, degrees: Sequence[int], d: int):
    """Per generator: (offset into the degree-d coordinates, ring-global
    start index of the local degree piece, piece dimension)."""
    out = []
    off = 0
    for g in degrees:
        ld = d - g
        n = ring.dim_at(ld)
        start = ring.degree_indices(ld).start if n else 0
        out.append((off, start, n))
        off += n
    return out


def _matrix_at(
    ring: QuotientRing,
    src_degrees: Sequence[int],
    tgt_degrees: Sequence[int],
    columns: Sequence[Column],
    d: int,
) -> list[dict[int, Scalar]]:
    """Matrix of the map in internal degree ``d``: one column per
    (source generator, standard monomial of the complementary degree)."""
    tgt = _layout(ring, tgt_degrees, d)
    one = ring.field.one
    out = []
    for j, gj in enumerate(src_degrees):
        ld = d - gj
        n = ring.dim_at(ld)
        if n == 0:
            continue
        col = columns[j]
        entries = [(t, u) for t, u in enumerate(col) if not u.is_zero()]
        for s in ring.degree_indices(ld):
            vec: dict[int, Scalar] = {}
            for t, u in entries:
                off, start, m = tgt[t]
                if m == 0:
                    continue
                prod = ring.multiply_coords(u.coords, {s: one})
                for g, c in prod.items():
                    vec[off + g - start] = c
            out.append(vec)
    return out


def _vector_to_column(
    ring: QuotientRing, src_degrees: Sequence[int], d: int, vec: dict[int, int]
) -> Column:
    lay = _layout(ring, src_degrees, d)
    f = ring.field
    col = []
    for off, start, n in lay:
        coords = {}
        for local in range(n):
            c = vec.get(off + local)
            if c:
                coords[start + local] = f.coerce(c)
        col.append(RingElement(ring, coords))
    return tuple(col)


def _shifted(
    ring: QuotientRing, degrees: Sequence[int], d: int, rows: list[IntVec]
) -> Iterator[dict[int, Scalar]]:
    """Products variable * vector for degree-(d-1) vectors, re-encoded in
    degree-d coordinates; spans m*K in degree d when the rows span K in
    degree d-1."""
    prev = _layout(ring, degrees, d - 1)
    cur = _layout(ring, degrees, d)
    nblocks = len(prev)
    var_idx = [ring.variable_index(v) for v in range(ring.nvars)]
    one = ring.field.one
    for row in rows:
        blocks: list[dict[int, Scalar]] = [{} for _ in range(nblocks)]
        for coord, c in row.items():
            for t in range(nblocks):
                off, start, n = prev[t]
                if off <= coord < off + n:
                    blocks[t][start + coord - off] = c
                    break
        for vi in var_idx:
            vec: dict[int, Scalar] = {}
            for t in range(nblocks):
                if not blocks[t]:
                    continue
                off, start, n = cur[t]
                if n == 0:
                    continue
                prod = ring.multiply_coords(blocks[t], {vi: one})
                for g, c in prod.items():
                    vec[off + g - start] = c
            if vec:
                yield vec


# -- presentation minimalization ----------------------------------------


@dataclass
class MinimalizedModule:
    """Minimal free cover, minimal relation columns, and the graded data
    of the module itself (dimensions; spanning rows of the relation
    submodule per degree, used for vector-space models)."""

    ring: QuotientRing
    gen_degrees: tuple[int, ...]
    columns: tuple[Column, ...]
    column_degrees: tuple[int, ...]
    module_dims: dict[int, int]
    relation_rows: dict[int, tuple[IntVec, ...]]

    @property
    def top_degree(self) -> int:
        if not self.gen_degrees:
            return -1
        return max(self.gen_degrees) + self.ring.basis.top_degree

    def dim_at(self, d: int) -> int:
        return self.module_dims.get(d, 0)

    @property
    def total_dim(self) -> int:
        return sum(self.module_dims.values())


def _prune_units(
    ring: QuotientRing, gens: list[int], cols: list[list[RingElement]]
) -> None:
    """Remove free-cover redundancy: a relation with a unit entry lets
    that generator be expressed by the others.  Rewrites in place."""
    f = ring.field
    while True:
        hit = None
        for j, col in enumerate(cols):
            for t, u in enumerate(col):
                if 0 in u.coords:
                    hit = (j, t)
                    break
            if hit:
                break
        if hit is None:
            return
        j, t = hit
        pcol = cols[j]
        c = pcol[t].coords[0]
        inv = f.inv(c)
        for k, col in enumerate(cols):
            if k == j or col[t].is_zero():
                continue
            factor = col[t].scale(inv)
            for r in range(len(col)):
                if r == t:
                    continue
                col[r] = col[r] - factor * pcol[r]
        del gens[t]
        del cols[j]
        for col in cols:
            del col[t]
        cols[:] = [col for col in cols if any(not u.is_zero() for u in col)]


def minimalize(M: ModulePresentation) -> MinimalizedModule:
    """Minimal presentation: no unit entries (Nakayama on generators),
    and a subset of the relation columns that minimally generates the
    relation submodule (selected degree by degree against m * previous)."""
    ring = M.ring
    gens = list(M.gen_degrees)
    cols = [list(c) for c in M.columns]
    _prune_units(ring, gens, cols)
    gen_degrees = tuple(gens)
    col_data = [(_coldeg(ring, gens, c), c) for c in cols]
    col_data.sort(key=lambda t: t[0])
    module_dims: dict[int, int] = {}
    relation_rows: dict[int, tuple[IntVec, ...]] = {}
    kept: list[Column] = []
    kept_degrees: list[int] = []
    if not gen_degrees:
        return MinimalizedModule(ring, (), (), (), {}, {})
    hi = max(gen_degrees) + ring.basis.top_degree
    lo = min(d for d, _ in col_data) if col_data else hi + 1
    prev_rows: list[IntVec] = []
    for d in range(0, hi + 1):
        fd = free_dim_at(ring, gen_degrees, d)
        if d < lo:
            module_dims[d] = fd
            continue
        sp = Span(ring.field)
        for w in _shifted(ring, gen_degrees, d, prev_rows):
            sp.add(w, ring.field)
        for cd, c in col_data:
            if cd != d:
                continue
            vec = _encode_column(ring, gen_degrees, d, c)
            if sp.add(vec, ring.field):
                kept.append(tuple(c))
                kept_degrees.append(d)
        prev_rows = list(sp.rows.values())
        if sp.dim:
            relation_rows[d] = tuple(prev_rows)
        module_dims[d] = fd - sp.dim
    module_dims = {d: n for d, n in module_dims.items() if n}
    return MinimalizedModule(
        ring, gen_degrees, tuple(kept), tuple(kept_degrees), module_dims, relation_rows
    )


def _coldeg(ring: QuotientRing, gens: list[int], col: list[RingElement]) -> int:
    for t, u in enumerate(col):
        if not u.is_zero():
            return u.degree() + gens[t]
    raise InternalCheckError("zero column survived pruning")


def _encode_column(
    ring: QuotientRing, degrees: Sequence[int], d: int, col: Sequence[RingElement]
) -> dict[int, Scalar]:
    lay = _layout(ring, degrees, d)
    vec: dict[int, Scalar] = {}
    for t, u in enumerate(col):
        off, start, n = lay[t]
        for g, c in u.coords.items():
            vec[off + g - start] = c
    return vec


# -- Betti bookkeeping --------------------------------------------------


class BettiTable:
    """Graded Betti numbers of a resolution prefix."""

    def __init__(self, graded: Sequence[dict[int, int]]):
        self.graded = tuple(dict(sorted(g.items())) for g in graded)

    @property
    def totals(self) -> tuple[int, ...]:
        return tuple(sum(g.values()) for g in self.graded)

    def total(self, i: int) -> int:
        return sum(self.graded[i].values()) if 0 <= i < len(self.graded) else 0

    def entry(self, i: int, j: int) -> int:
        if 0 <= i < len(self.graded):
            return self.graded[i].get(j, 0)
        return 0

    @property
    def steps(self) -> int:
        return len(self.graded) - 1

    def __eq__(self, other):
        return isinstance(other, BettiTable) and self.graded == other.graded

    def __repr__(self):
        return f"BettiTable(totals={self.totals})"

    def __str__(self):
        lines = []
        for i, g in enumerate(self.graded):
            inner = ", ".join(f"{j}:{n}" for j, n in g.items())
            lines.append(f"beta_{i} = {self.total(i)}  [{inner}]")
        return "\n".join(lines)


@dataclass
class Resolution:
    """Prefix F_0 .. F_n of the minimal free resolution.

    ``differentials[i]`` is d_{i+1}: one column of ring elements per
    generator of F_{i+1}.  ``last_kernel_dims`` holds dim ker(d_n) per
    degree when computed (for n = 0 this is the relation submodule);
    ``complete`` is False when the matrix cap stopped the computation
    early, with the reason in ``note``.
    """

    ring: QuotientRing
    presentation: ModulePresentation
    minimal: MinimalizedModule
    free_degrees: tuple[tuple[int, ...], ...]
    differentials: tuple[tuple[Column, ...], ...]
    betti: BettiTable
    last_kernel_dims: dict[int, int] | None
    complete: bool
    note: str | None = None

    @property
    def steps(self) -> int:
        return len(self.free_degrees) - 1

    def free_dim_at(self, i: int, d: int) -> int:
        return free_dim_at(self.ring, self.free_degrees[i], d)


def _degree_histogram(degrees: Sequence[int]) -> dict[int, int]:
    out: dict[int, int] = {}
    for d in sorted(degrees):
        out[d] = out.get(d, 0) + 1
    return out


def _sweep_step(
    ring: QuotientRing,
    src_degrees: Sequence[int],
    tgt_degrees: Sequence[int],
    columns: Sequence[Column],
    cap: int,
) -> tuple[tuple[int, ...], tuple[Column, ...], dict[int, int]]:
    """One homological step: minimal generators of ker(columns) and the
    kernel dimensions per degree."""
    if not src_degrees:
        return (), (), {}
    lo = min(src_degrees) + 1
    hi = max(src_degrees) + ring.basis.top_degree
    prev_rows: list[IntVec] = []
    kernel_dims: dict[int, int] = {}
    new_degrees: list[int] = []
    new_cols: list[Column] = []
    for d in range(lo, hi + 1):
        ncols = free_dim_at(ring, src_degrees, d)
        if ncols == 0:
            prev_rows = []
            continue
        if ncols > cap:
            raise BudgetExceededError(ncols, cap, f"kernel matrix in degree {d}")
        cols = _matrix_at(ring, src_degrees, tgt_degrees, columns, d)
        dim_k, kernel_iter = nullspace_columns(cols, ring.field)
        if dim_k:
            kernel_dims[d] = dim_k
        if dim_k == 0:
            prev_rows = []
            continue
        sp = Span(ring.field)
        for w in _shifted(ring, src_degrees, d, prev_rows):
            if sp.dim == dim_k:
                break
            sp.add(w, ring.field)
        if sp.dim < dim_k:
            for v in kernel_iter:
                if sp.add(v, ring.field):
                    new_degrees.append(d)
                    new_cols.append(_vector_to_column(ring, src_degrees, d, v))
                    if sp.dim == dim_k:
                        break
            if sp.dim != dim_k:
                raise InternalCheckError("kernel generators exhausted below kernel dimension")
        prev_rows = list(sp.rows.values())
    return tuple(new_degrees), tuple(new_cols), kernel_dims


def _kernel_dims_only(
    ring: QuotientRing,
    src_degrees: Sequence[int],
    tgt_degrees: Sequence[int],
    columns: Sequence[Column],
    cap: int,
) -> dict[int, int]:
    if not src_degrees:
        return {}
    lo = min(src_degrees) + 1
    hi = max(src_degrees) + ring.basis.top_degree
    out: dict[int, int] = {}
    for d in range(lo, hi + 1):
        ncols = free_dim_at(ring, src_degrees, d)
        if ncols == 0:
            continue
        if ncols > cap:
            raise BudgetExceededError(ncols, cap, f"kernel matrix in degree {d}")
        cols = _matrix_at(ring, src_degrees, tgt_degrees, columns, d)
        dim_k = ncols - rank_columns(cols, ring.field)
        if dim_k:
            out[d] = dim_k
    return out


def resolve(
    ring: QuotientRing,
    module: ModulePresentation,
    steps: int,
    with_kernel: bool = True,
) -> Resolution:
    """Minimal free resolution prefix F_0 .. F_steps with Betti table.

    ``with_kernel`` additionally computes dim ker(d_steps) per degree,
    which the exactness certificate needs for its full Euler ledger;
    skip it to halve the cost of the final step on large runs.
    """
    if steps < 0:
        raise ValidationError("steps must be >= 0")
    if module.ring is not ring:
        raise ValidationError("module presented over a different ring")
    mm = minimalize(module)
    cap = matrix_cap()
    free_degrees: list[tuple[int, ...]] = [mm.gen_degrees]
    diffs: list[tuple[Column, ...]] = []
    graded: list[dict[int, int]] = [_degree_histogram(mm.gen_degrees)]
    complete = True
    note = None
    if steps >= 1:
        free_degrees.append(mm.column_degrees)
        diffs.append(mm.columns)
        graded.append(_degree_histogram(mm.column_degrees))
        i = 1
        while i < steps:
            try:
                nd, nc, _ = _sweep_step(
                    ring, free_degrees[i], free_degrees[i - 1], diffs[i - 1], cap
                )
            except BudgetExceededError as e:
                complete = False
                note = f"stopped before step {i + 1}: {e}"
                break
            free_degrees.append(nd)
            diffs.append(nc)
            graded.append(_degree_histogram(nd))
            i += 1
    kernel_dims: dict[int, int] | None = None
    if with_kernel and complete:
        n = len(free_degrees) - 1
        try:
            if n == 0:
                kernel_dims = {d: len(rows) for d, rows in mm.relation_rows.items()}
            else:
                kernel_dims = _kernel_dims_only(
                    ring, free_degrees[n], free_degrees[n - 1], diffs[n - 1], cap
                )
        except BudgetExceededError as e:
            kernel_dims = None
            note = f"final kernel dimensions skipped: {e}"
    return Resolution(
        ring=ring,
        presentation=module,
        minimal=mm,
        free_degrees=tuple(free_degrees),
        differentials=tuple(diffs),
        betti=BettiTable(graded),
        last_kernel_dims=kernel_dims,
        complete=complete,
        note=note,
    )


# -- exactness certificate ----------------------------------------------


@dataclass
class CertificateReport:
    """Internal-consistency audit of a resolution prefix: minimality of
    every differential, exact d(d(x)) = 0, and a per-degree Euler ledger
    comparing ranks against the module's graded dimensions."""

    ok: bool
    minimal: bool
    composes_to_zero: bool
    euler_ok: bool
    euler_range: tuple[int, int]
    ledger: list[tuple[int, int, int]]
    failures: list[str]

    def __bool__(self):
        return self.ok


def exactness_certificate(res: Resolution) -> CertificateReport:
    ring = res.ring
    failures: list[str] = []
    minimal = True
    for i, cols in enumerate(res.differentials):
        for j, col in enumerate(cols):
            for t, u in enumerate(col):
                if 0 in u.coords:
                    minimal = False
                    failures.append(
                        f"unit entry in d_{i + 1} at column {j}, row {t}"
                    )
    composes = True
    for i in range(1, len(res.differentials)):
        upper = res.differentials[i]
        lower = res.differentials[i - 1]
        nrows = len(res.free_degrees[i - 1])
        for j, col in enumerate(upper):
            acc = [ring.zero() for _ in range(nrows)]
            for t, u in enumerate(col):
                if u.is_zero():
                    continue
                for r in range(nrows):
                    w = lower[t][r]
                    if not w.is_zero():
                        acc[r] = acc[r] + u * w
            if any(not a.is_zero() for a in acc):
                composes = False
                failures.append(f"d_{i} after d_{i + 1} is nonzero at column {j}")
    n = res.steps
    if res.last_kernel_dims is not None:
        kdims = res.last_kernel_dims
        hi = max(
            [max(fd) + ring.basis.top_degree for fd in res.free_degrees if fd]
            + list(res.minimal.module_dims)
            + [0]
        )
    else:
        kdims = {}
        hi = min(res.free_degrees[n]) if res.free_degrees[n] else 0
    euler_ok = True
    ledger: list[tuple[int, int, int]] = []
    sign = 1 if n % 2 == 0 else -1
    for d in range(0, hi + 1):
        lhs = 0
        for i, fd in enumerate(res.free_degrees):
            dim = free_dim_at(ring, fd, d)
            lhs += dim if i % 2 == 0 else -dim
        lhs -= sign * kdims.get(d, 0)
        rhs = res.minimal.dim_at(d)
        ledger.append((d, lhs, rhs))
        if lhs != rhs:
            euler_ok = False
            failures.append(f"Euler ledger mismatch in degree {d}: {lhs} != {rhs}")
    ok = minimal and composes and euler_ok and res.complete
    if not res.complete:
        failures.append("resolution prefix is incomplete (budget)")
    return CertificateReport(
        ok=ok,
        minimal=minimal,
        composes_to_zero=composes,
        euler_ok=euler_ok,
        euler_range=(0, hi),
        ledger=ledger,
        failures=failures,
    )
