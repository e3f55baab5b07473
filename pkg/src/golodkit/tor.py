"""Tor dimensions via a resolution of the first module tensored with a
vector-space model of the second.

The second module N is realized per degree as explicit quotient
coordinates: reduced row spans of its relation submodule pick pivot
coordinates, the complementary free coordinates form a basis of N_d,
and projection is exact elimination against the reduced rows.  Tensoring
the minimal resolution of M with N gives a complex of finite-dimensional
spaces whose per-degree homology dimensions need only matrix ranks.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd

from .errors import BudgetExceededError, InternalCheckError, ValidationError
from .fields import Field, PrimeField, Scalar
from .linalg import rank_columns
from .quotient import QuotientRing, RingElement
from .resolution import (
    MinimalizedModule,
    ModulePresentation,
    Resolution,
    _layout,
    minimalize,
    resolve,
)


class _QuotientCoords:
    """Coordinates for (ambient degree piece) / (relation rows): reduced
    integer pivot rows plus the list of free ambient coordinates."""

    def __init__(self, ambient_dim: int, rows, field: Field):
        self.field = field
        work = [dict(r) for r in rows]
        # rows from Span are already in echelon with distinct pivots;
        # finish to fully reduced form, largest pivot first
        by_pivot = {min(r): r for r in work if r}
        for p in sorted(by_pivot, reverse=True):
            row = by_pivot[p]
            for q, other in by_pivot.items():
                if q == p or p not in other:
                    continue
                self._eliminate(other, row, p)
        self.rows = {p: by_pivot[p] for p in sorted(by_pivot)}
        self.free = [c for c in range(ambient_dim) if c not in self.rows]
        self.free_pos = {c: k for k, c in enumerate(self.free)}

    def _eliminate(self, target: dict[int, int], row: dict[int, int], col: int):
        if isinstance(self.field, PrimeField):
            p = self.field.p
            factor = target[col] * pow(row[col], -1, p)
            for k, v in row.items():
                nv = (target.get(k, 0) - factor * v) % p
                if nv:
                    target[k] = nv
                else:
                    target.pop(k, None)
        else:
            a, b = target[col], row[col]
            g = gcd(a, b)
            a //= g
            bb = b // g
            if bb != 1:
                for k in target:
                    target[k] *= bb
            for k, v in row.items():
                nv = target.get(k, 0) - a * v
                if nv:
                    target[k] = nv
                else:
                    target.pop(k, None)
            g = 0
            for v in target.values():
                g = gcd(g, v)
            if g > 1:
                for k in target:
                    target[k] //= g

    @property
    def dim(self) -> int:
        return len(self.free)

    def project(self, vec: dict[int, Scalar]) -> dict[int, Scalar]:
        """Class of an ambient vector in free coordinates; exact and
        linear (field division against the integer pivot rows)."""
        f = self.field
        work = dict(vec)
        for p in list(work):
            if p not in self.rows:
                continue
            row = self.rows[p]
            coef = f.div(f.coerce(work[p]), f.coerce(row[p]))
            for k, v in row.items():
                nv = f.sub(f.coerce(work.get(k, f.zero)), f.mul(coef, f.coerce(v)))
                if f.is_zero(nv):
                    work.pop(k, None)
                else:
                    work[k] = nv
        out = {}
        for c, v in work.items():
            if c not in self.free_pos:
                raise InternalCheckError("projection left a pivot coordinate")
            out[self.free_pos[c]] = v
        return out


class _ModuleModel:
    """Graded vector-space realization of a presented module with an
    action of ring elements."""

    def __init__(self, ring: QuotientRing, mm: MinimalizedModule):
        self.ring = ring
        self.mm = mm
        self.top = mm.top_degree
        self.coords: dict[int, _QuotientCoords] = {}
        for d in range(0, self.top + 1):
            ambient = sum(ring.dim_at(d - g) for g in mm.gen_degrees)
            rows = mm.relation_rows.get(d, ())
            qc = _QuotientCoords(ambient, rows, ring.field)
            self.coords[d] = qc
            if qc.dim != mm.dim_at(d):
                raise InternalCheckError("module model dimension mismatch")

    def dim_at(self, d: int) -> int:
        qc = self.coords.get(d)
        return qc.dim if qc else 0

    def act(self, u: RingElement, d_from: int, basis_k: int) -> dict[int, Scalar]:
        """Image of the k-th degree-``d_from`` basis class under
        multiplication by homogeneous ``u``, in free coordinates of the
        target degree."""
        du = u.degree()
        d_to = d_from + du
        if d_to > self.top:
            return {}
        src_layout = _layout(self.ring, self.mm.gen_degrees, d_from)
        tgt_layout = _layout(self.ring, self.mm.gen_degrees, d_to)
        ambient_coord = self.coords[d_from].free[basis_k]
        # locate the block holding the representative unit vector
        for t, (off, start, n) in enumerate(src_layout):
            if off <= ambient_coord < off + n:
                g = start + ambient_coord - off
                prod = self.ring.multiply_coords(u.coords, {g: self.ring.field.one})
                t_off, t_start, t_n = tgt_layout[t]
                vec = {t_off + gg - t_start: c for gg, c in prod.items()}
                return self.coords[d_to].project(vec)
        raise InternalCheckError("ambient coordinate outside block layout")


@dataclass
class TorTable:
    """dim_k Tor_i for i = 0..n with the graded breakdown."""

    dims: tuple[int, ...]
    graded: tuple[tuple[tuple[int, int], ...], ...]

    def dim(self, i: int) -> int:
        return self.dims[i] if 0 <= i < len(self.dims) else 0


def tor(
    ring: QuotientRing,
    M: ModulePresentation,
    N: ModulePresentation,
    max_i: int,
    resolution: Resolution | None = None,
) -> TorTable:
    """Homology dimensions of (minimal resolution of M) tensored with N.

    Resolves M through step max_i + 1, so the top homology is computed
    against a genuine boundary map rather than assumed zero.  A caller
    holding a deep enough resolution of M can pass it in to skip the
    recomputation.
    """
    if M.ring is not ring or N.ring is not ring:
        raise ValidationError("modules must be presented over the given ring")
    if max_i < 0:
        raise ValidationError("max_i must be >= 0")
    if resolution is not None and (
        resolution.presentation is not M or resolution.steps < max_i + 1
    ):
        raise ValidationError("supplied resolution does not cover the request")
    res = resolution or resolve(ring, M, max_i + 1, with_kernel=False)
    if not res.complete:
        raise BudgetExceededError(0, 0, f"resolution of M incomplete: {res.note}")
    model = _ModuleModel(ring, minimalize(N))
    # complex C_i = F_i tensor N; per degree d, block t contributes
    # dim N_{d - deg_t} coordinates
    def block_dims(i: int, d: int):
        return [model.dim_at(d - g) for g in res.free_degrees[i]]

    def complex_dim(i: int, d: int) -> int:
        return sum(block_dims(i, d))

    degree_range: dict[int, tuple[int, int]] = {}
    for i in range(max_i + 2):
        fd = res.free_degrees[i]
        if fd:
            degree_range[i] = (min(fd), max(fd) + model.top)

    rank_cache: dict[tuple[int, int], int] = {}

    def rank_at(i: int, d: int) -> int:
        # rank of d_i tensor N in degree d (i >= 1)
        if i > len(res.differentials):
            return 0
        key = (i, d)
        if key in rank_cache:
            return rank_cache[key]
        src = res.free_degrees[i]
        tgt = res.free_degrees[i - 1]
        cols_of = res.differentials[i - 1]
        tgt_bd = [model.dim_at(d - g) for g in tgt]
        tgt_off = [0]
        for n in tgt_bd:
            tgt_off.append(tgt_off[-1] + n)
        cols = []
        for j, gj in enumerate(src):
            nloc = model.dim_at(d - gj)
            for k in range(nloc):
                vec: dict[int, Scalar] = {}
                for t, u in enumerate(cols_of[j]):
                    if u.is_zero() or tgt_bd[t] == 0:
                        continue
                    img = model.act(u, d - gj, k)
                    for pos, c in img.items():
                        vec[tgt_off[t] + pos] = c
                cols.append(vec)
        r = rank_columns(cols, ring.field) if cols else 0
        rank_cache[key] = r
        return r

    dims = []
    graded = []
    for i in range(max_i + 1):
        if i not in degree_range:
            dims.append(0)
            graded.append(())
            continue
        lo, hi = degree_range[i]
        total = 0
        per_degree = []
        for d in range(lo, hi + 1):
            c = complex_dim(i, d)
            if c == 0:
                continue
            h = c - (rank_at(i, d) if i >= 1 else 0) - rank_at(i + 1, d)
            if h:
                per_degree.append((d, h))
                total += h
        dims.append(total)
        graded.append(tuple(per_degree))
    return TorTable(dims=tuple(dims), graded=tuple(graded))
