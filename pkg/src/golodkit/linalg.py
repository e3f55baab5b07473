"""Exact sparse linear algebra over QQ and GF(p).

Vectors are dicts mapping coordinate index to a nonzero scalar.  Over the
rationals every vector is scaled to a primitive integer vector on entry
(scaling a whole vector changes neither spans nor kernels), and row
elimination proceeds by integer cross-multiplication with content
stripping, so no true rational arithmetic happens inside the loops.

Two primitives cover every consumer in the package:

* ``Span``    -- an incremental row space keyed by pivot column, giving
                 rank, membership, and deterministic basis extension;
* ``nullspace_columns`` -- kernel of a linear map presented by columns,
                 computed by row echelon + reduced echelon read-off,
                 yielded lazily one basis vector at a time.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd, lcm
from typing import Iterable, Iterator

from .fields import Field, PrimeField

Vec = dict


def intify(vec: Vec, field: Field) -> dict[int, int]:
    """Scale a sparse vector to primitive integer form (QQ) or reduce
    mod p (GF).  Sign: first nonzero coordinate positive over QQ."""
    if isinstance(field, PrimeField):
        p = field.p
        out = {}
        for k, v in vec.items():
            r = (v if isinstance(v, int) else field.coerce(v)) % p
            if r:
                out[k] = r
        return out
    den = 1
    for v in vec.values():
        if isinstance(v, Fraction):
            den = lcm(den, v.denominator)
    out = {}
    g = 0
    for k, v in vec.items():
        n = int(v * den)
        if n:
            out[k] = n
            g = gcd(g, n)
    if g > 1:
        for k in out:
            out[k] //= g
    if out and out[min(out)] < 0:
        for k in out:
            out[k] = -out[k]
    return out


def _strip_content(vec: dict[int, int]) -> None:
    g = 0
    for v in vec.values():
        g = gcd(g, v)
        if g == 1:
            return
    if g > 1:
        for k in vec:
            vec[k] //= g


class _SpanQQ:
    def __init__(self):
        self.rows: dict[int, dict[int, int]] = {}

    @property
    def dim(self) -> int:
        return len(self.rows)

    def _reduce_inplace(self, vec: dict[int, int]) -> dict[int, int]:
        rows = self.rows
        steps = 0
        while vec:
            c = min(vec)
            row = rows.get(c)
            if row is None:
                break
            a, b = vec[c], row[c]
            if b != 1:
                g = gcd(a, b)
                a //= g
                bb = b // g
                if bb != 1:
                    for k in vec:
                        vec[k] *= bb
            for k, v in row.items():
                nv = vec.get(k, 0) - a * v
                if nv:
                    vec[k] = nv
                else:
                    vec.pop(k, None)
            steps += 1
            if steps % 16 == 0:
                _strip_content(vec)
        if vec:
            _strip_content(vec)
        return vec

    def residue(self, vec: Vec, field) -> dict[int, int]:
        return self._reduce_inplace(intify(vec, field))

    def contains(self, vec: Vec, field) -> bool:
        return not self.residue(vec, field)

    def add(self, vec: Vec, field) -> bool:
        r = self._reduce_inplace(intify(vec, field))
        if not r:
            return False
        c = min(r)
        if r[c] < 0:
            for k in r:
                r[k] = -r[k]
        self.rows[c] = r
        return True


class _SpanGF:
    def __init__(self, p: int):
        self.p = p
        self.rows: dict[int, dict[int, int]] = {}

    @property
    def dim(self) -> int:
        return len(self.rows)

    def _reduce_inplace(self, vec: dict[int, int]) -> dict[int, int]:
        rows, p = self.rows, self.p
        while vec:
            c = min(vec)
            row = rows.get(c)
            if row is None:
                break
            a = vec[c]  # stored rows are normalized to pivot 1
            for k, v in row.items():
                nv = (vec.get(k, 0) - a * v) % p
                if nv:
                    vec[k] = nv
                else:
                    vec.pop(k, None)
        return vec

    def residue(self, vec: Vec, field) -> dict[int, int]:
        return self._reduce_inplace(intify(vec, field))

    def contains(self, vec: Vec, field) -> bool:
        return not self.residue(vec, field)

    def add(self, vec: Vec, field) -> bool:
        r = self._reduce_inplace(intify(vec, field))
        if not r:
            return False
        c = min(r)
        inv = pow(r[c], -1, self.p)
        if inv != 1:
            for k in r:
                r[k] = r[k] * inv % self.p
        self.rows[c] = r
        return True


def Span(field: Field):
    """Fresh incremental row space over the given field."""
    if isinstance(field, PrimeField):
        return _SpanGF(field.p)
    return _SpanQQ()


def rank_columns(cols: Iterable[Vec], field: Field) -> int:
    sp = Span(field)
    n = 0
    for c in cols:
        if sp.add(c, field):
            n += 1
    return n


def _transpose(cols: list[Vec], field: Field) -> list[dict[int, int]]:
    rows: dict[int, dict[int, int]] = {}
    for j, col in enumerate(cols):
        for i, v in col.items():
            rows.setdefault(i, {})[j] = v
    return [intify(r, field) for _, r in sorted(rows.items())]


def _echelon(rows: list[dict[int, int]], field: Field):
    sp = Span(field)
    for r in rows:
        sp.add(r, field)
    return sp


def nullspace_columns(
    cols: list[Vec], field: Field
) -> tuple[int, Iterator[dict[int, int]]]:
    """Kernel of the map whose matrix has the given columns.

    Returns ``(dimension, vectors)`` where ``vectors`` lazily yields a
    deterministic basis (one vector per free column, ascending, integer
    primitive over QQ / pivot-normalized over GF).  The caller may stop
    consuming early; the dimension is exact regardless.
    """
    ncols = len(cols)
    sp = _echelon(_transpose(cols, field), field)
    pivots = sp.rows
    free = [j for j in range(ncols) if j not in pivots]

    def vectors() -> Iterator[dict[int, int]]:
        if not free:
            return
        # reduced echelon: eliminate every pivot column from other rows
        modular = isinstance(field, PrimeField)
        p = field.p if modular else 0
        order = sorted(pivots, reverse=True)
        for pc in order:
            prow = pivots[pc]
            bp = prow[pc]
            for qc in pivots:
                if qc == pc:
                    continue
                row = pivots[qc]
                a = row.get(pc)
                if a is None:
                    continue
                if modular:
                    for k, v in prow.items():
                        nv = (row.get(k, 0) - a * v) % p
                        if nv:
                            row[k] = nv
                        else:
                            row.pop(k, None)
                else:
                    g = gcd(a, bp)
                    aa, bb = a // g, bp // g
                    if bb != 1:
                        for k in row:
                            row[k] *= bb
                    for k, v in prow.items():
                        nv = row.get(k, 0) - aa * v
                        if nv:
                            row[k] = nv
                        else:
                            row.pop(k, None)
                    _strip_content(row)
        # bucket rref entries by free column for direct read-off
        by_free: dict[int, list[tuple[int, int, int]]] = {f: [] for f in free}
        for pc, row in pivots.items():
            bp = row[pc]
            for c, v in row.items():
                if c != pc:
                    by_free[c].append((pc, v, bp))
        for f in free:
            if modular:
                vec = {f: 1}
                for pc, v, bp in by_free[f]:
                    vec[pc] = -v * pow(bp, -1, p) % p
                vec = {k: x for k, x in vec.items() if x}
            else:
                entries = by_free[f]
                den = 1
                for _, _, bp in entries:
                    den = lcm(den, bp)
                vec = {f: den}
                for pc, v, bp in entries:
                    vec[pc] = -v * (den // bp)
                _strip_content(vec)
                if vec[min(vec)] < 0:
                    for k in vec:
                        vec[k] = -vec[k]
            yield vec

    return len(free), vectors()


def nullspace_list(cols: list[Vec], field: Field) -> list[dict[int, int]]:
    _, it = nullspace_columns(cols, field)
    return list(it)
