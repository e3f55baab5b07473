"""Dense univariate polynomials with integer coefficients.

Coefficient ``i`` multiplies ``t**i``; trailing zeros are trimmed, the zero
polynomial has empty coefficients and degree -1 by convention.  These carry
the generating-function and denominator arithmetic: everything is exact.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd as int_gcd
from typing import Iterable, Sequence

from .errors import ValidationError


@dataclass(frozen=True)
class IntPolynomial:
    coeffs: tuple[int, ...]

    @classmethod
    def of(cls, coeffs: Iterable[int]) -> "IntPolynomial":
        cs = list(coeffs)
        for c in cs:
            if not isinstance(c, int):
                raise ValidationError(f"integer coefficient expected, got {c!r}")
        while cs and cs[-1] == 0:
            cs.pop()
        return cls(tuple(cs))

    @classmethod
    def zero(cls) -> "IntPolynomial":
        return cls(())

    @classmethod
    def one(cls) -> "IntPolynomial":
        return cls((1,))

    @classmethod
    def t_power(cls, k: int) -> "IntPolynomial":
        return cls.of([0] * k + [1])

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def __getitem__(self, i: int) -> int:
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else 0

    def __add__(self, other: "IntPolynomial") -> "IntPolynomial":
        n = max(len(self.coeffs), len(other.coeffs))
        return IntPolynomial.of([self[i] + other[i] for i in range(n)])

    def __sub__(self, other: "IntPolynomial") -> "IntPolynomial":
        n = max(len(self.coeffs), len(other.coeffs))
        return IntPolynomial.of([self[i] - other[i] for i in range(n)])

    def __neg__(self) -> "IntPolynomial":
        return IntPolynomial(tuple(-c for c in self.coeffs))

    def __mul__(self, other: "IntPolynomial") -> "IntPolynomial":
        if self.is_zero() or other.is_zero():
            return IntPolynomial.zero()
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return IntPolynomial.of(out)

    def __pow__(self, n: int) -> "IntPolynomial":
        if n < 0:
            raise ValidationError("negative power")
        out = IntPolynomial.one()
        for _ in range(n):
            out = out * self
        return out

    def scale(self, c: int) -> "IntPolynomial":
        return IntPolynomial.of([c * a for a in self.coeffs])

    def shift(self, k: int) -> "IntPolynomial":
        """Multiply by t**k."""
        if self.is_zero():
            return self
        return IntPolynomial((0,) * k + self.coeffs)

    def __call__(self, x) -> Fraction | int:
        """Horner evaluation; exact for int or Fraction arguments."""
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def derivative(self) -> "IntPolynomial":
        return IntPolynomial.of([i * c for i, c in enumerate(self.coeffs)][1:])

    def content(self) -> int:
        g = 0
        for c in self.coeffs:
            g = int_gcd(g, c)
        return g

    def primitive(self) -> "IntPolynomial":
        """Divide out the content; sign chosen so the leading coefficient
        is positive.  Zero maps to zero."""
        g = self.content()
        if g == 0:
            return self
        if self.coeffs[-1] < 0:
            g = -g
        return IntPolynomial(tuple(c // g for c in self.coeffs))

    def __str__(self) -> str:
        if self.is_zero():
            return "0"
        chunks = []
        for i, c in enumerate(self.coeffs):
            if not c:
                continue
            mono = "1" if i == 0 else ("t" if i == 1 else f"t^{i}")
            if i == 0:
                body = str(c)
            elif abs(c) == 1:
                body = mono if c > 0 else f"-{mono}"
            else:
                body = f"{c}*{mono}"
            chunks.append(body)
        out = chunks[0]
        for ch in chunks[1:]:
            out += f" - {ch[1:]}" if ch.startswith("-") else f" + {ch}"
        return out


def divmod_q(a: IntPolynomial, b: IntPolynomial) -> tuple[list[Fraction], list[Fraction]]:
    """Quotient and remainder of a/b over the rationals, as coefficient lists."""
    if b.is_zero():
        raise ZeroDivisionError("polynomial division by zero")
    rem = [Fraction(c) for c in a.coeffs]
    quo = [Fraction(0)] * max(0, len(rem) - len(b.coeffs) + 1)
    db = b.degree
    lead = Fraction(b.coeffs[-1])
    while len(rem) - 1 >= db and any(rem):
        while rem and rem[-1] == 0:
            rem.pop()
        if len(rem) - 1 < db:
            break
        k = len(rem) - 1 - db
        f = rem[-1] / lead
        quo[k] = f
        for i in range(len(b.coeffs)):
            rem[k + i] -= f * b.coeffs[i]
        rem.pop()
    while rem and rem[-1] == 0:
        rem.pop()
    return quo, rem


def divexact(a: IntPolynomial, b: IntPolynomial) -> IntPolynomial:
    """a / b when the division is exact in Z[t]; raises otherwise."""
    quo, rem = divmod_q(a, b)
    if rem:
        raise ValidationError("inexact polynomial division")
    if any(q.denominator != 1 for q in quo):
        raise ValidationError("quotient is not integral")
    return IntPolynomial.of([int(q) for q in quo])


def poly_gcd(a: IntPolynomial, b: IntPolynomial) -> IntPolynomial:
    """Greatest common divisor in Z[t] including the content part,
    sign-normalized to a positive leading coefficient."""
    if a.is_zero():
        return b if b.is_zero() else _pos(b)
    if b.is_zero():
        return _pos(a)
    ca, cb = abs(a.content()), abs(b.content())
    p, q = a.primitive(), b.primitive()
    # Euclid over Q on primitive parts, re-primitivized each step
    while not q.is_zero():
        _, rem = divmod_q(p, q)
        if not rem:
            p = q
            q = IntPolynomial.zero()
            break
        den = 1
        for r in rem:
            den = den * r.denominator // int_gcd(den, r.denominator)
        r_int = IntPolynomial.of([int(r * den) for r in rem]).primitive()
        p, q = q, r_int
    g = p.primitive()
    return g.scale(int_gcd(ca, cb)) if int_gcd(ca, cb) > 1 else g


def _pos(p: IntPolynomial) -> IntPolynomial:
    return -p if p.coeffs[-1] < 0 else p


def squarefree_decomposition(p: IntPolynomial) -> list[tuple[IntPolynomial, int]]:
    """Yun's algorithm: returns [(f, k), ...] with p = c * prod f^k, the f
    squarefree, pairwise coprime, and only k with nontrivial f listed."""
    if p.is_zero():
        raise ValidationError("squarefree decomposition of zero")
    p = p.primitive()
    if p.degree < 1:
        return []
    d = p.derivative()
    a = poly_gcd(p, d)
    b = divexact(p, a)
    c = divexact(d, a)
    out: list[tuple[IntPolynomial, int]] = []
    k = 1
    while True:
        dmc = c - b.derivative()
        if dmc.is_zero():
            if b.degree >= 1:
                out.append((b, k))
            break
        g = poly_gcd(b, dmc)
        if g.degree >= 1:
            out.append((g, k))
        b = divexact(b, g)
        c = divexact(dmc, g)
        k += 1
        if b.degree < 1:
            break
    return out
