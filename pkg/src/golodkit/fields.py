"""Coefficient fields: the rationals and prime fields F_p.

Scalars are plain Python values (``fractions.Fraction`` over Q, ``int``
residues in ``[0, p)`` over F_p); a ``Field`` object supplies the
arithmetic.  Exactness is structural: Fraction normalizes to lowest terms
with positive denominator, residues are reduced on entry.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Union

from .errors import FieldError

Scalar = Union[Fraction, int]

_MAX_MODULUS = 2**31


def _is_prime(n: int) -> bool:
    # deterministic Miller-Rabin; these bases are exact below 3.2e18
    if n < 2:
        return False
    for p in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        if n % p == 0:
            return n == p
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


class Field:
    """Abstract arithmetic context.  Use the ``QQ`` singleton or ``GF(p)``."""

    characteristic: int

    def coerce(self, value) -> Scalar:
        raise NotImplementedError

    def add(self, a: Scalar, b: Scalar) -> Scalar:
        raise NotImplementedError

    def sub(self, a: Scalar, b: Scalar) -> Scalar:
        raise NotImplementedError

    def mul(self, a: Scalar, b: Scalar) -> Scalar:
        raise NotImplementedError

    def neg(self, a: Scalar) -> Scalar:
        raise NotImplementedError

    def inv(self, a: Scalar) -> Scalar:
        raise NotImplementedError

    def div(self, a: Scalar, b: Scalar) -> Scalar:
        return self.mul(a, self.inv(b))

    @property
    def zero(self) -> Scalar:
        return self.coerce(0)

    @property
    def one(self) -> Scalar:
        return self.coerce(1)

    def is_zero(self, a: Scalar) -> bool:
        return not a


class _Rationals(Field):
    characteristic = 0

    def coerce(self, value) -> Fraction:
        if isinstance(value, Fraction):
            return value
        if isinstance(value, int):
            return Fraction(value)
        if isinstance(value, str):
            return Fraction(value)
        raise TypeError(f"cannot coerce {value!r} into QQ")

    def add(self, a, b):
        return a + b

    def sub(self, a, b):
        return a - b

    def mul(self, a, b):
        return a * b

    def neg(self, a):
        return -a

    def inv(self, a):
        if not a:
            raise ZeroDivisionError("inverse of zero in QQ")
        return 1 / Fraction(a)

    def __repr__(self):
        return "QQ"

    def __eq__(self, other):
        return isinstance(other, _Rationals)

    def __hash__(self):
        return hash("QQ")


class PrimeField(Field):
    """Integers mod p for a prime p < 2**31."""

    def __init__(self, p: int):
        if not isinstance(p, int) or p >= _MAX_MODULUS:
            raise FieldError(f"modulus must be an int below 2^31, got {p!r}")
        if not _is_prime(p):
            raise FieldError(f"modulus {p} is not prime")
        self.p = p
        self.characteristic = p

    def coerce(self, value) -> int:
        if isinstance(value, int):
            return value % self.p
        if isinstance(value, Fraction):
            num, den = value.numerator, value.denominator
            return num * pow(den, -1, self.p) % self.p
        raise TypeError(f"cannot coerce {value!r} into GF({self.p})")

    def add(self, a, b):
        return (a + b) % self.p

    def sub(self, a, b):
        return (a - b) % self.p

    def mul(self, a, b):
        return a * b % self.p

    def neg(self, a):
        return -a % self.p

    def inv(self, a):
        if a % self.p == 0:
            raise ZeroDivisionError(f"inverse of zero in GF({self.p})")
        return pow(a, -1, self.p)

    def __repr__(self):
        return f"GF({self.p})"

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self):
        return hash(("GF", self.p))


QQ = _Rationals()

_gf_cache: dict[int, PrimeField] = {}


def GF(p: int) -> PrimeField:
    """Prime field with ``p`` elements (cached)."""
    if p not in _gf_cache:
        _gf_cache[p] = PrimeField(p)
    return _gf_cache[p]
