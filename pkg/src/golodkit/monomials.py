"""Monomials as exponent vectors, plus the two supported term orders."""

from __future__ import annotations

from dataclasses import dataclass, field


@dataclass(frozen=True)
class Monomial:
    """Exponent vector with its total degree cached.

    Immutable and hashable; the degree always equals the exponent sum.
    """

    exponents: tuple[int, ...]
    degree: int = field(init=False, compare=False)

    def __post_init__(self):
        if any(e < 0 for e in self.exponents):
            raise ValueError(f"negative exponent in {self.exponents}")
        object.__setattr__(self, "degree", sum(self.exponents))

    def mul(self, other: "Monomial") -> "Monomial":
        return Monomial(tuple(a + b for a, b in zip(self.exponents, other.exponents)))

    def divides(self, other: "Monomial") -> bool:
        return all(a <= b for a, b in zip(self.exponents, other.exponents))

    def div(self, other: "Monomial") -> "Monomial":
        # caller guarantees divisibility
        return Monomial(tuple(a - b for a, b in zip(self.exponents, other.exponents)))

    def lcm(self, other: "Monomial") -> "Monomial":
        return Monomial(tuple(max(a, b) for a, b in zip(self.exponents, other.exponents)))

    def is_one(self) -> bool:
        return self.degree == 0

    def coprime(self, other: "Monomial") -> bool:
        return all(a == 0 or b == 0 for a, b in zip(self.exponents, other.exponents))


def one_monomial(nvars: int) -> Monomial:
    return Monomial((0,) * nvars)


def variable_monomial(nvars: int, index: int) -> Monomial:
    return Monomial(tuple(1 if i == index else 0 for i in range(nvars)))


@dataclass(frozen=True)
class MonomialOrder:
    """A graded term order, exposed as a sort key on exponent vectors."""

    name: str

    def key(self, m: Monomial):
        if self.name == "degrevlex":
            return (m.degree, tuple(-e for e in reversed(m.exponents)))
        if self.name == "deglex":
            return (m.degree, m.exponents)
        raise ValueError(f"unknown order {self.name!r}")

    def greater(self, a: Monomial, b: Monomial) -> bool:
        return self.key(a) > self.key(b)


DEGREVLEX = MonomialOrder("degrevlex")
DEGLEX = MonomialOrder("deglex")

ORDERS = {"degrevlex": DEGREVLEX, "deglex": DEGLEX}
