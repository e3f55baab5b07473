"""Sparse multivariate polynomials over QQ or GF(p).

A polynomial is a map from monomials to nonzero scalars, tied to a
``PolyContext`` (ordered variable names + field).  Values are immutable;
every operation returns a new polynomial with zero coefficients dropped.
Terms are displayed in descending degree-lexicographic order.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations_with_replacement
from typing import Iterable, Iterator, Mapping

from .errors import ContextMismatchError, ValidationError
from .fields import Field, Scalar
from .monomials import DEGLEX, Monomial, one_monomial, variable_monomial

_IDENT_OK = lambda s: s and (s[0].isalpha()) and all(c.isalnum() or c == "_" for c in s)


@dataclass(frozen=True)
class PolyContext:
    """An ordered tuple of variable names over a fixed field."""

    variables: tuple[str, ...]
    field: Field

    def __post_init__(self):
        if len(set(self.variables)) != len(self.variables):
            raise ValidationError(f"duplicate variable names in {self.variables}")
        for v in self.variables:
            if not _IDENT_OK(v):
                raise ValidationError(f"invalid variable name {v!r}")

    @property
    def nvars(self) -> int:
        return len(self.variables)

    def index(self, name: str) -> int:
        return self.variables.index(name)

    def variable(self, name: str) -> "Polynomial":
        i = self.index(name)
        return Polynomial(self, {variable_monomial(self.nvars, i): self.field.one})

    def constant(self, value) -> "Polynomial":
        c = self.field.coerce(value)
        if self.field.is_zero(c):
            return Polynomial(self, {})
        return Polynomial(self, {one_monomial(self.nvars): c})

    def zero(self) -> "Polynomial":
        return Polynomial(self, {})

    def one(self) -> "Polynomial":
        return self.constant(1)


@dataclass(frozen=True)
class HomogeneityCheck:
    """Outcome of a homogeneity test: a degree, `mixed`, or the zero poly."""

    degree: int | None
    is_zero: bool


class Polynomial:
    """Immutable sparse polynomial.  Build via ``PolyContext`` helpers,
    ``from_terms``, or the expression parser."""

    __slots__ = ("context", "terms")

    def __init__(self, context: PolyContext, terms: Mapping[Monomial, Scalar]):
        self.context = context
        self.terms = dict(terms)

    @classmethod
    def from_terms(
        cls, context: PolyContext, pairs: Iterable[tuple[Monomial, Scalar]]
    ) -> "Polynomial":
        f = context.field
        acc: dict[Monomial, Scalar] = {}
        for mono, coeff in pairs:
            c = f.coerce(coeff)
            if mono in acc:
                c = f.add(acc[mono], c)
            if f.is_zero(c):
                acc.pop(mono, None)
            else:
                acc[mono] = c
        return cls(context, acc)

    # -- predicates -----------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def degree(self) -> int | None:
        """Total degree; None for the zero polynomial."""
        if not self.terms:
            return None
        return max(m.degree for m in self.terms)

    def homogeneous_degree(self) -> HomogeneityCheck:
        if not self.terms:
            return HomogeneityCheck(None, True)
        degs = {m.degree for m in self.terms}
        if len(degs) == 1:
            return HomogeneityCheck(degs.pop(), False)
        return HomogeneityCheck(None, False)

    # -- arithmetic -----------------------------------------------------

    def _check(self, other: "Polynomial"):
        if self.context != other.context:
            raise ContextMismatchError(
                f"operands over different contexts: {self.context.variables} vs "
                f"{other.context.variables}"
            )

    def __add__(self, other: "Polynomial") -> "Polynomial":
        self._check(other)
        f = self.context.field
        acc = dict(self.terms)
        for m, c in other.terms.items():
            s = f.add(acc.get(m, f.zero), c)
            if f.is_zero(s):
                acc.pop(m, None)
            else:
                acc[m] = s
        return Polynomial(self.context, acc)

    def __neg__(self) -> "Polynomial":
        f = self.context.field
        return Polynomial(self.context, {m: f.neg(c) for m, c in self.terms.items()})

    def __sub__(self, other: "Polynomial") -> "Polynomial":
        return self + (-other)

    def __mul__(self, other: "Polynomial") -> "Polynomial":
        self._check(other)
        f = self.context.field
        acc: dict[Monomial, Scalar] = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                m = m1.mul(m2)
                s = f.add(acc.get(m, f.zero), f.mul(c1, c2))
                if f.is_zero(s):
                    acc.pop(m, None)
                else:
                    acc[m] = s
        return Polynomial(self.context, acc)

    def __pow__(self, n: int) -> "Polynomial":
        if n < 0:
            raise ValidationError("negative polynomial power")
        out = self.context.one()
        for _ in range(n):
            out = out * self
        return out

    def scale(self, c) -> "Polynomial":
        f = self.context.field
        c = f.coerce(c)
        if f.is_zero(c):
            return self.context.zero()
        return Polynomial(self.context, {m: f.mul(v, c) for m, v in self.terms.items()})

    def coefficient(self, mono: Monomial) -> Scalar:
        return self.terms.get(mono, self.context.field.zero)

    def graded_part(self, d: int) -> "Polynomial":
        return Polynomial(
            self.context, {m: c for m, c in self.terms.items() if m.degree == d}
        )

    def substitute(self, assignment: Mapping[str, "Polynomial"]) -> "Polynomial":
        """Replace named variables with polynomials (same context)."""
        ctx = self.context
        idx = {ctx.index(name): p for name, p in assignment.items()}
        for p in idx.values():
            self._check(p)
        out = ctx.zero()
        for mono, coeff in self.terms.items():
            piece = ctx.constant(coeff)
            residue = list(mono.exponents)
            for i, p in idx.items():
                e = residue[i]
                if e:
                    residue[i] = 0
                    piece = piece * (p**e)
            piece = piece * Polynomial(
                ctx, {Monomial(tuple(residue)): ctx.field.one}
            )
            out = out + piece
        return out

    # -- comparison / display -------------------------------------------

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Polynomial)
            and self.context == other.context
            and self.terms == other.terms
        )

    def __hash__(self):
        return hash((self.context, frozenset(self.terms.items())))

    def sorted_terms(self) -> list[tuple[Monomial, Scalar]]:
        return sorted(self.terms.items(), key=lambda t: DEGLEX.key(t[0]), reverse=True)

    def __str__(self) -> str:
        return format_polynomial(self)

    def __repr__(self) -> str:
        return f"Polynomial({format_polynomial(self)!r})"


def _format_monomial(mono: Monomial, names: tuple[str, ...]) -> str:
    parts = []
    for name, e in zip(names, mono.exponents):
        if e == 1:
            parts.append(name)
        elif e > 1:
            parts.append(f"{name}^{e}")
    return "*".join(parts)


def _coeff_str(c: Scalar) -> str:
    if isinstance(c, Fraction) and c.denominator != 1:
        return f"{c.numerator}/{c.denominator}"
    return str(int(c))


def format_polynomial(p: Polynomial) -> str:
    """Deterministic rendering, re-parseable when coefficients are integers.

    A leading negative unit coefficient is written explicitly (``-1*x^2``)
    whenever the first factor carries an exponent: the grammar binds ``-``
    tighter than ``^``, so ``-x^2`` would read back as ``(-x)^2``.
    """
    if p.is_zero():
        return "0"
    names = p.context.variables
    chunks: list[str] = []
    for i, (mono, coeff) in enumerate(p.sorted_terms()):
        neg = (isinstance(coeff, Fraction) or isinstance(coeff, int)) and coeff < 0
        mag = -coeff if neg else coeff
        mono_s = _format_monomial(mono, names)
        if not mono_s:
            body = _coeff_str(mag)
        elif mag == 1:
            body = mono_s
        else:
            body = f"{_coeff_str(mag)}*{mono_s}"
        if i == 0:
            if neg:
                first_factor_has_power = bool(mono_s) and "^" in mono_s.split("*", 1)[0]
                if mag == 1 and first_factor_has_power:
                    body = f"1*{mono_s}"
                chunks.append(f"-{body}")
            else:
                chunks.append(body)
        else:
            chunks.append(f"{'-' if neg else '+'} {body}")
    return " ".join(chunks)


def monomials_of_degree(nvars: int, d: int) -> Iterator[Monomial]:
    """All degree-``d`` monomials, in descending deglex order."""
    if nvars == 0:
        if d == 0:
            yield Monomial(())
        return
    for combo in combinations_with_replacement(range(nvars), d):
        exps = [0] * nvars
        for i in combo:
            exps[i] += 1
        yield Monomial(tuple(exps))
