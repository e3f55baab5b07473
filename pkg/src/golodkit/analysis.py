"""Exact root isolation in (0,1] and the checks built on top of it.

Everything here is rational arithmetic; no floats enter any certified
path.  Curvature estimates derived from a Betti sequence are tagged
heuristic-only and are refused by the classifier.
"""

from dataclasses import dataclass
from fractions import Fraction
from typing import NamedTuple

from .errors import InternalCheckError, ValidationError
from .intpoly import IntPolynomial, squarefree_decomposition
from .series import PROVENANCE_TAGS, RationalSeries, TruncatedSeries, expand

DEFAULT_WIDTH = Fraction(1, 2**20)


# -- Sturm sequences ---------------------------------------------------


def _trim(coeffs: list[Fraction]) -> list[Fraction]:
    while coeffs and coeffs[-1] == 0:
        coeffs.pop()
    return coeffs


def _rem(a: list[Fraction], b: list[Fraction]) -> list[Fraction]:
    # remainder of a by b, b nonzero, both trimmed
    a = a[:]
    db = len(b) - 1
    lead = b[-1]
    while len(a) - 1 >= db and a:
        f = a[-1] / lead
        k = len(a) - 1 - db
        for i in range(db):
            a[k + i] -= f * b[i]
        a.pop()
        _trim(a)
    return a


def _sturm_chain(g: IntPolynomial) -> list[list[Fraction]]:
    """Chain for a squarefree g; ends in a nonzero constant."""
    p0 = _trim([Fraction(c) for c in g.coeffs])
    p1 = _trim([Fraction(i * c) for i, c in enumerate(g.coeffs)][1:])
    chain = [p0]
    while p1:
        chain.append(p1)
        r = [-c for c in _rem(p0, p1)]
        p0, p1 = p1, r
    return chain


def _eval_list(p: list[Fraction], x: Fraction) -> Fraction:
    acc = Fraction(0)
    for c in reversed(p):
        acc = acc * x + c
    return acc


def _variations(chain: list[list[Fraction]], x: Fraction) -> int:
    last = 0
    count = 0
    for p in chain:
        v = _eval_list(p, x)
        if v == 0:
            continue
        s = 1 if v > 0 else -1
        if last and s != last:
            count += 1
        last = s
    return count


def _count(chain: list[list[Fraction]], a: Fraction, b: Fraction) -> int:
    """Distinct roots in the half-open interval (a, b]."""
    return _variations(chain, a) - _variations(chain, b)


# -- isolation ---------------------------------------------------------


def _refine(g, chain, a, b, eps):
    # exactly one root in (a, b]; shrink to width <= eps or hit it exactly
    if g(b) == 0:
        return b, b
    while b - a > eps:
        m = (a + b) / 2
        if g(m) == 0:
            return m, m
        if _count(chain, a, m) == 1:
            b = m
        else:
            a = m
    return a, b


def _isolate(g, chain, lo, hi, eps):
    """Disjoint intervals, one per distinct root of g in (lo, hi]."""
    out = []

    def split(a, b, n):
        if n == 0:
            return
        if n == 1:
            out.append(_refine(g, chain, a, b, eps))
            return
        m = (a + b) / 2
        nl = _count(chain, a, m)
        split(a, m, nl)
        split(m, b, n - nl)

    split(lo, hi, _count(chain, lo, hi))
    return out


def _halve(entry):
    g, chain, a, b = entry[0], entry[1], entry[2], entry[3]
    m = (a + b) / 2
    if g(m) == 0:
        entry[2] = entry[3] = m
    elif _count(chain, a, m) == 1:
        entry[3] = m
    else:
        entry[2] = m


@dataclass(frozen=True)
class IsolatedRoot:
    """One real root: a rational enclosure and its multiplicity."""

    lower: Fraction
    upper: Fraction
    multiplicity: int

    @property
    def exact(self) -> Fraction | None:
        return self.lower if self.lower == self.upper else None


@dataclass(frozen=True)
class RootReport:
    polynomial: IntPolynomial
    epsilon: Fraction
    roots: tuple[IsolatedRoot, ...]
    domain: str = "(0,1]"

    @property
    def distinct_count(self) -> int:
        return len(self.roots)

    @property
    def count_with_multiplicity(self) -> int:
        return sum(r.multiplicity for r in self.roots)


def real_roots_unit_interval(
    p: IntPolynomial, epsilon: Fraction = DEFAULT_WIDTH
) -> RootReport:
    """Isolate the real roots of p in (0, 1].

    Sturm counts run on each squarefree factor; bisection shrinks every
    enclosure below ``epsilon``.  A root hit exactly (including t = 1)
    comes back as a degenerate interval.  Multiplicities are read off
    the squarefree decomposition.
    """
    if p.is_zero():
        raise ValidationError("cannot isolate roots of the zero polynomial")
    eps = Fraction(epsilon)
    if eps <= 0:
        raise ValidationError("epsilon must be positive")
    entries = []
    for g, mult in squarefree_decomposition(p):
        if g.degree < 1:
            continue
        chain = _sturm_chain(g)
        for a, b in _isolate(g, chain, Fraction(0), Fraction(1), eps):
            entries.append([g, chain, a, b, mult])
    # distinct roots of coprime factors: closed enclosures must separate
    while True:
        entries.sort(key=lambda e: (e[2], e[3]))
        clash = None
        for i in range(len(entries) - 1):
            if entries[i][3] >= entries[i + 1][2]:
                clash = (entries[i], entries[i + 1])
                break
        if clash is None:
            break
        moved = False
        for e in clash:
            if e[2] != e[3]:
                _halve(e)
                moved = True
        if not moved:
            raise InternalCheckError("two exact roots coincide")
    roots = tuple(IsolatedRoot(e[2], e[3], e[4]) for e in entries)
    return RootReport(polynomial=p, epsilon=eps, roots=roots)


# -- denominator checks ------------------------------------------------


class PoleCountResult(NamedTuple):
    ok: bool
    root_count: int


def single_pole_check(d: IntPolynomial) -> PoleCountResult:
    """At most one root in the open interval (0, 1), with multiplicity.

    Denominators of the rational-series catalogue must pass this; a
    failure marks a polynomial that cannot occur as one.
    """
    if d.is_zero():
        raise ValidationError("zero polynomial has no pole structure")
    total = 0
    for g, mult in squarefree_decomposition(d):
        if g.degree < 1:
            continue
        chain = _sturm_chain(g)
        n = _count(chain, Fraction(0), Fraction(1))
        if g(1) == 0:
            n -= 1
        total += n * mult
    return PoleCountResult(total <= 1, total)


class SignCheckResult(NamedTuple):
    value: int
    nonpositive: bool


def denominator_sign_check(d: IntPolynomial) -> SignCheckResult:
    """Exact d(1) and whether d(1) <= 0 (expected of catalogue denominators)."""
    v = int(d(1))
    return SignCheckResult(v, v <= 0)


# -- curvature ---------------------------------------------------------


@dataclass(frozen=True)
class CurvatureEstimate:
    """Growth rate of a coefficient sequence.

    kind:   zero | one | value | heuristic-only
    source: denominator | betti-sequence

    For the first three kinds [low, high] encloses the growth rate to
    width <= 2^-20 and pole encloses the radius.  heuristic-only
    estimates expose ratios and root powers but certify nothing.
    """

    kind: str
    source: str
    low: Fraction
    high: Fraction
    pole: tuple[Fraction, Fraction] | None = None
    ratios: tuple[Fraction, ...] = ()
    root_powers: tuple[tuple[Fraction, Fraction], ...] = ()

    @property
    def exact(self) -> Fraction | None:
        return self.low if self.low == self.high else None

    @property
    def certified(self) -> bool:
        return self.kind in ("zero", "one", "value")


def _rational_root_between(d: IntPolynomial, lo: Fraction, hi: Fraction):
    # d(0) = 1 forces rational roots into the form 1/q, q dividing the lead
    lead = abs(d.coeffs[-1])
    for q in range(1, lead + 1):
        if lead % q:
            continue
        x = Fraction(1, q)
        if lo <= x <= hi and d(x) == 0:
            return x
    return None


def curvature_from_denominator(rs: RationalSeries) -> CurvatureEstimate:
    """Growth rate from the reduced denominator's smallest root in (0, 1]."""
    coeffs = expand(rs, 16).coefficients
    if any(c < 0 for c in coeffs):
        raise ValidationError("series has a negative coefficient; not a Poincare expansion")
    if rs.is_polynomial():
        return CurvatureEstimate("zero", "denominator", Fraction(0), Fraction(0))
    den = rs.denominator
    eps = DEFAULT_WIDTH
    while True:
        report = real_roots_unit_interval(den, eps)
        if not report.roots:
            raise ValidationError(
                "denominator has no root in (0,1]; a nonnegative non-polynomial "
                "series must have its radius of convergence there"
            )
        first = report.roots[0]
        lo, hi = first.lower, first.upper
        if first.exact is None:
            r = _rational_root_between(den, lo, hi)
            if r is not None:
                lo = hi = r
        if lo == hi:
            if lo == 1:
                return CurvatureEstimate(
                    "one", "denominator", Fraction(1), Fraction(1), pole=(lo, hi)
                )
            return CurvatureEstimate(
                "value", "denominator", 1 / lo, 1 / lo, pole=(lo, hi)
            )
        if lo > 0 and (hi - lo) / (lo * hi) <= DEFAULT_WIDTH:
            return CurvatureEstimate(
                "value", "denominator", 1 / hi, 1 / lo, pole=(lo, hi)
            )
        eps /= 2**10


def _nth_root_floor(x: int, n: int) -> int:
    if x < 0:
        raise ValidationError("negative radicand")
    if x == 0:
        return 0
    r = 1 << -(-x.bit_length() // n)
    while True:
        s = ((n - 1) * r + x // r ** (n - 1)) // n
        if s >= r:
            break
        r = s
    while r**n > x:
        r -= 1
    while (r + 1) ** n <= x:
        r += 1
    return r


def curvature_from_betti(ts: TruncatedSeries) -> CurvatureEstimate:
    """Ratio and n-th root diagnostics for a Betti sequence.

    Tagged heuristic-only: a finite window of a sequence bounds no
    limsup, so this never feeds a certificate or the classifier.
    """
    coeffs = ts.coefficients
    if len(coeffs) < 4:
        raise ValidationError("need at least 4 terms for a growth heuristic")
    if any(c < 0 for c in coeffs):
        raise ValidationError("Betti numbers are nonnegative")
    ratios = tuple(
        Fraction(coeffs[n + 1], coeffs[n])
        for n in range(len(coeffs) - 1)
        if coeffs[n] > 0
    )
    scale = 2**10
    powers = []
    for n in range(1, len(coeffs)):
        b = coeffs[n]
        if b == 0:
            powers.append((Fraction(0), Fraction(0)))
            continue
        m = _nth_root_floor(b * scale**n, n)
        powers.append((Fraction(m, scale), Fraction(m + 1, scale)))
    low, high = powers[-1]
    return CurvatureEstimate(
        "heuristic-only",
        "betti-sequence",
        low,
        high,
        ratios=ratios,
        root_powers=tuple(powers),
    )


# -- certificates ------------------------------------------------------


@dataclass(frozen=True)
class Certificate:
    """Outcome of the denominator nonvanishing test at t = 1.

    tor-vanishing is always conditional on the caller's assertion that
    the denominator is shared by the series of every finitely generated
    module over the ring; this code cannot decide that.
    """

    verdict: str  # tor-vanishing | inconclusive | not-applicable
    d_at_one: int
    provenance: str
    asserted: bool
    rationale: str


def torvanishing_certificate(
    d: IntPolynomial, provenance: str, generalized_golod_asserted: bool
) -> Certificate:
    if d.is_zero():
        raise ValidationError("denominator must be nonzero")
    if provenance not in PROVENANCE_TAGS:
        raise ValidationError(f"unknown provenance tag {provenance!r}")
    v = int(d(1))
    if v == 0:
        verdict = "inconclusive"
        rationale = (
            "the denominator vanishes at t = 1, so the nonvanishing test "
            "carries no information; complete intersections and other "
            "boundary rings land here"
        )
    elif not generalized_golod_asserted:
        verdict = "not-applicable"
        rationale = (
            f"d(1) = {v} is nonzero, but the denominator was not asserted "
            "to be common to the series of every finitely generated module, "
            "so no conclusion about Tor is drawn"
        )
    else:
        verdict = "tor-vanishing"
        rationale = (
            f"d(1) = {v} is nonzero and the denominator is asserted common "
            "to the series of every finitely generated module; whenever "
            "Tor_i(M, N) = 0 for all large i, one of M, N must then have "
            "finite projective dimension"
        )
    return Certificate(verdict, v, provenance, generalized_golod_asserted, rationale)


def classify_curvature(
    est: CurvatureEstimate, curv_k: CurvatureEstimate, tol: Fraction = Fraction(1, 2**20)
) -> str:
    """Match a module's growth rate against {0, 1, rate of the residue field}.

    Interval comparisons are widened by tol.  Anything outside the three
    allowed values is reported as a violation, never absorbed.
    """
    if not est.certified or not curv_k.certified:
        raise ValidationError("classification requires exact enclosures")
    tol = Fraction(tol)
    if tol < 0:
        raise ValidationError("tol must be nonnegative")
    if est.kind == "zero":
        return "0"
    if est.low - tol <= 1 <= est.high + tol:
        return "1"
    if est.low - tol <= curv_k.high + tol and curv_k.low - tol <= est.high + tol:
        return "curv_k"
    return "violation"
