"""Truncated and rational power series with the closed-form database.

Rational series are stored reduced with denominator constant term 1;
the unreduced class-formula denominators are kept alongside because the
sign statements about d(1) refer to them.  Expansion is the linear
recurrence from the denominator, exact in integers.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import ValidationError
from .fields import QQ, _is_prime
from .intpoly import IntPolynomial, divexact, poly_gcd
from .linalg import nullspace_list

PROVENANCE_TAGS = frozenset(
    {
        "golod-formula",
        "levin",
        "connected-sum",
        "compressed",
        "stretched",
        "kustin",
        "pade-reconstructed",
        "user-asserted",
    }
)


@dataclass(frozen=True)
class TruncatedSeries:
    """Integer coefficients a_0..a_N."""

    coefficients: tuple[int, ...]

    def __post_init__(self):
        if not self.coefficients:
            raise ValidationError("a truncated series needs at least one coefficient")

    @property
    def order(self) -> int:
        return len(self.coefficients) - 1

    def __getitem__(self, i: int) -> int:
        return self.coefficients[i]

    def __len__(self):
        return len(self.coefficients)

    def truncate(self, n: int) -> "TruncatedSeries":
        return TruncatedSeries(self.coefficients[: n + 1])

    def __str__(self):
        return "(" + ", ".join(str(c) for c in self.coefficients) + ")"


@dataclass(frozen=True)
class RationalSeries:
    """Reduced fraction of integer polynomials with denominator(0) = 1.

    ``full_denominator`` preserves the unreduced class-formula
    denominator when one exists; ``warnings`` carry provenance caveats
    (never silently dropped, never fatal).
    """

    numerator: IntPolynomial
    denominator: IntPolynomial
    provenance: str
    full_denominator: IntPolynomial | None = None
    warnings: tuple[str, ...] = ()

    def __post_init__(self):
        if self.provenance not in PROVENANCE_TAGS:
            raise ValidationError(f"unknown provenance tag {self.provenance!r}")
        if self.denominator[0] != 1:
            raise ValidationError("denominator constant term must be 1")

    @staticmethod
    def make(
        numerator: IntPolynomial,
        denominator: IntPolynomial,
        provenance: str,
        full_denominator: IntPolynomial | None = None,
        warnings: tuple[str, ...] = (),
    ) -> "RationalSeries":
        if denominator.is_zero():
            raise ValidationError("zero denominator")
        if numerator.is_zero():
            return RationalSeries(
                IntPolynomial.zero(), IntPolynomial.one(), provenance, full_denominator, warnings
            )
        g = poly_gcd(numerator, denominator)
        num = divexact(numerator, g)
        den = divexact(denominator, g)
        c0 = den[0]
        if c0 == 0:
            raise ValidationError("denominator vanishes at t = 0")
        if c0 < 0:
            num, den = -num, -den
            c0 = -c0
        if c0 != 1:
            raise ValidationError(
                f"reduced denominator has constant term {c0}; "
                "the expansion would not have integer coefficients"
            )
        return RationalSeries(num, den, provenance, full_denominator, warnings)

    def is_polynomial(self) -> bool:
        return self.denominator.degree == 0

    @property
    def denominator_at_one(self) -> int:
        v = self.denominator(1)
        return int(v)

    @property
    def full_denominator_at_one(self) -> int | None:
        if self.full_denominator is None:
            return None
        return int(self.full_denominator(1))

    def expand(self, order: int) -> TruncatedSeries:
        return expand(self, order)

    def __str__(self):
        if self.is_polynomial():
            return f"({self.numerator})"
        return f"({self.numerator})/({self.denominator})"


# -- expansion and comparison ------------------------------------------


def expand(rs: RationalSeries, order: int) -> TruncatedSeries:
    """First ``order + 1`` coefficients by the denominator recurrence."""
    if order < 0:
        raise ValidationError("order must be >= 0")
    p, d = rs.numerator, rs.denominator
    out = []
    for n in range(order + 1):
        a = p[n]
        for j in range(1, min(n, d.degree) + 1):
            a -= d[j] * out[n - j]
        out.append(a)
    return TruncatedSeries(tuple(out))


def series_compare(a: TruncatedSeries, b: TruncatedSeries) -> str:
    """Termwise verdict over the common order: one of ``equal``,
    ``a<=b``, ``b<=a``, ``incomparable``."""
    n = min(a.order, b.order)
    le = all(a[i] <= b[i] for i in range(n + 1))
    ge = all(a[i] >= b[i] for i in range(n + 1))
    if le and ge:
        return "equal"
    if le:
        return "a<=b"
    if ge:
        return "b<=a"
    return "incomparable"


# -- closed-form database -----------------------------------------------


def golod_series(e: int, h: tuple[int, ...]) -> RationalSeries:
    """(1+t)^e over 1 - sum h_i t^{i+1}: the upper-bound series attained
    exactly by Golod rings."""
    if e < 1:
        raise ValidationError("embedding dimension must be >= 1")
    if len(h) != e + 1:
        raise ValidationError(f"expected {e + 1} homology ranks, got {len(h)}")
    if h[0] != 1:
        raise ValidationError("h_0 must be 1")
    if any(x < 0 for x in h):
        raise ValidationError("homology ranks must be non-negative")
    num = IntPolynomial.of([1, 1]) ** e
    den_coeffs = [0] * (e + 2)
    den_coeffs[0] = 1
    for i in range(1, e + 1):
        den_coeffs[i + 1] = -h[i]
    den = IntPolynomial.of(den_coeffs)
    return RationalSeries.make(num, den, "golod-formula", full_denominator=den)


def levin_quotient_series(P: RationalSeries) -> RationalSeries:
    """Series of the residue field over R/socle(R), from the series over R.

    For an Artinian Gorenstein source of embedding dimension >= 2 the
    reciprocal drops by t^2.  A source with series exactly 1/(1 - t) is a
    non-regular hypersurface; its socle quotient is again one (length drops
    by 1), so the series is unchanged and the subtraction does not apply.
    """
    p, d = P.numerator, P.denominator
    if p.is_zero():
        raise ValidationError("zero series has no reciprocal")
    hypersurface = p == IntPolynomial.of([1]) and d == IntPolynomial.of([1, -1])
    if hypersurface:
        return RationalSeries.make(
            p,
            d,
            "levin",
            full_denominator=d,
            warnings=(
                "hypersurface source: the socle quotient is again a "
                "hypersurface, series unchanged",
            ),
        )
    new_den = d - IntPolynomial.t_power(2) * p
    warnings = []
    if expand(P, 1)[1] <= 1:
        warnings.append(
            "input has beta_1 <= 1: the socle-quotient formula assumes an "
            "Artinian Gorenstein source of embedding dimension >= 2"
        )
    return RationalSeries.make(
        p, new_den, "levin", full_denominator=new_den, warnings=tuple(warnings)
    )


def connected_sum_series(PS: RationalSeries, PT: RationalSeries) -> RationalSeries:
    """Series with reciprocal 1/PS + 1/PT + t^2 - 1."""
    ps, ds = PS.numerator, PS.denominator
    pt, dt = PT.numerator, PT.denominator
    if ps.is_zero() or pt.is_zero():
        raise ValidationError("zero series has no reciprocal")
    tt = IntPolynomial.of([-1, 0, 1])
    den = ds * pt + dt * ps + tt * ps * pt
    warnings = []
    if expand(PS, 1)[1] <= 1 and expand(PT, 1)[1] <= 1:
        warnings.append(
            "both inputs have beta_1 <= 1: the summand series should come "
            "from socle quotients of Gorenstein rings of length >= 3"
        )
    return RationalSeries.make(
        ps * pt, den, "connected-sum", full_denominator=den, warnings=tuple(warnings)
    )


def compressed_denominator(e: int, PQR: IntPolynomial) -> IntPolynomial:
    """1 - t(PQR - 1) + t^{e+1}(1 + t) for the compressed level family."""
    if PQR.degree != e:
        raise ValidationError(f"polynomial degree {PQR.degree} != embedding dimension {e}")
    if PQR[0] != 1:
        raise ValidationError("constant term must be 1")
    if any(c < 0 for c in PQR.coeffs):
        raise ValidationError("coefficients must be non-negative")
    t = IntPolynomial.t_power(1)
    return IntPolynomial.one() - t * (PQR - IntPolynomial.one()) + IntPolynomial.t_power(
        e + 1
    ) * IntPolynomial.of([1, 1])


def compressed_series(e: int, PQR: IntPolynomial) -> RationalSeries:
    den = compressed_denominator(e, PQR)
    num = IntPolynomial.of([1, 1]) ** e
    return RationalSeries.make(num, den, "compressed", full_denominator=den)


def stretched_series(e: int) -> RationalSeries:
    """1/(1 - et + t^2), with full denominator (1+t)^e (1 - et + t^2);
    the full value at 1 is 2^e (2 - e)."""
    if e < 1:
        raise ValidationError("embedding dimension must be >= 1")
    den = IntPolynomial.of([1, -e, 1])
    full = (IntPolynomial.of([1, 1]) ** e) * den
    warnings = ()
    if e == 1:
        warnings = (
            "the stretched non-complete-intersection family needs embedding dimension >= 3",
        )
    return RationalSeries.make(
        IntPolynomial.one(), den, "stretched", full_denominator=full, warnings=warnings
    )


def kustin_denominator(n: int, c: int) -> IntPolynomial:
    """Denominator for the two characteristic ranges of the n-th family
    member; c is 0 or a prime."""
    if n < 2:
        raise ValidationError("n must be >= 2")
    if c != 0 and not _is_prime(c):
        raise ValidationError("c must be 0 or a prime")
    lead = IntPolynomial.of([1, 1]) ** (2 * n + 1)
    body = IntPolynomial.of([1, -1]) ** (2 * n + 1)
    t3 = IntPolynomial.t_power(3)
    if c == 0 or c >= n + 1:
        return lead * (body - t3)
    if 2 * c >= n + 2 and c <= n:
        extra = (
            IntPolynomial.one()
            - IntPolynomial.t_power(2 * c + 1)
            - IntPolynomial.t_power(2 * c + 2)
        )
        return lead * (body * extra - t3)
    raise ValidationError(
        f"characteristic {c} falls in neither range for n = {n} "
        "(no closed form is known there)"
    )


# -- denominator reconstruction ----------------------------------------


def pade_reconstruct(
    ts: TruncatedSeries, max_num_deg: int, max_den_deg: int
) -> RationalSeries | None:
    """Smallest rational function matching every supplied coefficient.

    Needs at least one coefficient beyond the information boundary
    (order >= max_num_deg + max_den_deg + 1).  Candidates whose reduced
    primitive denominator has |constant term| != 1 cannot extend to an
    integer series and are discarded.  Returns None when nothing fits.
    """
    if max_num_deg < 0 or max_den_deg < 0:
        raise ValidationError("degree bounds must be >= 0")
    N = ts.order
    if N < max_num_deg + max_den_deg + 1:
        raise ValidationError(
            f"need at least {max_num_deg + max_den_deg + 2} coefficients, got {N + 1}"
        )
    a = ts.coefficients
    for dq in range(max_den_deg + 1):
        for dp in range(max_num_deg + 1):
            rs = _try_fit(a, dp, dq)
            if rs is not None:
                return rs
    return None


def _try_fit(a: tuple[int, ...], dp: int, dq: int) -> RationalSeries | None:
    N = len(a) - 1
    rows = range(dp + 1, N + 1)
    if not rows:
        return None
    # unknowns d_1..d_dq plus the scale of d_0; a null vector with a
    # nonzero last coordinate solves sum_j d_j a_{n-j} = 0 for n > dp
    cols = []
    for j in range(1, dq + 1):
        cols.append({r: a[n - j] for r, n in enumerate(rows) if 0 <= n - j and a[n - j]})
    cols.append({r: a[n] for r, n in enumerate(rows) if a[n]})
    for vec in nullspace_list(cols, QQ):
        lam = vec.get(dq, 0)
        if lam == 0:
            continue
        den = IntPolynomial.of([lam] + [vec.get(j - 1, 0) for j in range(1, dq + 1)])
        num_coeffs = []
        for n in range(dp + 1):
            num_coeffs.append(sum(den[j] * a[n - j] for j in range(0, min(n, dq) + 1)))
        num = IntPolynomial.of(num_coeffs)
        if num.is_zero() and any(a):
            continue
        g = poly_gcd(num, den) if not num.is_zero() else den
        num_r = divexact(num, g) if not num.is_zero() else IntPolynomial.zero()
        den_r = divexact(den, g)
        if abs(den_r[0]) != 1:
            continue
        if den_r[0] == -1:
            num_r, den_r = -num_r, -den_r
        candidate = RationalSeries.make(num_r, den_r, "pade-reconstructed")
        if expand(candidate, N).coefficients == a:
            return candidate
    return None
