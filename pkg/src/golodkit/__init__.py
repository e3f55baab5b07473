"""Exact homological invariants of graded Artinian quotient rings.

Everything here is exact: coefficients live in QQ or GF(p), series and
denominators are integer polynomials, and root enclosures are rational
intervals.  The layers, bottom to top:

  fields / poly / parser   exact scalars and homogeneous polynomials
  quotient                 Artinian quotient rings and constructions
  resolution / koszul / tor  minimal free resolutions and derived functors
  series / analysis        Poincare series formulas, root isolation,
                           curvature, Tor-vanishing certificates
  cli                      session files and report documents
"""

from .errors import (
    BudgetExceededError,
    ContextMismatchError,
    FieldError,
    GolodkitError,
    InternalCheckError,
    NotArtinianError,
    ParseError,
    SessionError,
    ValidationError,
)
from .fields import GF, QQ, Field, PrimeField
from .poly import PolyContext, Polynomial, format_polynomial
from .parser import parse_poly
from .intpoly import (
    IntPolynomial,
    divexact,
    poly_gcd,
    squarefree_decomposition,
)
from .quotient import (
    MultiplicityBound,
    QuotientRing,
    RingElement,
    RingInvariants,
    annihilator,
    connected_sum,
    exact_pair_check,
    fiber_product,
    make_ring,
    montano_lyle_check,
    principal_ideal_span,
    tensor_product,
    teter_quotient,
)
from .resolution import (
    BettiTable,
    CertificateReport,
    MinimalizedModule,
    ModulePresentation,
    Resolution,
    exactness_certificate,
    minimalize,
    resolve,
)
from .koszul import KoszulHomology, koszul_homology
from .tor import TorTable, tor
from .series import (
    RationalSeries,
    TruncatedSeries,
    compressed_denominator,
    compressed_series,
    connected_sum_series,
    expand,
    golod_series,
    kustin_denominator,
    levin_quotient_series,
    pade_reconstruct,
    series_compare,
    stretched_series,
)
from .analysis import (
    Certificate,
    CurvatureEstimate,
    IsolatedRoot,
    PoleCountResult,
    RootReport,
    SignCheckResult,
    classify_curvature,
    curvature_from_betti,
    curvature_from_denominator,
    denominator_sign_check,
    real_roots_unit_interval,
    single_pole_check,
    torvanishing_certificate,
)

__version__ = "0.1.0"

__all__ = [
    "GolodkitError",
    "FieldError",
    "ContextMismatchError",
    "ParseError",
    "ValidationError",
    "NotArtinianError",
    "SessionError",
    "BudgetExceededError",
    "InternalCheckError",
    "Field",
    "PrimeField",
    "QQ",
    "GF",
    "PolyContext",
    "Polynomial",
    "format_polynomial",
    "parse_poly",
    "IntPolynomial",
    "divexact",
    "poly_gcd",
    "squarefree_decomposition",
    "QuotientRing",
    "RingElement",
    "RingInvariants",
    "MultiplicityBound",
    "make_ring",
    "annihilator",
    "exact_pair_check",
    "tensor_product",
    "fiber_product",
    "connected_sum",
    "teter_quotient",
    "montano_lyle_check",
    "principal_ideal_span",
    "ModulePresentation",
    "MinimalizedModule",
    "minimalize",
    "BettiTable",
    "Resolution",
    "resolve",
    "CertificateReport",
    "exactness_certificate",
    "KoszulHomology",
    "koszul_homology",
    "TorTable",
    "tor",
    "TruncatedSeries",
    "RationalSeries",
    "expand",
    "series_compare",
    "golod_series",
    "levin_quotient_series",
    "connected_sum_series",
    "compressed_denominator",
    "compressed_series",
    "stretched_series",
    "kustin_denominator",
    "pade_reconstruct",
    "IsolatedRoot",
    "RootReport",
    "real_roots_unit_interval",
    "PoleCountResult",
    "single_pole_check",
    "SignCheckResult",
    "denominator_sign_check",
    "CurvatureEstimate",
    "curvature_from_denominator",
    "curvature_from_betti",
    "Certificate",
    "torvanishing_certificate",
    "classify_curvature",
    "__version__",
]
