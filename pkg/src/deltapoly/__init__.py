"""Basic polynomial sequences of the delta operators a*D - b*D^(p+1),
Fuss-Catalan generating functions, Bessel polynomials, and the
inverse-Gaussian distribution family whose moments they are."""

from .series import (
    DEFAULT_ORDER,
    FormalPowerSeries,
    Poly,
    format_rational,
    fps_compose,
    fps_diff,
    fps_exp,
    fps_recip,
    fps_reverse,
    fps_sqrt,
    parse_rational,
    poly_diff,
    poly_eval,
    poly_from_strings,
    poly_to_strings,
    taylor_shift,
)
from .delta import (
    AbTriple,
    BinomialSequence,
    DeltaOperator,
    apply_delta,
    basic_sequence_closed,
    basic_sequence_generic,
    binomial_identity_check,
    f_series,
    random_triples,
)
from .fuss import FussSeries, fuss_number, fuss_series
from .bessel import (
    BesselPolySeq,
    bessel_egf_check,
    bessel_poly,
    carlitz_w,
    w_bessel_relation_check,
)
from .quadrature import (
    DEFAULT_CONFIG,
    QuadratureConfig,
    QuadratureError,
    QuadResult,
    integrate_half_line,
    integrate_interval,
)
from .distributions import (
    BesselMeasure,
    Dilated,
    DistSpec,
    GammaHalf,
    InverseGaussian,
    Report,
    bessel_k_half,
    bessel_k_quadrature,
    char_fun,
    char_fun_quadrature,
    convolution_factorization_check,
    density,
    ig_sample,
    kolmogorov_check,
    moment,
    moment_quadrature,
    semigroup_check,
)
from .sequences import SEQUENCE_IDS, SPECS, SequenceSpec, crosscheck, generate
from .verify import CRITERIA, CriterionResult, run_all

__version__ = "0.1.0"

__all__ = [
    "AbTriple", "BesselMeasure", "BesselPolySeq", "BinomialSequence",
    "CRITERIA", "CriterionResult", "DEFAULT_CONFIG", "DEFAULT_ORDER",
    "DeltaOperator", "Dilated", "DistSpec", "FormalPowerSeries",
    "FussSeries", "GammaHalf", "InverseGaussian", "Poly", "QuadResult",
    "QuadratureConfig", "QuadratureError", "Report", "SEQUENCE_IDS",
    "SPECS", "SequenceSpec", "apply_delta", "basic_sequence_closed",
    "basic_sequence_generic", "bessel_egf_check", "bessel_k_half",
    "bessel_k_quadrature", "bessel_poly", "binomial_identity_check",
    "carlitz_w", "char_fun", "char_fun_quadrature",
    "convolution_factorization_check", "crosscheck", "density",
    "f_series", "format_rational", "fps_compose", "fps_diff", "fps_exp",
    "fps_recip", "fps_reverse", "fps_sqrt", "fuss_number", "fuss_series",
    "generate", "ig_sample", "integrate_half_line", "integrate_interval",
    "kolmogorov_check", "moment", "moment_quadrature", "parse_rational",
    "poly_diff", "poly_eval", "poly_from_strings", "poly_to_strings",
    "random_triples", "run_all", "semigroup_check", "taylor_shift",
    "w_bessel_relation_check",
]
