"""Sharp Gagliardo-Nirenberg and Sobolev constants."""

from ._core import (
    NumericalError,
    bessel_j,
    bessel_k,
    best_bounds,
    classify,
    f_linf,
    g_spec,
    gamma,
    hls_constant,
    hyp2f1_neg,
    lower_minus,
    lower_minusminus,
    meijer_g,
    profile_ab,
    riesz_constant,
    sharp_linf,
    sharp_theta1,
    theta1_maximizer,
    upper_plus,
    upper_plusplus,
)

__all__ = [
    "NumericalError",
    "bessel_j",
    "bessel_k",
    "best_bounds",
    "classify",
    "f_linf",
    "g_spec",
    "gamma",
    "hls_constant",
    "hyp2f1_neg",
    "lower_minus",
    "lower_minusminus",
    "meijer_g",
    "profile_ab",
    "riesz_constant",
    "sharp_linf",
    "sharp_theta1",
    "theta1_maximizer",
    "upper_plus",
    "upper_plusplus",
]
