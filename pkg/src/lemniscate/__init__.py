"""Exact complex multiplication for the lemniscatic sine over the Gaussian integers.

Main entry points: :func:`mult_map` and :func:`division_poly` for the
multiplication maps, :func:`lemniscate.lemnatomic.lemnatomic` for the lemnatomic polynomials,
:class:`PhiEvaluator` for numerical values of the lemniscatic sine.
"""

__version__ = "0.1.0"

from .chebyshev import chebyshev_T, factor_D, monic_C
from .cmfield import MultMap, RatFunc, compose_maps, division_poly, mult_map
from .construct import fermat_decomposition, is_constructible, power_of_two_test
from .errors import LemniscateError
from .gaussint import GaussInt, factor, normalize, parse_gaussint, unit_group_order
from .lemnatomic import LemnatomicRecord, frobenius_pattern, irreducibility_evidence
from .numlem import PhiEvaluator
from .zipoly import ZiPoly, format_poly

__all__ = [
    "GaussInt",
    "LemnatomicRecord",
    "LemniscateError",
    "MultMap",
    "PhiEvaluator",
    "RatFunc",
    "ZiPoly",
    "chebyshev_T",
    "compose_maps",
    "division_poly",
    "factor",
    "factor_D",
    "fermat_decomposition",
    "format_poly",
    "frobenius_pattern",
    "irreducibility_evidence",
    "is_constructible",
    "monic_C",
    "mult_map",
    "normalize",
    "parse_gaussint",
    "power_of_two_test",
    "unit_group_order",
]
