"""Double Toeplitz LCD codes over finite fields.

Exact field arithmetic, Dickson-polynomial spectra of tridiagonal Toeplitz
matrices, forbidden-set LCD decisions checked against brute-force oracles,
and concatenation with trace isometries.
"""

from .codes import LinearCode, dual_code, hull_dimension, is_lcd, min_distance, weight_distribution
from .concat import (
    ConcatenatedCode,
    IsometryMap,
    apply_map,
    concatenate,
    construct_lcd_concat,
    is_isometry_oracle,
    isometry_from_coeffs,
    search_isometry,
)
from .dickson import dickson_eval, dickson_poly, dickson_roots, factor_profile
from .dtcode import (
    DTParams,
    build_tridiag,
    dt_generator,
    existence_diagnosis,
    forbidden_set,
    is_lcd_direct,
    is_lcd_theorem,
    spectrum,
)
from .galois import FieldElement, FiniteField, embed_build, field_create, parse_field
from .reproduce import ReproduceReport, reproduce, reproduce_all

__version__ = "0.1.0"
