"""Exact construction and verification of exceptional Bannai-Ito polynomials."""
from .bannai_ito import (DEFAULT_PARAMS, BIParams, bi_eigenvalue, bi_grid, bi_operator,
                         bi_weight, solve_bi_polynomial, truncate, validate_genericity)
from .darboux import (SeedData, Unsupported, build_seed, degree_set, exceptional_operator,
                      missing_eigenfunction, tabulated_degrees, transform_operator,
                      verify_intertwining, xbi_family, xbi_polynomial)
from .dunkl import I, R, RTR, T, TR, DunklOperator, apply, compose, conjugate, op_equal
from .errors import *  # noqa: F401,F403
from .exact import Poly, RatFunc, parse_rational
from .gauge import SeedIndex, appendix_a_coefficients, conjugated_operator, gauge_class, sigma
from .multistep import build_chain, chain_eigenfunction, check_determinant
from .orthogonality import (exceptional_grid, exceptional_weight, gram_matrix,
                            positivity_scan, sample_positivity)
from .variants import variant_operator, variant_spec, variant_xbi

__version__ = "0.1.0"
