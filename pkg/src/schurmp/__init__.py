"""Linear codes over finite fields: Schur products and squares, matrix-product
constructions, cyclic codes via cyclotomic cosets, and one-point Hermitian
codes, with exact small-instance verification throughout."""

from .codes import LinearCode, singleton_square_bound, sum_codes
from .cyclic import (CosetSet, CyclicCode, RestrictedWeightConfig,
                     restricted_weight, restricted_weight_set)
from .errors import BudgetExceeded, VerificationError
from .galois import (ExtensionEmbedding, FiniteField, field_from_order,
                     make_field, minimal_polynomial, nth_root_of_unity)
from .hermitian import HermitianCurve, c_rs_params, hermitian_curve
from .linalg import GFMatrix
from .matrix_product import (MatrixProductSpec, MPDistanceReport, build,
                             distance_bound, dual_mp, product_uuv, square_msp,
                             square_uuv, square_vandermonde,
                             vandermonde_square_distance_bound)

__version__ = "0.1.0"

__all__ = [
    "BudgetExceeded", "CosetSet", "CyclicCode", "ExtensionEmbedding",
    "FiniteField", "GFMatrix", "HermitianCurve", "LinearCode",
    "MatrixProductSpec", "MPDistanceReport", "RestrictedWeightConfig",
    "VerificationError", "build", "c_rs_params", "distance_bound", "dual_mp",
    "field_from_order", "hermitian_curve", "make_field", "minimal_polynomial",
    "nth_root_of_unity", "product_uuv", "restricted_weight",
    "restricted_weight_set", "singleton_square_bound", "square_msp",
    "square_uuv", "square_vandermonde", "sum_codes",
    "vandermonde_square_distance_bound",
]
