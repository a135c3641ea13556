"""
Diophantine 元组与二次域整理想
Norm tuples - exact ideal arithmetic in Q(sqrt(n)) for Diophantine m-tuples
"""

__version__ = "0.1.0"
__description__ = "Exact ideal arithmetic in quadratic fields for Diophantine m-tuples"

from .arith import (
    Discriminant, Factorization, factorize, fundamental_discriminant, is_squarefree, isqrt,
    kronecker, nth_root_exact, squarefree_core,
)
from .config import NumericConfig, load_config
from .errors import (
    ConfigError, DegenerateFieldError, DomainError, FactorizationError, NormTupleError,
    NotAPairError, PreconditionError, TheoremViolation,
)
from .field import (
    AlgInt, OmegaMode, QuadField, SplitKind, SplitType, alpha_from_pair, elem_arith,
    field_new, parse_element, split_type, trace_norm,
)
from .ideal import (
    IdealHNF, find_generator_bounded, ideal_conjugate, ideal_contains, ideal_eq,
    ideal_from_generators, ideal_mul, ideal_norm, ideal_of_norm, ideal_pow, prime_above,
    principal_ideal, unit_ideal,
)
from .tuples import (
    DiophTuple, NormDecomposition, PairConstruction, construct_pair_ideals,
    construct_tuple_ideals, divisibility_check, extend_tuple, find_principal_generators,
    kappa, kappa_pair, norm_decompose, scale_pair, search_tuples, verify_tuple,
)
