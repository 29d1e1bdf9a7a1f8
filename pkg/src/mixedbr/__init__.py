"""Bruce-Roberts Milnor and Tjurina numbers, logarithmic vector fields and mixed sequences,
computed exactly with standard bases over local orderings."""

__version__ = "0.1.0"

from .config import SamplingConfig
from .derlog import DerlogModule, VarietySpec, derlog, derlog_syzygy, is_free_divisor
from .errors import HypothesisError, ParseError, ReducednessError, ResourceLimitError
from .invariants import milnor, milnor_icis, mu_X, tau_X
from .poly import Poly, PolyMatrix, RingSpec, VecPoly
from .sections import LinearSection, mu_star, mu_X_star
from .stdbasis import INFINITE, SubModule, colength, std_basis

__all__ = [
    "INFINITE", "DerlogModule", "HypothesisError", "LinearSection", "ParseError", "Poly", "PolyMatrix",
    "ReducednessError", "ResourceLimitError", "RingSpec", "SamplingConfig", "SubModule", "VarietySpec",
    "VecPoly", "colength", "derlog", "derlog_syzygy", "is_free_divisor", "milnor", "milnor_icis", "mu_X",
    "mu_star", "mu_X_star", "std_basis", "tau_X",
]
