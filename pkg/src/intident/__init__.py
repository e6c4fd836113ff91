"""Verification engine for a family of definite-integral and hypergeometric
function identities.

Every identity is checked along two independent routes: singularity-aware
numerical quadrature (tanh-sinh) on one side, exact rational/polynomial
algebra on the other.  Numeric checks produce residual reports; symbolic
checks (telescoping certificates, polynomial corollaries) are exact yes/no.
"""

__version__ = "0.1.0"

from .identities import IdentityReport
from .quadrature import NonConvergence, QuadResult, WeightedIntegrand

__all__ = [
    "IdentityReport",
    "NonConvergence",
    "QuadResult",
    "WeightedIntegrand",
    "__version__",
]
