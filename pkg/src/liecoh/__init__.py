"""Exact Lie algebra cohomology and a certifying 2-triviality classifier."""

from .cohomology import cohomology, differential_matrix, is_coboundary
from .liealg import LieAlgebra, Subspace, direct_sum, quotient, validate
from .rep import Representation, adjoint, dual, tensor, trivial
from .theorems import Verdict, WitnessCertificate, classify, verify_certificate

__all__ = [
    "LieAlgebra", "Subspace", "direct_sum", "quotient", "validate",
    "Representation", "adjoint", "dual", "tensor", "trivial",
    "cohomology", "differential_matrix", "is_coboundary",
    "Verdict", "WitnessCertificate", "classify", "verify_certificate",
]
__version__ = "0.1.0"
