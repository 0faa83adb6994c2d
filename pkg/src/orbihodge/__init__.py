"""Exact McKay-correspondence invariants for finite group quotients.

Stringy E-functions of linear symplectic quotients, Hodge numbers of
symplectic resolutions of T*P^n/G, necessary conditions for such
resolutions, and Poincare series of Hilbert schemes of points on T*Sigma.
"""
from .cyclotomic import Cyclotomic, cyc_make, zeta
from .epoly import EPoly, euler_number, geometric_sum
from .errors import ConsistencyError, PreconditionError
from .matgroup import CycMatrix, MatrixGroup, closure, cotangent_lift
from .mckay import euler_tpn, hodge_tpn, stringy_e_linear_symplectic

__all__ = [
    "Cyclotomic",
    "cyc_make",
    "zeta",
    "EPoly",
    "euler_number",
    "geometric_sum",
    "ConsistencyError",
    "PreconditionError",
    "CycMatrix",
    "MatrixGroup",
    "closure",
    "cotangent_lift",
    "euler_tpn",
    "hodge_tpn",
    "stringy_e_linear_symplectic",
]
