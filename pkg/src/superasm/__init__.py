"""Exact shortest common superstring and dictionary text assembly.

Search subroutines run classically through :mod:`superasm.qsim`, which charges the
query cost of the corresponding quantum routine to a ledger.
"""
from .kernels import BACKEND as KERNEL_BACKEND
from .qsim import NoiseConfig, QSim, QueryLedger
from .scs import ScsConfig, ScsSolution, brute_force_scs, solve_scs, validate_superstring
from .strings import SCSInstance
from .tao import Assembly, TAOInstance, assemble, feasibility_oracle, validate_assembly

__version__ = "0.1.0"

__all__ = [
    "Assembly",
    "KERNEL_BACKEND",
    "NoiseConfig",
    "QSim",
    "QueryLedger",
    "SCSInstance",
    "ScsConfig",
    "ScsSolution",
    "TAOInstance",
    "assemble",
    "brute_force_scs",
    "feasibility_oracle",
    "solve_scs",
    "validate_assembly",
    "validate_superstring",
]
