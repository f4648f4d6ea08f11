"""Partition 1..n into k subsets of equal sum t."""

from .core import (
    ArithmeticOverflowError,
    CutPlan,
    EquisumError,
    InfeasibleSumError,
    InfeasibleTargetError,
    Instance,
    InvalidPartitioningError,
    MalformedInputError,
    Partitioning,
    VerificationReport,
    cut_plan,
    delta,
    enumerate_feasible,
    from_json,
    make_instance,
    partitioning_from_cut_plan,
    to_json,
    verify,
)
from .meander import (
    MeanderMatrix,
    NotApplicableError,
    gauss_partitioning,
    meander_applicable,
    meander_partitioning,
)
from .oracle import BudgetExceededError, OracleLimits, brute_force_solve, existence_sweep
from .pisolve import InvariantError, solve, solve_trace

__version__ = "0.1.0"
