"""Exact solvers, kernels and reductions for ternary permutation CSPs
parameterized above average."""

__version__ = "0.1.0"

from .core import (  # noqa: E402
    PI0,
    PI_BTW,
    PI_CLASSES,
    PI_NAMES,
    Arc,
    BtwConstraint,
    DeviationReport,
    DimensionError,
    InvalidInstanceError,
    LimitExceededError,
    LinearOrdering,
    LoInstance,
    MixedInstance,
    PiSet,
    PreconditionError,
    TripleConstraint,
    TrivialPiError,
    VarTable,
    canonical_pi_class,
    count_satisfied,
    deviation,
    to_class_representative,
)
from .decompose import KernelConfig, KernelResult, Verdict, kernelize_lo  # noqa: E402
from .instancefile import ParseError, parse, serialize  # noqa: E402
from .solver import (  # noqa: E402
    SolverLimits,
    decide_above_average,
    max_dev_bruteforce,
    max_dev_dp,
)
from .transforms import bikernel  # noqa: E402

__all__ = [
    "PI0", "PI_BTW", "PI_CLASSES", "PI_NAMES", "Arc", "BtwConstraint", "DeviationReport",
    "DimensionError", "InvalidInstanceError", "LimitExceededError", "LinearOrdering",
    "LoInstance", "MixedInstance", "PiSet", "PreconditionError", "TripleConstraint",
    "TrivialPiError", "VarTable", "canonical_pi_class", "count_satisfied", "deviation",
    "to_class_representative", "KernelConfig", "KernelResult", "Verdict", "kernelize_lo",
    "ParseError", "parse", "serialize", "SolverLimits", "decide_above_average",
    "max_dev_bruteforce", "max_dev_dp", "bikernel",
]
