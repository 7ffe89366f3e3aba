"""fibercone: exact invariants of fiber cones of m-primary ideals."""

from fibercone.calculus import IdealCalculus
from fibercone.config import Settings, settings
from fibercone.errors import FiberConeError, InputError, InvariantViolationError

__version__ = "0.1.0"

__all__ = [
    "FiberConeError",
    "IdealCalculus",
    "InputError",
    "InvariantViolationError",
    "Settings",
    "__version__",
    "settings",
]
