"""Error classes for fibercone.

Every failure surfaced to a caller derives from :class:`FiberConeError`. The
CLI renders any of them as ``error.kind`` / ``error.detail`` lines; the exit
code comes from :attr:`FiberConeError.exit_code`.
"""

from typing import Any


class FiberConeError(Exception):
    """Base exception for fibercone errors."""

    exit_code: int = 2

    def __init__(
        self,
        message: str,
        *,
        original_error: Exception | None = None,
        **extra_context: Any,
    ):
        super().__init__(message)
        self.message = message
        self.original_error = original_error
        self.extra_context = extra_context

    @property
    def kind(self) -> str:
        """Error kind as printed in reports."""
        return self.__class__.__name__

    def __str__(self) -> str:
        parts = [self.message]
        for key in sorted(self.extra_context):
            if self.extra_context[key] is None:
                continue
            parts.append(f"[{key}={self.extra_context[key]}]")
        return " ".join(parts)

    def to_dict(self) -> dict[str, Any]:
        """Convert error to dictionary for logging and report rendering."""
        return {
            "error_type": self.kind,
            "message": self.message,
            "extra_context": self.extra_context,
        }


# ----------------------------------------------------------------------------
# Input errors
# ----------------------------------------------------------------------------


class InputError(FiberConeError):
    """Arguments violate an operation's precondition."""

    pass


class EmptyInputError(InputError):
    """Generator list is empty."""

    pass


class NotCoprimeError(InputError):
    """Semigroup generators have a common divisor greater than 1."""

    pass


class NotMemberError(InputError):
    """Integer is not a member of the semigroup."""

    pass


class ExponentNotInSemigroupError(InputError):
    """Monomial exponent lies outside the semigroup."""

    pass


class MixedParentsError(InputError):
    """Semigroup ideals live over different semigroups."""

    pass


class MixedRingsError(InputError):
    """Artinian ideals live over different truncated rings."""

    pass


class ZeroIdealError(InputError):
    """Zero ideal passed where a nonzero ideal is required."""

    pass


class NegativePowerError(InputError):
    """Ideal power with a negative exponent."""

    pass


class NotContainedError(InputError):
    """Length of A/B requested but B is not contained in A."""

    pass


class BadParametersError(InputError):
    """Ring or policy parameters out of range."""

    pass


class UnitGeneratorError(InputError):
    """Generator with a nonzero constant term."""

    pass


class BadDegreesError(InputError):
    """Mixed multiplicity degrees do not sum to the dimension."""

    pass


class DimensionMismatchError(InputError):
    """Number of supplied elements does not fit the ring dimension."""

    pass


class NotSallyError(InputError):
    """Sally suite requested for an ideal with l(I^2/JI) != 1."""

    pass


class SessionSyntaxError(InputError):
    """Session file does not parse."""

    def __init__(self, message: str, *, line: int | None = None, **extra_context: Any):
        if line is not None:
            extra_context["line"] = line
        super().__init__(message, **extra_context)
        self.line = line


class UnknownVariableError(InputError):
    """Generator uses a variable the ring does not declare."""

    pass


class ConstantTermGeneratorError(InputError):
    """Session generator has a nonzero constant term."""

    pass


class UnknownIdealError(InputError):
    """Command refers to an ideal the session does not define."""

    pass


# ----------------------------------------------------------------------------
# Computation errors
# ----------------------------------------------------------------------------


class ComputationError(FiberConeError):
    """A computation could not be completed within its budget."""

    pass


class PrecisionExhaustedError(ComputationError):
    """Truncation order too small to certify an ideal."""

    pass


class BudgetExceededError(ComputationError):
    """Precision doubling budget used up."""

    pass


class NotAReductionError(ComputationError):
    """J I^n = I^(n+1) not reached within the stabilization budget."""

    pass


class StabilizationFailedError(ComputationError):
    """Sequence did not stabilize within the stabilization budget."""

    pass


class InvariantViolationError(FiberConeError):
    """Two computations that must agree disagree."""

    exit_code = 1
