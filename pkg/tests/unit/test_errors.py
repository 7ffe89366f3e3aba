"""Unit tests for the error hierarchy."""

from fibercone.errors import (
    BadParametersError,
    ComputationError,
    FiberConeError,
    InputError,
    InvariantViolationError,
    SessionSyntaxError,
    StabilizationFailedError,
)


class TestFiberConeError:
    def test_context_in_message(self):
        """Test that context entries are appended in sorted order."""
        error = BadParametersError("Bad", window=2, n_max=3)

        assert str(error) == "Bad [n_max=3] [window=2]"

    def test_none_context_skipped(self):
        """Test that None-valued context does not appear in the message."""
        assert str(FiberConeError("Oops", witness=None)) == "Oops"

    def test_to_dict(self):
        """Test the serialized form."""
        error = StabilizationFailedError("No limit", n_max=40)

        assert error.to_dict() == {
            "error_type": "StabilizationFailedError",
            "message": "No limit",
            "extra_context": {"n_max": 40},
        }

    def test_exit_codes(self):
        """Test input and budget failures exit 2, inconsistencies exit 1."""
        assert InputError("x").exit_code == 2
        assert ComputationError("x").exit_code == 2
        assert InvariantViolationError("x").exit_code == 1

    def test_original_error_kept(self):
        """Test that the wrapped exception is preserved."""
        cause = ValueError("inner")

        error = BadParametersError("outer", original_error=cause)

        assert error.original_error is cause
        assert error.kind == "BadParametersError"


class TestSessionSyntaxError:
    def test_line_recorded(self):
        """Test that the line number lands in the context."""
        error = SessionSyntaxError("Unexpected token", line=4)

        assert error.line == 4
        assert str(error) == "Unexpected token [line=4]"

    def test_without_line(self):
        """Test that a missing line leaves the context empty."""
        error = SessionSyntaxError("No ring")

        assert error.line is None
        assert error.extra_context == {}
