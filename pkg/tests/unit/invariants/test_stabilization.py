"""Unit tests for stabilization of integer sequences."""

import pytest

from fibercone.errors import StabilizationFailedError
from fibercone.invariants import StabilizationPolicy, stabilize
from fibercone.invariants.stabilization import backward_difference, resolve_policy


class TestStabilize:
    """Tests for the window-plus-verification acceptance rule."""

    def test_eventually_constant(self, policy):
        """Test that min(n, 5) stabilizes at 5 from index 5."""
        result = stabilize(lambda n: min(n, 5), policy, start=0, label="test")

        assert result.value == 5
        assert result.stabilized_at == 5
        assert result.verified_through == 9

    def test_growing_sequence_fails(self, policy):
        """Test that a strictly growing sequence raises StabilizationFailedError."""
        with pytest.raises(StabilizationFailedError) as exc_info:
            stabilize(lambda n: n, policy, start=0, label="identity")

        assert exc_info.value.extra_context["n_max"] == 40

    def test_each_index_evaluated_once(self, policy, mocker):
        """Test that the sequence is memoized."""
        sequence = mocker.Mock(side_effect=lambda n: 1)

        stabilize(sequence, policy, start=0, label="constant")

        called = [c.args[0] for c in sequence.call_args_list]
        assert called == sorted(set(called))

    def test_target_skips_other_plateaus(self, policy):
        """Test that a plateau of the wrong value is not accepted when a target is given."""
        sequence = lambda n: 2 if n < 6 else 0  # noqa: E731

        result = stabilize(sequence, policy, start=0, label="tail", target=0)

        assert result.value == 0
        assert result.stabilized_at == 6

    def test_verification_beyond_budget(self):
        """Test that a run whose verification needs n > n_max is rejected."""
        tight = StabilizationPolicy(window=3, n_max=6)

        with pytest.raises(StabilizationFailedError):
            stabilize(lambda n: min(n, 4), tight, start=0, label="late")

    def test_verification_catches_late_change(self, policy):
        """Test that a value changing right after the window is not accepted there."""
        sequence = lambda n: 1 if n < 3 else 2  # noqa: E731

        result = stabilize(sequence, policy, start=0, label="step")

        assert result.value == 2
        assert result.stabilized_at == 3


def test_backward_difference():
    """Test the second difference of n^2."""
    assert backward_difference(lambda k: k * k, 5, 2) == 2
    assert backward_difference(lambda k: k * k, 5, 0) == 25


def test_resolve_policy_uses_settings():
    """Test that None falls back to the configured policy."""
    from fibercone.config import settings

    resolved = resolve_policy(None)

    assert resolved.window == settings.window
    assert resolved.n_max == settings.n_max
