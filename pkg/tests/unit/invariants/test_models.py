"""Unit tests for invariant report models."""

import pytest
from pydantic import ValidationError

from fibercone.invariants.models import (
    HilbertNumerator,
    MixedMultiplicityTable,
    MultiplicityCertificate,
    SallyReport,
    StabilizationPolicy,
    StabilizedValue,
    SuperficialReport,
    WCriterionReport,
)


class TestStabilizationPolicy:
    def test_defaults(self):
        """Test the default window and budget."""
        policy = StabilizationPolicy()

        assert policy.window == 3
        assert policy.n_max == 40

    def test_budget_must_cover_window(self):
        """Test that n_max < window + 2 fails validation."""
        with pytest.raises(ValidationError):
            StabilizationPolicy(window=5, n_max=6)

    def test_window_lower_bound(self):
        """Test that a window of 1 is rejected."""
        with pytest.raises(ValidationError):
            StabilizationPolicy(window=1)

    def test_frozen(self):
        """Test that policies are immutable."""
        policy = StabilizationPolicy()

        with pytest.raises(ValidationError):
            policy.window = 4


class TestReportModels:
    def test_palindromic_numerator(self):
        """Test palindrome detection on h-vectors."""
        assert HilbertNumerator(
            coefficients=[1, 2, 1], denominator_power=1, f0=4, stabilized_at=3
        ).is_palindromic
        assert not HilbertNumerator(
            coefficients=[1, 3], denominator_power=3, f0=4, stabilized_at=2
        ).is_palindromic

    def test_routes_agree(self):
        """Test agreement of the two multiplicity routes."""
        samuel = StabilizedValue(value=9, stabilized_at=2, verified_through=6)

        assert MultiplicityCertificate(value=9, by_reduction=9, by_samuel=samuel).routes_agree
        assert MultiplicityCertificate(value=9, by_reduction=None, by_samuel=samuel).routes_agree
        assert not MultiplicityCertificate(
            value=8, by_reduction=8, by_samuel=samuel
        ).routes_agree

    def test_mixed_table_top(self):
        """Test that top() lists e_(d,0) first."""
        table = MixedMultiplicityTable(
            dimension=2, entries={(2, 0): 1, (1, 1): 3, (0, 2): 9}
        )

        assert table.top() == [1, 3, 9]
        assert table.get(1, 1) == 3

    def test_sally_report_ignores_inapplicable(self):
        """Test that None conditions count neither for nor against."""
        report = SallyReport(conditions={"a": True, "b": None, "c": True})

        assert report.consistent
        assert report.verdict
        assert not SallyReport(conditions={"a": True, "b": False}).consistent

    def test_superficial_prediction(self):
        """Test predicted f0 = reference - limit."""
        report = SuperficialReport(
            variant="m",
            limit=StabilizedValue(value=0, stabilized_at=1, verified_through=5),
            reference=4,
            f0=4,
        )

        assert report.predicted_f0 == 4
        assert report.consistent
        assert report.certified is False

    def test_superficial_variant_validated(self):
        """Test that only the m and I variants exist."""
        with pytest.raises(ValidationError):
            SuperficialReport(
                variant="x",
                limit=StabilizedValue(value=0, stabilized_at=1, verified_through=5),
                reference=4,
                f0=4,
            )

    def test_w_criterion_applicability(self):
        """Test that one failed hypothesis makes the comparison inapplicable."""
        report = WCriterionReport(
            hypotheses={"fiber_cone_cm": True, "associated_graded_cm": False},
            w_equals=False,
        )

        assert not report.applicable
