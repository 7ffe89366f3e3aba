"""End-to-end runs of the built-in example suite."""

import pytest
from pydantic import ValidationError

from fibercone.cli.paper_examples import build_examples, run_examples, select_examples
from fibercone.errors import BadParametersError
from fibercone.semigroup import SemigroupIdeal

pytestmark = pytest.mark.integration


class TestExampleSuite:
    """Tests for run_examples."""

    @pytest.mark.slow
    def test_full_suite_passes(self):
        """Test that every assertion of every example passes."""
        report = run_examples()

        failures = [key for key, value in report.lines if value == "fail"]
        assert failures == []
        assert report.exit_code == 0
        assert report.get("paper.summary.failed") == "0"

    @pytest.mark.parametrize(
        "only", ["6.1", "6.2", "6.3", "6.4", pytest.param("6.5", marks=pytest.mark.slow)]
    )
    def test_single_example(self, only):
        """Test each worked example on its own."""
        report = run_examples(only)

        assert report.exit_code == 0
        keys = [key for key, _ in report.lines]
        assert all(key.startswith((f"paper.{only}.", "paper.summary.")) for key in keys)

    @pytest.mark.parametrize(
        ("only", "key"),
        [
            ("6.4", "paper.6.4.x4y2_in_i2_meet_j_not_ji"),
            pytest.param("6.5", "paper.6.5.z3_in_colon_not_m_i_plus_j", marks=pytest.mark.slow),
        ],
    )
    def test_local_witnesses(self, only, key):
        """Test the element membership checks of the local examples."""
        report = run_examples(only)

        assert report.get(key) == "pass"

    def test_family_prefix(self):
        """Test that a prefix selects the whole semigroup family."""
        report = run_examples("family")

        assert report.exit_code == 0
        assert report.get("paper.family.e4.symmetric") == "pass"
        assert report.get("paper.family.e8.gorenstein") == "pass"

    def test_unknown_id(self):
        """Test that an unmatched id raises BadParametersError."""
        with pytest.raises(BadParametersError):
            run_examples("7.1")

    def test_examples_are_frozen(self):
        """Test that built examples cannot be mutated in place."""
        example = build_examples()[0]

        with pytest.raises(ValidationError):
            example.id = "other"

    def test_prefix_needs_dot_boundary(self):
        """Test exact ids and that a trailing dot matches nothing."""
        examples = build_examples()

        assert [ex.id for ex in select_examples(examples, "6.3")] == ["6.3"]
        with pytest.raises(BadParametersError):
            select_examples(examples, "6.")

    def test_injected_fault_fails_suite(self, mocker):
        """Test that an off-by-one length makes the suite exit 1."""
        original = SemigroupIdeal.length_quotient
        mocker.patch.object(
            SemigroupIdeal,
            "length_quotient",
            lambda self, other: original(self, other) + 1,
        )

        report = run_examples("6.3")

        assert report.exit_code == 1
        assert report.get("paper.6.3.sally_length") == "fail"
        assert int(report.get("paper.summary.failed")) >= 1

    def test_session_open_failure(self, mocker):
        """Test that an example whose ring cannot be built counts as failed."""
        mocker.patch(
            "fibercone.cli.paper_examples.Workspace.open",
            side_effect=BadParametersError("Invalid settings"),
        )

        report = run_examples("6.3")

        assert report.exit_code == 1
        assert report.get("paper.6.3.session") == "fail"
        assert report.get("paper.6.3.session.error") == "BadParametersError"
