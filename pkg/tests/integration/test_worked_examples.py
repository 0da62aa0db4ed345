"""Integration tests for the worked example suite."""

import pytest

from tropos.errors import CapExceeded, NotTN
from tropos.modules.worked_examples import EXAMPLES, run_worked_examples, seeded_sweep


class TestWorkedExamples:
    """Tests for the regression suite."""

    def test_all_examples_pass(self):
        """Every registered example holds."""
        report = run_worked_examples()
        assert [r.name for r in report.failures] == []
        assert len(report.results) == len(EXAMPLES) == 19

    def test_selected_examples(self):
        """Names restrict the run."""
        report = run_worked_examples(["factor-2x2", "stiefel-3x5"])
        assert [r.name for r in report.results] == ["factor-2x2", "stiefel-3x5"]
        assert report.passed

    def test_failing_check_is_reported(self, monkeypatch):
        """Failed descriptions end up in the detail."""
        monkeypatch.setitem(EXAMPLES, "always-false", lambda: [("holds", True), ("fails", False)])
        report = run_worked_examples(["always-false"])
        assert not report.passed
        assert report.failures[0].detail == "fails"

    def test_raising_example_is_reported(self, monkeypatch):
        """Domain errors mark the example failed instead of propagating."""

        def boom():
            raise NotTN("not TN")

        monkeypatch.setitem(EXAMPLES, "boom", boom)
        report = run_worked_examples(["boom"])
        assert report.failures[0].detail == "not TN"


class TestSeededSweep:
    """Tests for the randomized part of verify."""

    def test_sweep_passes(self):
        """Random strict Monge matrices pass every check."""
        result = seeded_sweep(4, samples=10)
        assert result.passed
        assert result.name == "seeded-sweep-4"

    def test_cap_propagates(self):
        """A minor cap below the sample size raises instead of failing the example."""
        with pytest.raises(CapExceeded):
            seeded_sweep(4, cap=1, samples=50)
