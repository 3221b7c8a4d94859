"""Tests for the formula-versus-oracle self-checks."""

import pytest

from pfhat import selftest
from pfhat.errors import ValidationError
from pfhat.selftest import CheckResult, exit_status, run_selftest
from pfhat.slimgraph import build_Vn


class TestRunSelftest:
    """Test the full battery on small degrees."""

    def test_all_hold(self) -> None:
        """Test that every invariant and conjecture check passes up to n = 4."""
        results = run_selftest(4)
        failing = [r.name for r in results if not r.passed and r.kind != "report"]
        assert failing == []
        assert exit_status(results) == 0

    def test_names_and_kinds(self) -> None:
        """Test that h-positivity is report-only and slim graphs are a conjecture."""
        kinds = {r.name: r.kind for r in run_selftest(3)}
        assert kinds["h-positivity"] == "report"
        assert kinds["slim-graphs"] == "conjecture"
        assert kinds["characters-vs-brute-force"] == "invariant"

    def test_slim_builds_each_span_once(self, monkeypatch: pytest.MonkeyPatch) -> None:
        """Test that the conjecture and table checks share one V_n per degree."""
        built = []

        def counting_build(n: int, **kwargs) -> object:
            built.append(n)
            return build_Vn(n, **kwargs)

        monkeypatch.setattr(selftest, "build_Vn", counting_build)
        monkeypatch.setattr(
            "pfhat.slimgraph.build_Vn",
            lambda *a, **k: pytest.fail("V_n rebuilt inside a check"),
        )
        assert selftest._slim(4) == ""
        assert built == [3, 4]

    def test_rejects_zero(self) -> None:
        """Test that max_n must be positive."""
        with pytest.raises(ValidationError):
            run_selftest(0)


class TestExitStatus:
    """Test how failures map to exit codes."""

    def test_invariant_wins(self) -> None:
        """Test that a failed invariant gives 2 even with a failed conjecture."""
        results = [
            CheckResult("a", False, "boom", "conjecture"),
            CheckResult("b", False, "boom", "invariant"),
        ]
        assert exit_status(results) == 2

    def test_conjecture(self) -> None:
        """Test that a failed conjecture alone gives 3."""
        assert exit_status([CheckResult("a", False, "mismatch", "conjecture")]) == 3

    def test_report_never_fails(self) -> None:
        """Test that report checks do not change the status."""
        assert exit_status([CheckResult("a", False, "negative", "report")]) == 0

    def test_json(self) -> None:
        """Test the JSON form of a result."""
        assert CheckResult("x", True).to_json() == {
            "name": "x",
            "kind": "invariant",
            "passed": True,
            "detail": "",
        }
