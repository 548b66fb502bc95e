"""
Tests for suite resolution and the verification graph
"""
import pytest

from src.core.constants import SUITE_NAMES
from src.core.errors import DomainError
from src.graph import resolve_suites, verify
from src.models.run_config import RunConfig, Tolerances


def test_resolve_suites():
    assert resolve_suites("all") == list(SUITE_NAMES)
    assert resolve_suites("gcd") == ["gcd"]
    with pytest.raises(DomainError):
        resolve_suites("everything")


def test_all_suites_pass_in_order():
    state = verify("all", 10, RunConfig())
    assert [r["suite"] for r in state["results"]] == list(SUITE_NAMES)
    assert all(r["passed"] for r in state["results"]), [r["failures"] for r in state["results"]]
    assert state["errors"] == []
    assert all(r["duration_seconds"] >= 0 for r in state["results"])


def test_numeric_failure_stays_in_its_suite(config_dir):
    config = RunConfig(tolerances=Tolerances(max_iterations=1, residual=1e-30))
    state = verify("all", 6, config)
    by_suite = {r["suite"]: r for r in state["results"]}
    assert not by_suite["roots"]["passed"]
    assert any("NumericError" in f for f in by_suite["roots"]["failures"])
    assert all(by_suite[s]["passed"] for s in SUITE_NAMES if s != "roots")
    assert {e["node_name"] for e in state["errors"]} == {"roots"}
    assert all(e["error_type"] == "NumericError" for e in state["errors"])
    assert all(e["details"]["worst_residual"] >= 1e-30 for e in state["errors"])
    assert all(e["n"] is not None for e in state["errors"])


def test_negative_n_max_rejected():
    with pytest.raises(DomainError):
        verify("recursions", -1, RunConfig())


def test_zero_n_max_is_vacuous():
    state = verify("roots", 0, RunConfig())
    assert state["results"][0]["passed"]
    assert state["results"][0]["failures"] == []


def test_single_suite_graph():
    state = verify("gcd", 8, RunConfig())
    assert [r["suite"] for r in state["results"]] == ["gcd"]
    assert state["results"][0]["passed"]
