"""
Tests for the exact-identity suites.
"""

import io
import json

import pytest

from src.config import SuiteBounds
from src.utils.logger import Logger
from src.verify.suites import SUITES, run_suite

SMALL = {
    "hecke": SuiteBounds(nvars=3, max_degree=2),
    "dunkl": SuiteBounds(nvars=2, max_degree=2),
    "restriction": SuiteBounds(nvars=2, max_degree=2),
    "eigen": SuiteBounds(nvars=2, max_degree=2),
    "creation": SuiteBounds(nvars=2, max_degree=2),
    "rodrigues": SuiteBounds(nvars=2, max_degree=2),
    "pieri": SuiteBounds(nvars=2, max_degree=2),
    "lemma9": SuiteBounds(nvars=2, max_degree=2),
    "formulas": SuiteBounds(nvars=2, max_degree=2),
    "kostka": SuiteBounds(nvars=2, max_degree=2),
}


def test_every_suite_has_small_bounds():
    assert set(SMALL) == set(SUITES)


@pytest.mark.parametrize("name", sorted(SMALL))
def test_suite_passes_small(name):
    report = run_suite(name, SMALL[name], Logger("test", stream=io.StringIO()))
    assert report.passed, [f.counterexample for f in report.failures()]


def test_inner_sums_match_restricted_macdonald_operators():
    report = run_suite("creation", SuiteBounds(nvars=3, max_degree=2, seed=7))
    result = next(r for r in report.results if r.name.startswith("B2 inner sum m = "))
    assert result.passed, result.counterexample
    # two samples, (k, m) over k = 1..3, m = 0..3-k
    assert result.cases == 12


def test_report_serialization():
    report = run_suite("hecke", SuiteBounds(nvars=2, max_degree=1))
    data = json.loads(report.to_json())
    assert data["suite"] == "hecke"
    assert data["passed"] is True
    assert report.to_text().splitlines()[-1].startswith("suite hecke: PASS")


def test_unknown_suite():
    with pytest.raises(ValueError):
        run_suite("bogus", SuiteBounds())


def test_bad_bounds():
    with pytest.raises(ValueError):
        run_suite("hecke", SuiteBounds(nvars=0))
    with pytest.raises(ValueError):
        run_suite("hecke", SuiteBounds(max_degree=-1))


@pytest.mark.slow
@pytest.mark.parametrize("name", ["hecke", "dunkl", "creation", "pieri", "formulas"])
def test_suite_passes_default_bounds(name):
    assert run_suite(name, SuiteBounds(nvars=3, max_degree=3)).passed
