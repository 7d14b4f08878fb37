import pytest

from conftest import named
from srtool.checks import Instance, run_suites
from srtool.corpus import exhaustive
from srtool.homology import GF2, QQ


@pytest.mark.parametrize("suite", ["cm-invariance", "shifts", "flag-links"])
def test_structural_suites_on_small_corpus(suite):
    bad = []
    for e in exhaustive(4):
        for f in (QQ, GF2):
            msgs = run_suites(Instance(e.complex, f, e.name), [suite])[suite]
            if msgs:
                bad.append((e.name, f.name, msgs))
    assert bad == []


def test_suite_exceptions_become_failures():
    x = Instance(named("C4"), QQ, budget=3)
    out = run_suites(x, ["conjecture"])
    assert out["conjecture"] and out["conjecture"][0].startswith("BudgetExceeded")


def test_default_budget_refuses_large_subdivisions():
    # sd(RP2) has 31 vertices, beyond the default budget; the guard must
    # surface as a reported failure, while suites not needing sd Betti
    # numbers still pass.
    x = Instance(named("RP2"), GF2, "RP2")
    out = run_suites(x, ["conjecture", "cm-invariance", "hilbert-transform"])
    assert out["conjecture"][0].startswith("BudgetExceeded")
    assert out["cm-invariance"] == [] and out["hilbert-transform"] == []
