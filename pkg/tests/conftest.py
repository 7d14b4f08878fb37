import pytest
from hypothesis import settings, strategies as st

from srtool.complex import from_facets

settings.register_profile("default", max_examples=60, deadline=None)
settings.load_profile("default")

RP2 = [(1, 2, 3), (1, 3, 4), (1, 4, 5), (1, 5, 6), (1, 2, 6), (2, 3, 5), (2, 4, 5), (2, 4, 6), (3, 4, 6), (3, 5, 6)]

NAMED = {
    "point": ("1", [("1",)]),
    "two_points": ("12", [("1",), ("2",)]),
    "edge": ("12", [("1", "2")]),
    "path3": ("123", [("1", "2"), ("2", "3")]),
    "C3": ("123", [("1", "2"), ("2", "3"), ("1", "3")]),
    "C4": ("1234", [("1", "2"), ("2", "3"), ("3", "4"), ("1", "4")]),
    "C5": ("12345", [("1", "2"), ("2", "3"), ("3", "4"), ("4", "5"), ("1", "5")]),
    "triangle_pendant": ("1234", [("1", "2"), ("1", "3"), ("2", "3"), ("1", "4")]),
    "two_edges": ("1234", [("1", "2"), ("3", "4")]),
    "simplex2": ("123", [("1", "2", "3")]),
    "bd_simplex3": ("1234", [("1", "2", "3"), ("1", "2", "4"), ("1", "3", "4"), ("2", "3", "4")]),
    "two_triangles": ("1234", [("1", "2", "3"), ("1", "2", "4")]),
    "RP2": ("123456", [tuple(str(v) for v in f) for f in RP2]),
}


def named(key):
    labels, facets = NAMED[key]
    return from_facets(list(labels), facets)


@pytest.fixture
def cx():
    return named


@st.composite
def facet_lists(draw, max_vertices=5, max_facets=4):
    """(n, facets) with facets as tuples of vertex indices covering range(n)."""
    n = draw(st.integers(1, max_vertices))
    facets = draw(st.lists(st.sets(st.integers(0, n - 1), min_size=1, max_size=min(n, 4)), min_size=1, max_size=max_facets))
    covered = set().union(*facets)
    facets = [tuple(sorted(f)) for f in facets] + [(v,) for v in range(n) if v not in covered]
    return n, facets


def build(n, facets):
    return from_facets([str(v) for v in range(n)], [[str(v) for v in f] for f in facets])


_acceptance: list[tuple[str, str]] = []


def pytest_runtest_logreport(report):
    if "test_acceptance.py" in report.nodeid and (report.when == "call" or report.failed):
        doc = report.nodeid.split("::")[-1]
        _acceptance.append(("PASS" if report.passed else "FAIL", doc))


def pytest_terminal_summary(terminalreporter):
    if _acceptance:
        terminalreporter.section("acceptance criteria")
        for verdict, name in _acceptance:
            terminalreporter.write_line(f"{verdict}  {name}")
