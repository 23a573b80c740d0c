import random

import networkx as nx
import pytest

from hamcolor.solver import ExactResult, exact_hc
from hamcolor.tree import RootedView, Tree, analyze

# number of non-isomorphic trees on n vertices, used to make sure the
# exhaustive fixtures really are exhaustive
TREE_COUNTS = {1: 1, 2: 1, 3: 1, 4: 2, 5: 3, 6: 6, 7: 11, 8: 23}


@pytest.fixture(scope="session")
def corpus() -> dict[int, list[Tree]]:
    """Every non-isomorphic tree on 1..8 vertices, keyed by order."""
    out: dict[int, list[Tree]] = {
        1: [Tree(1, [])],
        2: [Tree(2, [(0, 1)])],
        3: [Tree(3, [(0, 1), (1, 2)])],
    }
    for n in range(4, 9):
        out[n] = [
            Tree(n, [(int(u), int(v)) for u, v in g.edges()])
            for g in nx.nonisomorphic_trees(n)
        ]
    for n, trees in out.items():
        assert len(trees) == TREE_COUNTS[n]
    return out


@pytest.fixture(scope="session")
def exact_of():
    """Memoized exact solve, shared by every test in the session."""
    cache: dict[tuple, ExactResult] = {}

    def run(subject: Tree | RootedView) -> ExactResult:
        rv = subject if isinstance(subject, RootedView) else analyze(subject)
        key = (rv.tree.n, rv.tree.edges)
        if key not in cache:
            cache[key] = exact_hc(rv)
        return cache[key]

    return run


@pytest.fixture
def rng() -> random.Random:
    return random.Random(0xC0FFEE)


def pytest_terminal_summary(terminalreporter):
    """One pass/fail line per acceptance criterion, visible on every run."""
    lines = []
    for outcome in ("passed", "failed", "error"):
        for report in terminalreporter.stats.get(outcome, []):
            nodeid = getattr(report, "nodeid", "")
            if "test_acceptance.py::test_c" not in nodeid:
                continue
            if getattr(report, "when", "call") != "call" and outcome == "passed":
                continue
            name = nodeid.split("::test_c", 1)[1]
            num, _, label = name.partition("_")
            verdict = "PASS" if outcome == "passed" else "FAIL"
            lines.append((num, f"acceptance {num} {label.replace('_', ' ')}: {verdict}"))
    if lines:
        terminalreporter.section("acceptance criteria")
        for _, line in sorted(set(lines)):
            terminalreporter.write_line(line)
