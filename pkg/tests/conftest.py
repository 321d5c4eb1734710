import random
import sys
from pathlib import Path

import pytest
from hypothesis import strategies as st

sys.path.insert(0, str(Path(__file__).parent))

from leaderfollower.graph import from_edges  # noqa: E402

BRIDGED_EDGES = [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5), (2, 3)]


@pytest.fixture
def triangle():
    return from_edges(3, [(0, 1), (1, 2), (0, 2)])


@pytest.fixture
def path3():
    return from_edges(3, [(0, 1), (1, 2)])


@pytest.fixture
def bridged():
    """Two triangles {0,1,2} and {3,4,5} joined by the edge 2-3."""
    return from_edges(6, BRIDGED_EDGES)


@pytest.fixture
def two_triangles():
    return from_edges(6, [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)])


def random_connected_edges(n, extra, rng):
    """Random spanning tree plus ``extra`` random edges."""
    edges = [(rng.randrange(v), v) for v in range(1, n)]
    for _ in range(extra):
        u, v = rng.randrange(n), rng.randrange(n)
        edges.append((u, v))
    return edges


@st.composite
def connected_graphs(draw, max_nodes=30):
    n = draw(st.integers(1, max_nodes))
    seed = draw(st.integers(0, 2**32 - 1))
    extra = draw(st.integers(0, 3 * n))
    rng = random.Random(seed)
    return n, random_connected_edges(n, extra, rng)


@st.composite
def partitions(draw, max_nodes=30):
    n = draw(st.integers(1, max_nodes))
    k = draw(st.integers(1, n))
    return draw(st.lists(st.integers(0, k - 1), min_size=n, max_size=n))


ACCEPTANCE_RESULTS: dict = {}


def pytest_runtest_makereport(item, call):
    criterion = item.get_closest_marker("criterion")
    if criterion is None or call.when != "call":
        return
    num, title = criterion.args
    passed = call.excinfo is None
    detail = ACCEPTANCE_RESULTS.get(num, {}).get("detail", "")
    if not passed:
        detail = str(call.excinfo.value).splitlines()[0] if call.excinfo.value.args else detail
    ACCEPTANCE_RESULTS[num] = {"title": title, "passed": passed, "detail": detail}


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(num, title): acceptance criterion")


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for num in sorted(ACCEPTANCE_RESULTS):
        r = ACCEPTANCE_RESULTS[num]
        status = "PASS" if r["passed"] else "FAIL"
        terminalreporter.write_line(f"[{status}] criterion {num}: {r['title']} -- {r['detail']}")
