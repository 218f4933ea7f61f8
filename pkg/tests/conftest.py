import numpy as np
import pytest

from qecstar.graphs import build_graph, named_graph, star_product


def random_tree(rng, n):
    """Uniform labelled tree on n vertices via a Pruefer sequence."""
    if n == 1:
        return build_graph(1, [])
    if n == 2:
        return build_graph(2, [(0, 1)])
    seq = list(rng.integers(0, n, size=n - 2))
    degree = [1] * n
    for v in seq:
        degree[v] += 1
    edges = []
    for v in seq:
        leaf = min(u for u in range(n) if degree[u] == 1)
        edges.append((leaf, v))
        degree[leaf] -= 1
        degree[v] -= 1
    u, w = [x for x in range(n) if degree[x] == 1]
    edges.append((u, w))
    return build_graph(n, edges)


def random_factor(rng, max_size=6):
    m = int(rng.integers(2, max_size + 1))
    kind = rng.choice(["complete", "path", "tree"])
    g = random_tree(rng, m) if kind == "tree" else named_graph(str(kind), m)
    return g, int(rng.integers(0, m))


def random_star(rng, min_factors=2, max_factors=4, max_size=6):
    r = int(rng.integers(min_factors, max_factors + 1))
    factors = [random_factor(rng, max_size) for _ in range(r)]
    product, maps = star_product(factors)
    return factors, product, maps


@pytest.fixture
def rng():
    return np.random.default_rng(0)


_ACCEPTANCE = {}


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    marker = item.get_closest_marker("acceptance")
    if marker is None:
        return
    number, title = marker.args
    if report.when == "call" or (report.when == "setup" and report.outcome != "passed"):
        _ACCEPTANCE[number] = (title, report.outcome, report.duration)


def pytest_terminal_summary(terminalreporter):
    if not _ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(_ACCEPTANCE):
        title, outcome, duration = _ACCEPTANCE[number]
        verdict = "PASS" if outcome == "passed" else "FAIL"
        terminalreporter.write_line(f"criterion {number}: {verdict} ({duration:.2f} s) {title}")
