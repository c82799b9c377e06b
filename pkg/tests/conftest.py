import functools
import itertools

import numpy as np
import pytest

from scalefree_clustering.graph import SimpleGraph


@functools.lru_cache(maxsize=None)
def realizable_degree_multisets(n: int) -> frozenset:
    """Sorted degree tuples of every labeled simple graph on n vertices.

    Enumerates all 2**C(n,2) edge subsets; independent of any graphicality
    criterion.
    """
    pairs = list(itertools.combinations(range(n), 2))
    if not pairs:
        return frozenset({(0,) * n})
    inc = np.zeros((len(pairs), n), dtype=np.int8)
    for e, (u, v) in enumerate(pairs):
        inc[e, u] = inc[e, v] = 1
    masks = np.arange(2 ** len(pairs), dtype=np.uint32)
    bits = ((masks[:, None] >> np.arange(len(pairs), dtype=np.uint32)) & 1).astype(np.int8)
    deg = np.sort(bits @ inc, axis=1)[:, ::-1]
    return frozenset(map(tuple, np.unique(deg, axis=0).tolist()))


def brute_graphic(seq) -> bool:
    seq = tuple(sorted((int(x) for x in seq), reverse=True))
    return seq in realizable_degree_multisets(len(seq))


def random_graph(n: int, p: float, rng: np.random.Generator) -> SimpleGraph:
    upper = np.triu(rng.random((n, n)) < p, 1)
    return SimpleGraph.from_adjacency(upper | upper.T)


def random_graphic_sequence(rng: np.random.Generator, n_max: int = 200) -> np.ndarray:
    """Degree sequence of a random graph (graphic by construction)."""
    n = int(rng.integers(1, n_max + 1))
    p = float(rng.choice([0.02, 0.1, 0.3, 0.7]))
    return random_graph(n, p, rng).degree.copy()


@pytest.fixture
def rng():
    return np.random.default_rng(12345)


def pytest_terminal_summary(terminalreporter):
    mod = __import__("sys").modules.get("test_acceptance")
    results = getattr(mod, "RESULTS", None)
    if not results:
        return
    terminalreporter.section("acceptance criteria")
    for crit in sorted(results):
        terminalreporter.write_line(results[crit])
