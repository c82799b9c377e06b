"""Wedges, triangles and the two clustering coefficients.

Conventions for degenerate inputs:

* local clustering C(i) is 0 for vertices of degree 0 or 1;
* global clustering is 0 when the graph has no wedges.
"""

from __future__ import annotations

import json
from dataclasses import asdict, dataclass

import numpy as np

from .graph import SimpleGraph

BRUTE_FORCE_MAX_N = 500
# candidate wedges materialized per chunk in the triangle counter
_CHUNK = 1 << 22


@dataclass(frozen=True)
class GraphMetrics:
    edges: int
    wedges: int
    triangles: int
    c1: float
    c2: float
    max_degree: int

    def to_dict(self) -> dict:
        return asdict(self)

    def to_json(self) -> str:
        d = self.to_dict()
        d["c1"] = _sig6(d["c1"])
        d["c2"] = _sig6(d["c2"])
        return json.dumps(d, separators=(",", ":"))


def _sig6(x: float) -> float:
    return float(f"{x:.6g}")


def _exact_sum(values: np.ndarray) -> int:
    # int64 partial products; fall back to Python ints if the total could overflow
    if values.size == 0:
        return 0
    if int(values.max()) <= (2**62) // max(values.size, 1):
        return int(values.sum())
    return sum(int(x) for x in values.tolist())


def count_wedges(graph: SimpleGraph) -> int:
    d = graph.degree.astype(np.int64)
    return _exact_sum(d * (d - 1) // 2)


def per_vertex_triangles(graph: SimpleGraph) -> np.ndarray:
    """T^i for every vertex: number of edges among the neighbours of i.

    Vertices are ranked by (degree, index) and each edge is oriented from
    lower to higher rank. Every triangle is then found exactly once as a pair
    of out-neighbours (v, w) of its lowest-ranked vertex u with v -> w present.
    Out-degrees are at most sqrt(2m), so the candidate count is O(m^1.5).
    """
    n = graph.n
    tri = np.zeros(n, dtype=np.int64)
    if graph.m < 3:
        return tri

    rank_order = np.lexsort((np.arange(n), graph.degree))
    rank = np.empty(n, dtype=np.int64)
    rank[rank_order] = np.arange(n)

    a = rank[graph.edges[:, 0]]
    b = rank[graph.edges[:, 1]]
    lo = np.minimum(a, b)
    hi = np.maximum(a, b)
    keys = np.sort(lo * n + hi)
    src = keys // n
    dst = keys % n

    indptr = np.zeros(n + 1, dtype=np.int64)
    np.cumsum(np.bincount(src, minlength=n), out=indptr[1:])

    # every out-list entry p pairs with the later entries of its row
    row_end = np.repeat(indptr[1:], np.diff(indptr))
    later = row_end - np.arange(keys.size) - 1
    cum = np.concatenate(([0], np.cumsum(later)))

    start = 0
    while start < keys.size:
        # advance stop so that the chunk holds at most _CHUNK candidates
        stop = int(np.searchsorted(cum, cum[start] + _CHUNK, side="right")) - 1
        stop = min(max(stop, start + 1), keys.size)
        cnt = later[start:stop]
        npairs = int(cnt.sum())
        if npairs:
            p = np.repeat(np.arange(start, stop, dtype=np.int64), cnt)
            offs = np.arange(npairs, dtype=np.int64) - np.repeat(cum[start:stop] - cum[start], cnt)
            q = p + 1 + offs
            v = dst[p]
            w = dst[q]
            cand = v * n + w
            pos = np.searchsorted(keys, cand)
            pos[pos == keys.size] = 0
            hit = keys[pos] == cand
            if hit.any():
                for verts in (src[p[hit]], v[hit], w[hit]):
                    tri += np.bincount(verts, minlength=n)
        start = stop

    out = np.empty(n, dtype=np.int64)
    out[rank_order] = tri
    return out


def count_triangles(graph: SimpleGraph) -> int:
    return _exact_sum(per_vertex_triangles(graph)) // 3


def count_triangles_brute(graph: SimpleGraph) -> int:
    """Triangle count by checking every vertex triple (test oracle, n <= 500)."""
    n = graph.n
    if n > BRUTE_FORCE_MAX_N:
        raise ValueError(f"brute-force triangle count limited to n <= {BRUTE_FORCE_MAX_N}")
    adj = graph.adjacency_matrix()
    count = 0
    for i in range(n):
        for j in range(i + 1, n):
            if adj[i, j]:
                # all k > j closing the triple (i, j, k)
                count += int(np.count_nonzero(adj[i, j + 1:] & adj[j, j + 1:]))
    return count


def global_clustering(graph: SimpleGraph) -> float:
    wedges = count_wedges(graph)
    if wedges == 0:
        return 0.0
    return 3 * count_triangles(graph) / wedges


def local_clustering(graph: SimpleGraph, triangles: np.ndarray | None = None) -> np.ndarray:
    """C(i) = T^i / P2^i per vertex, 0 where degree <= 1."""
    t = per_vertex_triangles(graph) if triangles is None else triangles
    d = graph.degree
    pairs = d * (d - 1) // 2
    c = np.zeros(graph.n, dtype=np.float64)
    ok = pairs > 0
    c[ok] = t[ok] / pairs[ok]
    return c


def average_local_clustering(graph: SimpleGraph) -> float:
    if graph.n == 0:
        return 0.0
    return float(local_clustering(graph).mean())


def degree_h_index(degrees) -> int:
    """Largest k such that the k-th largest degree is at least k."""
    d = np.asarray(getattr(degrees, "degrees", degrees), dtype=np.int64).reshape(-1)
    if d.size == 0:
        return 0
    desc = np.sort(d)[::-1]
    return int(np.count_nonzero(desc >= np.arange(1, d.size + 1)))


def compute_metrics(graph: SimpleGraph) -> GraphMetrics:
    t = per_vertex_triangles(graph)
    triangles = _exact_sum(t) // 3
    wedges = count_wedges(graph)
    c1 = 3 * triangles / wedges if wedges else 0.0
    c2 = float(local_clustering(graph, t).mean()) if graph.n else 0.0
    max_degree = int(graph.degree.max()) if graph.n else 0
    return GraphMetrics(graph.m, wedges, triangles, c1, c2, max_degree)
