"""Erdős–Gallai graphicality test."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np


@dataclass(frozen=True)
class GraphicVerdict:
    graphic: bool
    failing_k: int | None = None
    odd_sum: bool = False

    def to_dict(self) -> dict:
        return {"graphic": self.graphic, "failing_k": self.failing_k, "odd_sum": self.odd_sum}


def erdos_gallai_check(degrees) -> GraphicVerdict:
    """Decide whether ``degrees`` is the degree sequence of a simple graph.

    The sequence is sorted non-increasingly once; for each k the right-hand
    side ``k(k-1) + sum_{i>k} min(d_i, k)`` is assembled from prefix sums and
    the count of entries ``>= k``, so the whole check is O(n log n).

    ``failing_k`` is the smallest (1-based) violated k. Sequences with an odd
    sum are rejected without evaluating the inequalities.
    """
    d = np.asarray(getattr(degrees, "degrees", degrees), dtype=np.int64).reshape(-1)
    if d.size and d.min() < 0:
        raise ValueError("degrees must be non-negative")
    if int(d.sum()) % 2:
        return GraphicVerdict(False, None, True)
    n = d.size
    if n == 0:
        return GraphicVerdict(True)

    desc = np.sort(d)[::-1]
    prefix = np.concatenate(([0], np.cumsum(desc)))
    total = prefix[-1]
    k = np.arange(1, n + 1, dtype=np.int64)

    # p[k-1] = number of entries >= k
    asc = desc[::-1]
    p = n - np.searchsorted(asc, k, side="left")

    # entries i > k with d_i >= k contribute k each; the remainder contribute d_i
    split = np.maximum(p, k)
    rhs = k * (k - 1) + k * (split - k) + (total - prefix[split])
    lhs = prefix[1:]
    bad = np.flatnonzero(lhs > rhs)
    if bad.size:
        return GraphicVerdict(False, int(bad[0]) + 1, False)
    return GraphicVerdict(True)


def is_graphic(degrees) -> bool:
    return erdos_gallai_check(degrees).graphic
