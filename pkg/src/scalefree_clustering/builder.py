"""Havel–Hakimi realization and the configuration-model pairing probe."""

from __future__ import annotations

import heapq
from dataclasses import dataclass

import numpy as np

from .graph import SimpleGraph


class RealizationError(ValueError):
    """The degree sequence is not graphic."""


def havel_hakimi(degrees) -> SimpleGraph:
    """Realize ``degrees`` as a simple graph, or raise ``RealizationError``.

    Vertex ``v`` of the result has degree ``degrees[v]``. Internally the
    sequence is stably sorted non-increasingly; at every step the vertex with
    the highest residual degree is joined to the next-highest ones, ties
    broken by sorted position (so equal input degrees keep input order).

    Residuals live in per-degree min-heaps of sorted positions. Each edge
    moves exactly one target down one bucket, giving O(sum(d) log n) overall
    after the initial sort.
    """
    d = np.asarray(getattr(degrees, "degrees", degrees), dtype=np.int64).reshape(-1)
    n = d.size
    if n and d.min() < 0:
        raise ValueError("degrees must be non-negative")
    if int(d.sum()) % 2:
        raise RealizationError("degree sum is odd")
    if n == 0 or d.max() == 0:
        return SimpleGraph(n, np.empty((0, 2), dtype=np.int64))
    if d.max() > n - 1:
        raise RealizationError(f"degree {int(d.max())} exceeds n - 1 = {n - 1}")

    # position -> input vertex
    order = np.argsort(-d, kind="stable")
    sd = d[order]
    top = int(sd[0])
    positive = int(np.count_nonzero(sd))

    buckets: list[list[int]] = [[] for _ in range(top + 1)]
    # positions are visited in increasing order, so each list is already a heap
    for pos, r in enumerate(sd[:positive].tolist()):
        buckets[r].append(pos)

    hubs: list[int] = []
    counts: list[int] = []
    targets: list[int] = []

    while positive:
        while not buckets[top]:
            top -= 1
        hub = heapq.heappop(buckets[top])
        need = top
        positive -= 1
        if need > positive:
            raise RealizationError(
                f"residual degree {need} exceeds {positive} remaining vertices"
            )

        taken: list[tuple[int, list[int]]] = []
        r = top
        while need:
            b = buckets[r]
            if b:
                if len(b) <= need:
                    ids = b
                    buckets[r] = []
                else:
                    ids = [heapq.heappop(b) for _ in range(need)]
                taken.append((r, ids))
                need -= len(ids)
            r -= 1

        hubs.append(hub)
        counts.append(top)
        for r, ids in taken:
            targets.extend(ids)
            if r == 1:
                positive -= len(ids)
                continue
            dest = buckets[r - 1]
            if not dest:
                buckets[r - 1] = ids
            elif len(ids) >= len(dest):
                dest.extend(ids)
                heapq.heapify(dest)
            else:
                for i in ids:
                    heapq.heappush(dest, i)

    u = np.repeat(np.asarray(hubs, dtype=np.int64), counts)
    v = np.asarray(targets, dtype=np.int64)
    return SimpleGraph(n, np.column_stack((order[u], order[v])))


def try_havel_hakimi(degrees) -> SimpleGraph | None:
    try:
        return havel_hakimi(degrees)
    except RealizationError:
        return None


@dataclass(frozen=True)
class PairingOutcome:
    loops: int
    multi_edges: int

    @property
    def simple(self) -> bool:
        return self.loops == 0 and self.multi_edges == 0


def configuration_pairing(degrees, rng: np.random.Generator) -> PairingOutcome:
    """Pair degree stubs uniformly at random and count defects.

    ``loops`` counts stub pairs joining a vertex to itself; ``multi_edges``
    counts non-loop pairs that repeat an already present vertex pair (an edge
    of multiplicity m adds m - 1). No graph is built.
    """
    d = np.asarray(getattr(degrees, "degrees", degrees), dtype=np.int64).reshape(-1)
    if d.size and d.min() < 0:
        raise ValueError("degrees must be non-negative")
    if int(d.sum()) % 2:
        raise ValueError("configuration pairing needs an even degree sum")
    stubs = np.repeat(np.arange(d.size, dtype=np.int64), d)
    stubs = rng.permutation(stubs)
    a, b = stubs[0::2], stubs[1::2]
    is_loop = a == b
    loops = int(np.count_nonzero(is_loop))
    lo = np.minimum(a[~is_loop], b[~is_loop])
    hi = np.maximum(a[~is_loop], b[~is_loop])
    keys = lo * max(d.size, 1) + hi
    multi = int(keys.size - np.unique(keys).size)
    return PairingOutcome(loops, multi)
