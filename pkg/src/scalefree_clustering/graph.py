"""Immutable simple undirected graph in compressed sparse row form."""

from __future__ import annotations

import numpy as np


class GraphError(ValueError):
    """Edge data that does not describe a simple graph."""


class SimpleGraph:
    """Loop-free, multi-edge-free undirected graph on vertices ``0..n-1``.

    ``edges`` is an ``(m, 2)`` array with ``u < v`` in every row, rows sorted
    lexicographically. ``indptr``/``indices`` hold sorted neighbour lists.
    All arrays are read-only.
    """

    __slots__ = ("n", "edges", "degree", "indptr", "indices")

    def __init__(self, n: int, edges):
        n = int(n)
        if n < 0:
            raise GraphError("vertex count must be non-negative")
        e = np.asarray(edges, dtype=np.int64)
        if e.size == 0:
            e = np.empty((0, 2), dtype=np.int64)
        if e.ndim != 2 or e.shape[1] != 2:
            raise GraphError("edges must be an (m, 2) array")
        if e.size and (e.min() < 0 or e.max() >= n):
            raise GraphError(f"edge endpoint out of range for n={n}")
        if np.any(e[:, 0] == e[:, 1]):
            raise GraphError("self-loop in edge list")

        lo = np.minimum(e[:, 0], e[:, 1])
        hi = np.maximum(e[:, 0], e[:, 1])
        order = np.lexsort((hi, lo))
        e = np.column_stack((lo[order], hi[order]))
        if e.shape[0] > 1:
            dup = np.all(e[1:] == e[:-1], axis=1)
            if dup.any():
                u, v = e[1:][dup][0]
                raise GraphError(f"duplicate edge ({u}, {v})")

        degree = np.bincount(e.ravel(), minlength=n).astype(np.int64)
        src = np.concatenate((e[:, 0], e[:, 1]))
        dst = np.concatenate((e[:, 1], e[:, 0]))
        order = np.lexsort((dst, src))
        indptr = np.zeros(n + 1, dtype=np.int64)
        np.cumsum(degree, out=indptr[1:])
        indices = dst[order]

        for arr in (e, degree, indptr, indices):
            arr.setflags(write=False)
        self.n = n
        self.edges = e
        self.degree = degree
        self.indptr = indptr
        self.indices = indices

    @property
    def m(self) -> int:
        return int(self.edges.shape[0])

    def neighbors(self, v: int) -> np.ndarray:
        return self.indices[self.indptr[v]:self.indptr[v + 1]]

    def has_edge(self, u: int, v: int) -> bool:
        nb = self.neighbors(u)
        i = np.searchsorted(nb, v)
        return bool(i < nb.size and nb[i] == v)

    def edge_set(self) -> set[tuple[int, int]]:
        return set(map(tuple, self.edges.tolist()))

    def adjacency_matrix(self) -> np.ndarray:
        """Dense boolean adjacency; meant for small graphs."""
        a = np.zeros((self.n, self.n), dtype=bool)
        a[self.edges[:, 0], self.edges[:, 1]] = True
        a[self.edges[:, 1], self.edges[:, 0]] = True
        return a

    def __eq__(self, other):
        if not isinstance(other, SimpleGraph):
            return NotImplemented
        return self.n == other.n and np.array_equal(self.edges, other.edges)

    def __hash__(self):
        return hash((self.n, self.edges.tobytes()))

    def __repr__(self):
        return f"SimpleGraph(n={self.n}, m={self.m})"

    @classmethod
    def complete(cls, n: int) -> "SimpleGraph":
        iu = np.triu_indices(n, 1)
        return cls(n, np.column_stack(iu))

    @classmethod
    def cycle(cls, n: int) -> "SimpleGraph":
        v = np.arange(n)
        return cls(n, np.column_stack((v, (v + 1) % n)))

    @classmethod
    def path(cls, n: int) -> "SimpleGraph":
        v = np.arange(n - 1)
        return cls(n, np.column_stack((v, v + 1)))

    @classmethod
    def star(cls, leaves: int) -> "SimpleGraph":
        v = np.arange(1, leaves + 1)
        return cls(leaves + 1, np.column_stack((np.zeros_like(v), v)))

    @classmethod
    def from_adjacency(cls, adj) -> "SimpleGraph":
        a = np.asarray(adj, dtype=bool)
        u, v = np.nonzero(np.triu(a, 1))
        return cls(a.shape[0], np.column_stack((u, v)))
