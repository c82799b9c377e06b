"""Regularly varying degree distributions and even-sum degree sequences.

Degrees follow a discretized Pareto law: a continuous Pareto variable ``X``
with ``P(X > x) = (d_min / x) ** gamma`` for ``x >= d_min`` is rounded up, so
for every integer ``k >= d_min``

    P(deg > k) = (d_min / k) ** gamma

and the tail exponent is exact at every scale.

Random streams are numpy ``Generator`` objects backed by PCG64. Replica
streams are derived from ``(master_seed, n, replica)`` through
``SeedSequence`` spawn keys, so results do not depend on execution order.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

SEED_MAX = 2**64 - 1


@dataclass(frozen=True)
class DegreeDistribution:
    """Pure Pareto tail with exponent ``gamma`` and minimum degree ``d_min``."""

    gamma: float
    d_min: int = 1

    def __post_init__(self):
        if not math.isfinite(self.gamma) or self.gamma <= 1:
            raise ValueError(f"gamma must be > 1, got {self.gamma}")
        if int(self.d_min) != self.d_min or self.d_min < 1:
            raise ValueError(f"d_min must be an integer >= 1, got {self.d_min}")
        object.__setattr__(self, "d_min", int(self.d_min))

    def tail(self, x: float) -> float:
        """P(deg > x) for real ``x``; exact at integers."""
        k = math.floor(x)
        if k < self.d_min:
            return 1.0
        return (self.d_min / k) ** self.gamma


@dataclass(frozen=True, eq=False)
class DegreeSequence:
    """Degrees ``d[0..n-1]`` of a graph in input order (not sorted)."""

    degrees: np.ndarray
    distribution: DegreeDistribution | None = field(default=None, compare=False)

    def __post_init__(self):
        arr = np.array(self.degrees, dtype=np.int64, copy=True).reshape(-1)
        if arr.size and arr.min() < 0:
            raise ValueError("degrees must be non-negative")
        arr.setflags(write=False)
        object.__setattr__(self, "degrees", arr)

    def __len__(self):
        return int(self.degrees.size)

    def __iter__(self):
        return iter(self.degrees.tolist())

    def __eq__(self, other):
        if not isinstance(other, DegreeSequence):
            return NotImplemented
        return np.array_equal(self.degrees, other.degrees)

    @property
    def n(self) -> int:
        return len(self)

    @property
    def total(self) -> int:
        return int(self.degrees.sum())

    def sorted_desc(self) -> np.ndarray:
        return np.sort(self.degrees)[::-1]


def make_rng(seed: int) -> np.random.Generator:
    """PCG64 generator for a 64-bit unsigned seed."""
    return np.random.Generator(np.random.PCG64(np.random.SeedSequence(_check_seed(seed))))


def replica_rng(master_seed: int, n: int, replica: int) -> np.random.Generator:
    """Independent stream for one replica at size ``n``."""
    ss = np.random.SeedSequence(_check_seed(master_seed), spawn_key=(int(n), int(replica)))
    return np.random.Generator(np.random.PCG64(ss))


def _check_seed(seed) -> int:
    seed = int(seed)
    if not 0 <= seed <= SEED_MAX:
        raise ValueError(f"seed must fit in 64 unsigned bits, got {seed}")
    return seed


def degree_from_uniform(dist: DegreeDistribution, u):
    """Inverse-CDF map from ``u`` in (0, 1] to a degree: ``ceil(d_min * u**(-1/gamma))``.

    Works elementwise on arrays. ``u == 1`` gives ``d_min``.
    """
    u = np.asarray(u, dtype=np.float64)
    if np.any((u <= 0) | (u > 1)):
        raise ValueError("u must lie in (0, 1]")
    x = np.ceil(dist.d_min * u ** (-1.0 / dist.gamma))
    # guards against float fuzz pushing exact d_min to d_min + 1
    x = np.maximum(x, dist.d_min)
    out = x.astype(np.int64)
    return int(out) if out.ndim == 0 else out


def _uniform_open_left(rng: np.random.Generator, size=None):
    # Generator.random draws from [0, 1); reflect to (0, 1]
    return 1.0 - rng.random(size)


def sample_degree(dist: DegreeDistribution, rng: np.random.Generator) -> int:
    return degree_from_uniform(dist, _uniform_open_left(rng))


def sample_degrees(dist: DegreeDistribution, size: int, rng: np.random.Generator) -> np.ndarray:
    """``size`` i.i.d. degrees, no parity correction."""
    return degree_from_uniform(dist, _uniform_open_left(rng, int(size)))


def sample_sequence(dist: DegreeDistribution, n: int, rng: np.random.Generator) -> DegreeSequence:
    """Draw ``n`` i.i.d. degrees; if the sum is odd the last entry is bumped by one."""
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    d = sample_degrees(dist, n, rng)
    if int(d.sum()) % 2:
        d[-1] += 1
    return DegreeSequence(d, dist)


def mean_degree(dist: DegreeDistribution, tol: float = 1e-10) -> float:
    """E[deg] = d_min + sum_{k >= d_min} (d_min / k) ** gamma.

    The head of the series is summed term by term up to a cutoff ``K``; the
    tail is the Euler-Maclaurin expansion through the third-derivative term.
    ``K`` is raised until the remainder bound of that expansion drops below
    ``tol``.
    """
    g = dist.gamma
    if g <= 1:
        raise ValueError("mean degree is infinite for gamma <= 1")
    d0 = dist.d_min
    scale = float(d0) ** g

    K = max(d0, 64)
    while _em_remainder_bound(g, K) * scale >= tol:
        K *= 2

    head = math.fsum((d0 / k) ** g for k in range(d0, K))
    # sum_{k >= K} k^-g ~ int_K^inf + f(K)/2 - f'(K)/12 + f'''(K)/720
    f = K ** -g
    f1 = -g * K ** (-g - 1)
    f3 = -g * (g + 1) * (g + 2) * K ** (-g - 3)
    tail = K ** (1 - g) / (g - 1) + f / 2 - f1 / 12 + f3 / 720
    return d0 + head + scale * tail


def _em_remainder_bound(g: float, K: int) -> float:
    # |R| <= |B6| / 6! * int_K^inf |f^(6)|  = |B6| / 720 * |f^(5)(K)|, B6 = 1/42
    f5 = g * (g + 1) * (g + 2) * (g + 3) * (g + 4) * K ** (-g - 5)
    return f5 / (42 * 720)
