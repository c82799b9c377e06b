"""Scaling experiments on Havel–Hakimi realizations of scale-free sequences.

Every replica draws from its own stream ``replica_rng(master_seed, n, r)``
and aggregation sorts by (n, replica), so reports are identical for any
worker count or scheduling order.
"""

from __future__ import annotations

import csv
import io
import json
import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Callable, Sequence

import numpy as np

from .builder import configuration_pairing, havel_hakimi
from .degree_model import DegreeDistribution, mean_degree, replica_rng, sample_sequence
from .graphical import erdos_gallai_check
from .metrics import compute_metrics, degree_h_index

PAPER_REPLICAS = 100
DEFAULT_REPLICAS = 20
DEFAULT_GRID = (1000, 3162, 10000, 31623, 100000)

CSV_HEADER = (
    "n", "replicas_used", "mean_edges", "sd_edges", "mean_wedges", "sd_wedges",
    "mean_triangles", "sd_triangles", "mean_c1", "sd_c1", "mean_max_degree",
    "mean_h_index", "graphic_fraction",
)


@dataclass(frozen=True)
class ScalingConfig:
    gamma: float
    d_min: int = 1
    n_grid: tuple[int, ...] = DEFAULT_GRID
    replicas: int = DEFAULT_REPLICAS
    master_seed: int = 0

    def __post_init__(self):
        grid = tuple(int(n) for n in self.n_grid)
        object.__setattr__(self, "n_grid", grid)
        if len(grid) < 3:
            raise ValueError("n_grid needs at least 3 sizes")
        if any(b <= a for a, b in zip(grid, grid[1:])) or grid[0] < 1:
            raise ValueError("n_grid must be strictly increasing positive sizes")
        if self.replicas < 1:
            raise ValueError("replicas must be >= 1")
        # validates gamma / d_min
        self.distribution

    @property
    def distribution(self) -> DegreeDistribution:
        return DegreeDistribution(self.gamma, self.d_min)


@dataclass(frozen=True)
class ReplicaResult:
    n: int
    replica: int
    graphic: bool
    max_degree: int
    h_index: int
    edges: int = 0
    wedges: int = 0
    triangles: int = 0
    c1: float = 0.0
    c2: float = 0.0


@dataclass
class SizeSummary:
    n: int
    replicas: int
    replicas_used: int
    graphic_fraction: float
    mean: dict[str, float] = field(default_factory=dict)
    sd: dict[str, float] = field(default_factory=dict)
    median_max_degree: float = math.nan
    median_wedges: float = math.nan

    @property
    def excluded(self) -> int:
        return self.replicas - self.replicas_used


@dataclass
class ScalingReport:
    config: ScalingConfig
    per_n: list[SizeSummary]
    fitted: dict[str, tuple[float, float]]
    theory: dict[str, float]
    skipped_sizes: list[int] = field(default_factory=list)

    def to_csv(self) -> str:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(CSV_HEADER)
        for s in self.per_n:
            w.writerow([
                s.n, s.replicas_used,
                _fmt(s.mean["edges"]), _fmt(s.sd["edges"]),
                _fmt(s.mean["wedges"]), _fmt(s.sd["wedges"]),
                _fmt(s.mean["triangles"]), _fmt(s.sd["triangles"]),
                _fmt(s.mean["c1"]), _fmt(s.sd["c1"]),
                _fmt(s.mean["max_degree"]), _fmt(s.mean["h_index"]),
                _fmt(s.graphic_fraction),
            ])
        return buf.getvalue()

    def footer(self) -> dict:
        c = self.config
        return {
            "gamma": c.gamma,
            "d_min": c.d_min,
            "n_grid": list(c.n_grid),
            "replicas": c.replicas,
            "master_seed": c.master_seed,
            "fitted": {k: {"slope": _sig(v[0]), "stderr": _sig(v[1])} for k, v in self.fitted.items()},
            "theory": {k: _sig(v) for k, v in self.theory.items()},
            "excluded": {str(s.n): s.excluded for s in self.per_n},
            "median_max_degree": {str(s.n): _sig(s.median_max_degree) for s in self.per_n},
            "median_wedges": {str(s.n): _sig(s.median_wedges) for s in self.per_n},
            "skipped_sizes": list(self.skipped_sizes),
        }

    def to_json(self) -> str:
        return json.dumps(self.footer(), indent=2) + "\n"


def _sig(x: float) -> float | None:
    if x is None or not math.isfinite(x):
        return None
    return float(f"{x:.6g}")


def _fmt(x: float) -> str:
    if isinstance(x, float) and not math.isfinite(x):
        return "nan"
    return f"{x:.6g}"


def theory_exponents(gamma: float) -> dict[str, float]:
    heavy = gamma < 2
    return {
        "wedges": 2 / gamma if heavy else 1.0,
        "triangles": 3 / (gamma + 1) if heavy else 1.0,
        "max_degree": 1 / gamma,
        "h_index": 1 / (gamma + 1),
        "c1_bound": -((gamma - 2) ** 2) / (2 * gamma),
    }


def fit_loglog_slope(points: Sequence[tuple[float, float]]) -> tuple[float, float]:
    """OLS slope of log(value) on log(size) and its standard error.

    The standard error is 0 for two points (no residual degrees of freedom).
    """
    pts = list(points)
    if len(pts) < 2:
        raise ValueError("need at least 2 points")
    x = np.array([p[0] for p in pts], dtype=np.float64)
    y = np.array([p[1] for p in pts], dtype=np.float64)
    if np.any(x <= 0) or np.any(y <= 0):
        raise ValueError("sizes and values must be positive")
    lx, ly = np.log(x), np.log(y)
    xc = lx - lx.mean()
    sxx = float(xc @ xc)
    if sxx == 0:
        raise ValueError("sizes must not all be equal")
    slope = float(xc @ (ly - ly.mean())) / sxx
    m = len(pts)
    if m == 2:
        return slope, 0.0
    resid = ly - ly.mean() - slope * xc
    return slope, math.sqrt(float(resid @ resid) / (m - 2) / sxx)


def run_replica(dist: DegreeDistribution, n: int, replica: int, master_seed: int) -> ReplicaResult:
    """sample -> Erdős–Gallai -> Havel–Hakimi -> metrics for one replica."""
    seq = sample_sequence(dist, n, replica_rng(master_seed, n, replica))
    max_degree = int(seq.degrees.max())
    h = degree_h_index(seq)
    if not erdos_gallai_check(seq).graphic:
        return ReplicaResult(n, replica, False, max_degree, h)
    m = compute_metrics(havel_hakimi(seq))
    return ReplicaResult(n, replica, True, max_degree, h, m.edges, m.wedges, m.triangles, m.c1, m.c2)


def _replica_task(args):
    return run_replica(*args)


def run_replicas(config: ScalingConfig, workers: int = 1) -> list[ReplicaResult]:
    dist = config.distribution
    tasks = [(dist, n, r, config.master_seed) for n in config.n_grid for r in range(config.replicas)]
    if workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as ex:
            results = list(ex.map(_replica_task, tasks, chunksize=max(1, len(tasks) // (4 * workers))))
    else:
        results = [_replica_task(t) for t in tasks]
    return sorted(results, key=lambda r: (r.n, r.replica))


def summarize(config: ScalingConfig, results: Sequence[ReplicaResult]) -> ScalingReport:
    per_n = []
    for n in config.n_grid:
        rows = sorted((r for r in results if r.n == n), key=lambda r: r.replica)
        good = [r for r in rows if r.graphic]
        s = SizeSummary(n, len(rows), len(good), len(good) / len(rows) if rows else 0.0)
        for key in ("edges", "wedges", "triangles", "c1", "max_degree", "h_index"):
            vals = np.array([getattr(r, key) for r in good], dtype=np.float64)
            s.mean[key] = float(vals.mean()) if vals.size else math.nan
            s.sd[key] = float(vals.std(ddof=1)) if vals.size > 1 else math.nan
        if good:
            s.median_max_degree = float(np.median([r.max_degree for r in good]))
            s.median_wedges = float(np.median([r.wedges for r in good]))
        per_n.append(s)

    usable = [s for s in per_n if s.replicas_used >= 2]
    skipped = [s.n for s in per_n if s.replicas_used < 2]
    fitted = {}
    series = {
        "wedges": lambda s: s.mean["wedges"],
        "triangles": lambda s: s.mean["triangles"],
        "max_degree": lambda s: s.median_max_degree,
        "h_index": lambda s: s.mean["h_index"],
        "c1": lambda s: s.mean["c1"],
        "median_wedges": lambda s: s.median_wedges,
    }
    for name, get in series.items():
        pts = [(s.n, get(s)) for s in usable if get(s) > 0]
        if len(pts) >= 2:
            fitted[name] = fit_loglog_slope(pts)
    return ScalingReport(config, per_n, fitted, theory_exponents(config.gamma), skipped)


def run_scaling(config: ScalingConfig, workers: int = 1) -> ScalingReport:
    """Full scaling study; sizes with fewer than 2 graphic replicas are not fitted."""
    return summarize(config, run_replicas(config, workers))


def graphic_fraction(dist: DegreeDistribution, n: int, replicas: int, seed: int) -> float:
    if replicas < 1:
        raise ValueError("replicas must be >= 1")
    hits = sum(
        erdos_gallai_check(sample_sequence(dist, n, replica_rng(seed, n, r))).graphic
        for r in range(replicas)
    )
    return hits / replicas


def edge_bound_fraction(dist: DegreeDistribution, n: int, replicas: int, seed: int) -> float:
    """Share of replicas with n*E[deg]/4 <= edges <= 3*n*E[deg]/4."""
    if replicas < 1:
        raise ValueError("replicas must be >= 1")
    mu = mean_degree(dist)
    lo, hi = n * mu / 4, 3 * n * mu / 4
    hits = 0
    for r in range(replicas):
        edges = sample_sequence(dist, n, replica_rng(seed, n, r)).total / 2
        hits += lo <= edges <= hi
    return hits / replicas


SequenceFactory = Callable[[int, np.random.Generator], Sequence[int]]


def simplicity_fraction(
    dist: DegreeDistribution,
    n_grid: Sequence[int],
    replicas: int,
    seed: int,
    sequence_factory: SequenceFactory | None = None,
) -> list[float]:
    """Per size, the share of configuration-model pairings with no loop or multi-edge.

    ``sequence_factory(n, rng)`` replaces the sampled sequence when given;
    the pairing then uses the same replica stream.
    """
    if replicas < 1:
        raise ValueError("replicas must be >= 1")
    out = []
    for n in n_grid:
        hits = 0
        for r in range(replicas):
            rng = replica_rng(seed, n, r)
            seq = sequence_factory(n, rng) if sequence_factory else sample_sequence(dist, n, rng)
            hits += configuration_pairing(seq, rng).simple
        out.append(hits / replicas)
    return out


def fraction_csv(rows: Sequence[tuple[int, float]]) -> str:
    lines = ["n,fraction"] + [f"{n},{_fmt(float(f))}" for n, f in rows]
    return "\n".join(lines) + "\n"
