"""
Random stub pairing almost never gives a simple graph
=====================================================

With infinite-variance degrees, uniform pairing of stubs produces loops or
multi-edges with probability tending to one, while Erdős–Gallai says a
simple realization exists for nearly every sample.
"""

from scalefree_clustering import DegreeDistribution, graphic_fraction, simplicity_fraction

dist = DegreeDistribution(1.5, 1)
grid = [100, 1000, 10_000]
simple = simplicity_fraction(dist, grid, replicas=100, seed=0)
for n, s in zip(grid, simple):
    g = graphic_fraction(dist, n, replicas=100, seed=0)
    print(f"n = {n:6d}: simple pairing {s:.2f}   graphic sequence {g:.2f}")
