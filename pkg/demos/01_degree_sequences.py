"""
Scale-free degree sequences
===========================

Degrees are rounded-up Pareto draws: P(deg > k) = (d_min / k)^gamma.
This script compares empirical tails with the closed form and shows the
parity fix that makes every sequence's sum even.
"""

import numpy as np

from scalefree_clustering import DegreeDistribution, make_rng, mean_degree, sample_sequence

dist = DegreeDistribution(gamma=1.5, d_min=1)
rng = make_rng(2024)

seq = sample_sequence(dist, 100_000, rng)
d = seq.degrees
print(f"n = {seq.n}, sum = {seq.total} (even: {seq.total % 2 == 0})")
print(f"max degree = {d.max()}, roughly n^(1/gamma) = {seq.n ** (1 / dist.gamma):.0f}")

print("\n    x   empirical P(deg > x)   (1/x)^gamma")
for x in (2, 5, 10, 50, 100, 1000):
    print(f"{x:5d}   {np.mean(d > x):20.6f}   {dist.tail(x):11.6f}")

# the sample mean wanders because the variance is infinite for gamma < 2
print(f"\nE[deg] = {mean_degree(dist):.6f}, sample mean = {d.mean():.6f}")
