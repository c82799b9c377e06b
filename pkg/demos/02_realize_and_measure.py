"""
Havel–Hakimi graphs and their clustering
========================================

Sample a sequence, test it with Erdős–Gallai, realize it with Havel–Hakimi
and measure wedges, triangles and both clustering coefficients.
"""

from math import comb

from scalefree_clustering import (
    DegreeDistribution,
    compute_metrics,
    degree_h_index,
    erdos_gallai_check,
    havel_hakimi,
    make_rng,
    sample_sequence,
)

for gamma in (1.5, 2.5):
    seq = sample_sequence(DegreeDistribution(gamma), 20_000, make_rng(1))
    verdict = erdos_gallai_check(seq)
    print(f"gamma = {gamma}: graphic = {verdict.graphic}")
    if not verdict.graphic:
        continue
    g = havel_hakimi(seq)
    m = compute_metrics(g)
    h = degree_h_index(seq)
    print(f"  edges {m.edges}, wedges {m.wedges}, triangles {m.triangles}")
    print(f"  C1 = {m.c1:.4f}, C2 = {m.c2:.4f}, max degree {m.max_degree}")
    print(f"  h-index {h}: C(h, 3) = {comb(h, 3)} triangles from the top vertices alone")

# not graphic: the inequality already fails at k = 2
print(erdos_gallai_check([3, 3, 3, 1]))
