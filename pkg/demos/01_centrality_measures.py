#!/usr/bin/env python3
# Per-node and pairwise measures on small graphs: information centrality,
# node certainty, resistance distance and biharmonic distance.

import numpy as np

from leadsel import (
    biharmonic_matrix,
    complete,
    compute_kernels,
    cycle,
    info_centrality,
    certainty_inverse,
    path,
    resistance_matrix,
)

np.set_printoptions(precision=4, suppress=True)

# A path makes the measures easy to eyeball: the middle node is the most
# information-central, and resistance distance is just hop count.
g = path(5)
k = compute_kernels(g)
print("path(5)")
print("  info centrality:", info_centrality(k))
print("  certainty inverse (smaller = more certain):", certainty_inverse(k))
print("  resistance row 0:", resistance_matrix(k)[0])
print("  biharmonic row 0:", biharmonic_matrix(k)[0])
print("  Kirchhoff index:", k.kirchhoff)
print()

# On a cycle every node looks the same; on a complete graph every pair does.
for g in (cycle(6), complete(4)):
    k = compute_kernels(g)
    c = info_centrality(k)
    print(f"{'cycle(6)' if g.n == 6 else 'complete(4)'}: centrality spread = {np.ptp(c):.2e}")
print()

# The row sums of the resistance matrix encode information centrality:
# sum_j r[i, j] = n / c_i. Check it on a path.
k = compute_kernels(path(7))
r = resistance_matrix(k)
c = info_centrality(k)
print("row-sum identity |sum_j r - n/c| =", np.abs(r.sum(axis=1) - 7 / c).max())

# Resistance is a metric and sqrt(biharmonic) is a metric: spot-check one
# triangle on the path.
gamma = biharmonic_matrix(k)
i, j, l = 0, 3, 6
print("triangle r:", r[i, l], "<=", r[i, j] + r[j, l])
print("triangle sqrt(gamma):", np.sqrt(gamma[i, l]), "<=", np.sqrt(gamma[i, j]) + np.sqrt(gamma[j, l]))
