#!/usr/bin/env python3
# Optimal leader selection: exhaustive search, the greedy baseline, and the
# closed-form solutions for cycles and paths. Ties are enumerated, which on
# symmetric graphs exposes the whole orbit of optimal placements.

from leadsel import (
    closed_form_cycle,
    closed_form_cycle_two,
    closed_form_path_two,
    cycle,
    exhaustive_select,
    greedy_select,
    path,
)

# Exhaustive search on a cycle returns every rotation of the optimum.
res = exhaustive_select(cycle(6), 3)
print("cycle(6), m=3 exhaustive:", res.optimal_sets, f"error={res.objective.total_error:.4f}")
print("closed form:", closed_form_cycle(6, 3).optimal_sets, "-", closed_form_cycle(6, 3).notes[0])
print()

# Greedy is optimal on cycles only when m is a power of two. On cycle(12)
# with m=3 it locks in the antipodal pair and cannot reach uniform spacing.
greedy = greedy_select(cycle(12), 3)
exact = exhaustive_select(cycle(12), 3)
print(f"cycle(12), m=3: greedy {greedy.optimal_sets[0]} error={greedy.objective.total_error:.4f}"
      f"  vs exhaustive {exact.optimal_sets[0]} error={exact.objective.total_error:.4f}")
for m in (1, 2, 4):
    gr = greedy_select(cycle(8), m)
    ex = exhaustive_select(cycle(8), m)
    print(f"cycle(8), m={m}: greedy error {gr.objective.total_error:.6f}"
          f"  exhaustive {ex.objective.total_error:.6f}")
print()

# Two leaders on an even cycle: any antipodal pair (same for any gain).
print("cycle(10) antipodal pairs:", closed_form_cycle_two(10).optimal_sets)
print()

# Two leaders on a path sit near 20% and 80% of its length; at multiples of
# five the rounding is ambiguous and the mirror pair ties.
for n in (9, 25, 50):
    closed = closed_form_path_two(n)
    exact = exhaustive_select(path(n), 2)
    print(f"path({n}): closed {closed.optimal_sets}  exhaustive {exact.optimal_sets}")
