"""From a fractional cover to integral centers, one reduction step at a time.

The solver's core move turns a fractional coverage vector into a star forest:
greedy bottleneck partitions pick leaf representatives at twice the small
radius and root representatives at twice the large radius, leaf weights count
absorbed points, and a budgeted selection on the forest lifts back to centers
at dilation alpha1 + alpha2 = 4.  This demo walks a hand-sized line metric
through every stage and checks the claims as it goes.

Run:  python3 demos/reduction_tour.py
"""

import numpy as np

from nukc import (CoverageVector, MetricSpace, NUkCInstance, covered_leaves,
                  frac_ff_solution, hs_partition, lift_ff_solution,
                  reduce_to_firefighter, solve_2ff, verify_solution)

# A town of five, a hamlet of three, and a loner, all on a line.  One wide
# ball for the town, one narrow ball for the hamlet, loner left out.
xs = [0.0, 0.8, 1.6, 2.4, 3.2, 10.0, 10.3, 10.6, 20.0]
inst = NUkCInstance(MetricSpace.from_points([[x] for x in xs]),
                    r1=2.0, r2=0.5, k1=1, k2=1, m=8)
print(f"points: {xs}")
print(f"radii r1={inst.r1}, r2={inst.r2}; budgets k1={inst.k1}, "
      f"k2={inst.k2}; target m={inst.m}")

# A fractional cover of total mass exactly m, spread the way a relaxation
# likes to: nine tenths of a wide ball on each town point, half of one on
# the loner, and full narrow coverage on the hamlet.
cov = CoverageVector(
    cov1=np.array([0.9, 0.9, 0.9, 0.9, 0.9, 0.0, 0.0, 0.0, 0.5]),
    cov2=np.array([0.0, 0.0, 0.0, 0.0, 0.0, 1.0, 1.0, 1.0, 0.0]),
)
print(f"\nfractional mass: {float((cov.cov1 + cov.cov2).sum())} >= m={inst.m}")

# Stage 1: partition everything at radius 2*r2 by total coverage.  The
# representatives are pairwise more than the radius apart, each absorbs the
# points within the radius, and each dominates its children's coverage.
total = cov.cov1 + cov.cov2
layer2 = hs_partition(inst.metric, range(inst.n), 2 * inst.r2, total)
print(f"\nleaf layer (radius {2 * inst.r2}):")
for u in layer2.reps:
    print(f"  rep {u} at x={xs[u]}: absorbs {layer2.child[u]}")
d = inst.metric.dist
assert all(d[u, v] > 2 * inst.r2
           for u in layer2.reps for v in layer2.reps if u != v)
assert all(total[u] >= total[v]
           for u in layer2.reps for v in layer2.child[u])

# Stage 2: the full reduction repeats the trick on the representatives at
# radius 2*r1, ordered by wide coverage alone, and records cluster sizes as
# leaf weights.
tree = reduce_to_firefighter(inst, alpha1=2.0, alpha2=2.0, cov=cov)
print("\nstar forest:")
for root in tree.roots:
    leaves = ", ".join(f"leaf {v} (w={tree.w[v]})" for v in tree.leafset[root])
    print(f"  root {root} at x={xs[root]}: {leaves}")

# Stage 3: the coverage vector itself is a fractional selection on the
# forest (roots take cov1, leaves the leftover), worth at least the mass.
frac = frac_ff_solution(tree, cov)
print(f"\nfractional forest value: {frac.value} "
      f"(y_root={ {u: round(y, 2) for u, y in frac.y_root.items()} })")

# Stage 4: the DP finds the best integral selection under the budgets.
# Here it matches the fractional value; when it falls short of m instead,
# that shortfall is exactly what the solver turns into a cutting plane
# (demos/find_gap_fixture.py hunts for such instances).
best = solve_2ff(tree)
print(f"integral optimum: roots {best.t1}, leaves {best.t2}, "
      f"value {best.value}")
saved = covered_leaves(tree, best.t1, best.t2)
print(f"saved leaves: {saved} "
      f"(weights {[tree.w[v] for v in saved]})")

# Stage 5: lift.  Selected roots become wide centers, selected leaves narrow
# ones, and the dilation pays for both partition radii.
sol = lift_ff_solution(tree, best)
ok, count = verify_solution(inst, sol, sol.dilation)
print(f"\nlifted solution: centers1={sol.centers1} centers2={sol.centers2} "
      f"at dilation {sol.dilation}")
print(f"covers {count} >= m={inst.m}: {ok}")
