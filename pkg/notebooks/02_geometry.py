"""
Distance to the boundary
========================

F maps the disk onto the complement of a convex sector. The boundary
distance from F(0) = 0 is measured by sampling F on the circle, and then
compared with two predictions: the vertex distance |b| = 1/(|1+x| alpha)
and the exact distance to the sector's edge rays.
"""

import math

from concave_dirichlet.concave import ConcaveMapSpec, boundary_distance, hyperbolic_product
from concave_dirichlet.harness import wedge_distance
from concave_dirichlet.hypergeom import UnitModulusParameter

print(f"{'alpha':>6} {'gamma':>8} {'sampled':>10} {'vertex':>10} {'sector':>10}")
for alpha in (1.25, 1.5, 2.0):
    for gamma in (0.0, math.pi / 3, -math.pi / 3):
        spec = ConcaveMapSpec(alpha, UnitModulusParameter(gamma))
        d = boundary_distance(spec, 0.0)
        print(f"{alpha:6.2f} {gamma:8.4f} {d:10.6f} {abs(spec.b):10.6f} {wedge_distance(spec):10.6f}")

# the vertex is nearest only while |gamma| <= pi (1 - 1/alpha)
for alpha in (1.25, 1.5, 2.0):
    print(f"alpha={alpha}: vertex is nearest for |gamma| <= {math.pi * (1 - 1 / alpha):.4f}")

# distance times hyperbolic density, sampled inside the disk
spec = ConcaveMapSpec(1.5, UnitModulusParameter(0.5))
for a in (0.0, 0.4, 0.4j, -0.7, 0.8 * complex(math.cos(2), math.sin(2))):
    print(f"a = {a!s:>24}  product = {hyperbolic_product(spec, a):.6f}")
