"""The projective plane over the octonions, point by point.

Points are unit triples (x, y, z) generating an associative subalgebra,
identified through six invariant products.  Run:

    python demos/projective_charts.py
"""

import math
import random

import numpy as np

from octoplane import (
    CDNumber,
    Functional,
    LinePoint,
    attaching_map,
    chart_backward,
    chart_forward,
    disk_extension,
    equivalent,
    eval_functional,
    invariants_of,
    line_include,
    line_to_sphere,
    separating_functional,
    sphere_to_line,
)
from octoplane.projective import (
    equivalent_representative,
    random_line_point,
    random_triple_point,
)

rng = random.Random(2024)

# A random plane point, built through a chart so that the membership
# constraints hold by construction.
p = random_triple_point(8, rng)
inv = invariants_of(p)
print("a point of the plane, via its six invariants (real parts):")
print("  xx*, yy*, zz* =", [round(g.coords[0], 4) for g in (inv.xx, inv.yy, inv.zz)])
print("  trace =", round(inv.xx.coords[0] + inv.yy.coords[0] + inv.zz.coords[0], 12))
print()

# Multiplying all three entries by a unit of their subalgebra changes the
# representative but not the point.
q = equivalent_representative(p, rng)
print("same point, different representative?", equivalent(p, q))
print("max invariant drift:", f"{invariants_of(p).max_difference(invariants_of(q)):.2e}")
print()

# Charts: the functional (a, b, c) evaluates to ax + by + cz, and where
# it does not vanish the class is coordinatized by a pair of octonions.
f = Functional(0.0, 0.0, 1.0)
u = CDNumber(3, tuple(rng.gauss(0, 1) for _ in range(8)))
v = CDNumber(3, tuple(rng.gauss(0, 1) for _ in range(8)))
point = chart_backward(f, u, v)
u2, v2 = chart_forward(f, point)
print("chart round trip error:", f"{max((u2 - u).max_abs(), (v2 - v).max_abs()):.2e}")
print()

# Hausdorff at desk scale: any two points admit a functional vanishing on
# neither, so disjoint chart neighbourhoods exist.
a = random_triple_point(8, rng)
b = random_triple_point(8, rng)
sep = separating_functional(a, b)
print("separating functional:", sep)
print(
    "  |l(a)|, |l(b)| =",
    round(math.sqrt(eval_functional(sep, a).norm_sq()), 4),
    round(math.sqrt(eval_functional(sep, b).norm_sq()), 4),
)
print()

# The projective line [x, y] inside the plane is a sphere: the map
# [x, y] -> (2 x y*, |x|^2 - |y|^2) lands on S^8 and is invertible up to
# equivalence.
lp = random_line_point(8, rng)
s = line_to_sphere(lp)
print("line point -> sphere point, norm =", round(float(np.linalg.norm(s)), 12))
back = sphere_to_line(s)
print("sphere -> line -> sphere drift:", f"{float(np.max(np.abs(line_to_sphere(back) - s))):.2e}")
print()

# The cell picture: the 16-disk maps onto the plane by appending
# sqrt(1 - |x|^2 - |y|^2); on the boundary sphere this factors through
# the attaching map onto the line.
north = LinePoint(CDNumber.one(3), CDNumber.zero(3))
print("disk center maps to:", disk_extension(CDNumber.zero(3), CDNumber.zero(3)).z)
boundary = disk_extension(north.x, north.y)
print(
    "boundary point agrees with attached line point?",
    equivalent(boundary, line_include(attaching_map(north.x, north.y))),
)
