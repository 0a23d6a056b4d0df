"""
Every vertex can realize the diameter and the body still be incomplete
======================================================================

A body is complete when no strict superset keeps the same diameter.  The
decision procedure compares the body against its ball hull, the
intersection of all diameter-radius balls centered in the body: the body
always sits inside that hull, and it is complete exactly when the hull
fits back inside the body.

A tempting shortcut, checking that each vertex has another vertex at
diameter distance, is necessary but not sufficient.  The cube under the
l1 norm passes the vertex check and still fails completeness.
"""

from minkgeom import (
    VPolytope,
    ball_hull,
    diameter,
    is_complete,
    is_subset,
    l1_ball,
    vertex_diameter_realization,
)
from minkgeom.qlinalg import fmt_rat, fmt_vec

from itertools import product

cube = VPolytope(3, tuple(product((-1, 1), repeat=3)))
ball = l1_ball(3)

diam, pair = diameter(cube, ball)
print("cube under l1: diameter", diam, "between vertices", pair)

realized, witnesses = vertex_diameter_realization(cube, ball)
print("every vertex has a partner at diameter distance:", realized)
print("witness vertex per vertex:", witnesses)

report = is_complete(cube, ball)
print("complete:", report.complete)
v = report.violation
print("violated facet:", v["facet"].normal, "<=", fmt_rat(v["facet"].rhs))
print("ball hull reaches", fmt_rat(v["optimum"]), "at", fmt_vec(v["point"]))
print()

# The point the report names is in every diameter ball around the cube but
# outside the cube, so the cube could grow without increasing its diameter.
assert not report.complete and realized

# A complete body for contrast: the tetrahedron with vertices at
# alternating cube corners closes the gap between itself and its hull.
tetra = VPolytope(3, ((-1, -1, -1), (1, 1, -1), (1, -1, 1), (-1, 1, 1)))
tetra_report = is_complete(tetra, ball)
print("tetrahedron under l1: diameter", fmt_rat(tetra_report.diameter),
      "complete:", tetra_report.complete)
print()

# Ball hulls grow with the radius, and the body always sits inside its own
# ball hull at any positive radius at least the diameter of a point set.
print("ball hull facets of the tetrahedron at radius 4:")
for f in ball_hull(tetra, 4, ball).facets:
    print("  ", f.normal, "<=", fmt_rat(f.rhs))
small = ball_hull(tetra, 4, ball)
large = ball_hull(tetra, 5, ball)
print("hull at radius 4 inside hull at radius 5:", is_subset(small, large))
print("tetrahedron inside its radius-4 hull:", is_subset(tetra, small))
