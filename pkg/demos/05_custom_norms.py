"""
Distances depend on the ball you measure with
=============================================

A Minkowski norm is determined by its unit ball, any centrally symmetric
polytope with the origin inside.  Beyond the built-in l1 and l-infinity
balls you can supply your own, giving both the vertex and facet form; the
constructor cross-checks them.  The same pair of points can then be close
under one ball and far under another.
"""

from minkgeom import (
    HPolytope,
    VPolytope,
    custom_ball,
    dual_support,
    halfspace,
    l1_ball,
    linf_ball,
    norm,
    point_hyperplane_distance,
)
from minkgeom.qlinalg import vsub

# An affinely regular hexagon: vertices at the sixth roots of unity pushed
# onto the integer lattice.
hexagon = custom_ball(
    VPolytope(2, ((1, 0), (0, 1), (-1, 1), (-1, 0), (0, -1), (1, -1))),
    HPolytope(
        2,
        tuple(
            halfspace(a, 1)
            for a in ((1, 1), (-1, -1), (1, 0), (-1, 0), (0, 1), (0, -1))
        ),
    ),
)

balls = (("l1", l1_ball(2)), ("linf", linf_ball(2)), ("hexagon", hexagon))

print("norms of a few vectors under three balls")
for x in ((1, 0), (1, 1), (-1, 1), (3, -2)):
    row = ", ".join(f"{name}: {norm(x, ball)}" for name, ball in balls)
    print(f"  |{x}|  ->  {row}")
print()

# The hexagon is not symmetric under swapping coordinates with a sign:
# (1, 1) sits on a facet while (-1, 1) is a vertex scaled by one.
assert norm((1, 1), hexagon) == 2
assert norm((-1, 1), hexagon) == 1

# The distance between two points is the norm of their difference.
p, q = (2, 1), (-1, 3)
print("distance from", p, "to", q)
for name, ball in balls:
    print(f"  {name}:", norm(vsub(p, q), ball))
print()

# Distance from a point to a hyperplane divides by the dual norm of the
# normal vector, computed as the support function of the ball.
a, c = (1, 2), 4
print("distance from the origin to the line x + 2y = 4")
for name, ball in balls:
    d = point_hyperplane_distance((0, 0), a, c, ball)
    print(f"  {name}: {d}   (dual norm of {a} is {dual_support(a, ball)})")

# Sanity: scaling the ball down makes every distance larger, so the l1
# distance (smallest ball here) dominates the others.
for x in ((1, 0), (1, 1), (-1, 1), (3, -2)):
    assert norm(x, l1_ball(2)) >= norm(x, hexagon) >= norm(x, linf_ball(2))
print()
print("l1 ball inside hexagon inside linf ball: norms decrease accordingly")
