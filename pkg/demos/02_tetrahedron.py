"""
A regular tetrahedron under the taxicab norm
============================================

The tetrahedron with vertices (-1,-1,-1), (1,1,-1), (1,-1,1), (-1,1,1) is
equilateral when distances are measured in the l1 norm: every pair of
vertices is at distance 4.  It is diametrically complete (no strictly larger
body keeps diameter 4), yet it is not reduced: a corner can be cut off
without lowering the thickness.  Everything below is computed in exact
rational arithmetic.
"""

from minkgeom import (
    diameter,
    inball_scale,
    is_complete,
    l1_ball,
    metrics_report,
    norm,
    simplex_hrep,
    tetrahedron_k,
    thickness,
    verify_reduction_witness,
)
from minkgeom.polytope import halfspace
from minkgeom.qlinalg import fmt_vec, vsub

K = tetrahedron_k()
ball = l1_ball(3)

print("vertices:", K.vertices)
for i, v in enumerate(K.vertices):
    for j, w in enumerate(K.vertices):
        if i < j:
            print(f"  |v{i} - v{j}|_1 =", norm(vsub(v, w), ball))

d, pair = diameter(K, ball)
print("diameter:", d, "attained by vertex pair", pair)

t, direction = thickness(K, ball)
print("thickness:", t, "in direction", fmt_vec(direction))

print("inscribed ball scale:", inball_scale(simplex_hrep(K), ball))
print("complete:", is_complete(K, ball).complete)

# Cut off the corner at (-1,-1,-1) with the plane x + y + z = -1.  The cut
# passes through the three edge midpoints and leaves the thickness at 2,
# which certifies that the tetrahedron is not reduced.
w = verify_reduction_witness(K, halfspace((-1, -1, -1), 1), ball)
print("cut removes vertex indices", w.removed_vertices)
print("thickness before/after the cut:", w.thickness_before, "/", w.thickness_after)
print("valid reduction witness:", w.valid)

# The bundled report gathers the same numbers in one object.
print()
print("metrics report:", metrics_report(K, ball).to_obj())
