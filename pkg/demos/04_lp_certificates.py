"""
Linear programs that prove their own answers
============================================

The simplex solver works over rationals and returns a certificate with
every outcome: an optimal solution comes with dual multipliers satisfying
y >= 0, y A = c and y b = optimum; an infeasible system comes with a Farkas
vector; an unbounded one with an improving ray.  Each certificate is a
finite identity anyone can recheck by hand.
"""

from fractions import Fraction

from minkgeom import LpProblem, lp_max
from minkgeom.qlinalg import dot, fmt_vec

# Maximize x + y over a pentagon-ish region.
cons = (
    ((2, 1), 2),
    ((1, 3), 3),
    ((-1, 0), 0),
    ((0, -1), 0),
)
out = lp_max(LpProblem((1, 1), cons))
print("status:", out.status)
print("optimum:", out.optimum, "at", fmt_vec(out.point))
print("dual multipliers:", fmt_vec(out.dual_multipliers))

# Recheck the certificate from scratch.
y = out.dual_multipliers
assert all(m >= 0 for m in y)
for j in range(2):
    assert sum(y[i] * cons[i][0][j] for i in range(len(cons))) == (1, 1)[j]
assert sum(y[i] * cons[i][1] for i in range(len(cons))) == out.optimum
print("certificate identities verified:",
      "y >= 0, y A = c, y b =", out.optimum)
print()

# An infeasible system: x >= 2 and x <= 1.
out = lp_max(LpProblem((1,), (((-1,), -2), ((1,), 1))))
print("status:", out.status)
print("farkas vector:", out.farkas)
combo = sum(f * a[0] for f, (a, b) in zip(out.farkas, (((-1,), -2), ((1,), 1))))
total = sum(f * b for f, (a, b) in zip(out.farkas, (((-1,), -2), ((1,), 1))))
print("nonnegative combination of the rows gives", combo, "* x <=", total)
print()

# An unbounded direction.
out = lp_max(LpProblem((1, 1), (((-1, 0), 0), ((0, -1), 0))))
print("status:", out.status)
print("improving ray:", out.ray, "with objective gain", dot((1, 1), out.ray))

# The degenerate problem that famously cycles under naive pivoting; Bland's
# rule pushes through it to the exact optimum 1/20.
c = (Fraction(3, 4), -150, Fraction(1, 50), -6)
cons = (
    ((Fraction(1, 4), -60, Fraction(-1, 25), 9), 0),
    ((Fraction(1, 2), -90, Fraction(-1, 50), 3), 0),
    ((0, 0, 1, 0), 1),
    ((-1, 0, 0, 0), 0),
    ((0, -1, 0, 0), 0),
    ((0, 0, -1, 0), 0),
    ((0, 0, 0, -1), 0),
)
out = lp_max(LpProblem(c, cons))
print()
print("degenerate cycling example:", out.status, "=", out.optimum,
      "at", fmt_vec(out.point))
