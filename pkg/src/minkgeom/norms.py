"""Polyhedral Minkowski norms.

A norm is given by its unit ball, a centrally symmetric full-dimensional
polytope carried in both representations at once: vertices feed support
computations, facets feed norm evaluation.  The two are never converted into
each other at runtime; custom balls are cross-checked at construction.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product

from .errors import DimensionMismatch, GeometryError, SizeLimitExceeded
from .polytope import Halfspace, HPolytope, VPolytope, support
from .qlinalg import affine_rank, dot, exact_div, unit_vec, vneg

BALL_MAX_DIM = 16


@dataclass(frozen=True)
class PolytopalNorm:
    dim: int
    ball_v: VPolytope
    ball_h: HPolytope
    kind: str = "custom"

    def __post_init__(self):
        if not (self.dim == self.ball_v.dim == self.ball_h.dim):
            raise DimensionMismatch("ball representations disagree on dimension")


def l1_ball(dim: int, limit: int = BALL_MAX_DIM) -> PolytopalNorm:
    """Cross-polytope ball: vertices +-e_i, one facet per sign pattern."""
    if dim < 1:
        raise DimensionMismatch(f"dim must be >= 1, got {dim}")
    if dim > limit:
        raise SizeLimitExceeded(f"l1 ball gated to dim <= {limit} (2^dim facets)")
    verts = tuple(unit_vec(dim, i) for i in range(dim)) + tuple(
        vneg(unit_vec(dim, i)) for i in range(dim)
    )
    facets = tuple(Halfspace(sig, 1) for sig in product((1, -1), repeat=dim))
    return PolytopalNorm(dim, VPolytope(dim, verts), HPolytope(dim, facets), "l1")


def linf_ball(dim: int, limit: int = BALL_MAX_DIM) -> PolytopalNorm:
    """Hypercube ball: one vertex per sign pattern, facets +-e_i."""
    if dim < 1:
        raise DimensionMismatch(f"dim must be >= 1, got {dim}")
    if dim > limit:
        raise SizeLimitExceeded(f"linf ball gated to dim <= {limit} (2^dim vertices)")
    verts = tuple(product((1, -1), repeat=dim))
    facets = tuple(Halfspace(unit_vec(dim, i), 1) for i in range(dim)) + tuple(
        Halfspace(vneg(unit_vec(dim, i)), 1) for i in range(dim)
    )
    return PolytopalNorm(dim, VPolytope(dim, verts), HPolytope(dim, facets), "linf")


def custom_ball(ball_v: VPolytope, ball_h: HPolytope) -> PolytopalNorm:
    """Build a norm from both ball representations, verifying consistency.

    Checks: matching dimensions, central symmetry of both representations,
    origin strictly interior (every rhs > 0), full dimensionality, every
    vertex satisfying every facet and tight on at least dim of them, every
    facet tight at dim or more vertices.
    """
    if ball_v.dim != ball_h.dim:
        raise DimensionMismatch("ball representations disagree on dimension")
    dim = ball_v.dim
    vset = set(ball_v.vertices)
    for v in ball_v.vertices:
        if vneg(v) not in vset:
            raise GeometryError(f"vertex set is not centrally symmetric at {v}")
    fset = {(f.normal, f.rhs) for f in ball_h.facets}
    for f in ball_h.facets:
        if f.rhs <= 0:
            raise GeometryError("the origin must be strictly inside the ball")
        if (vneg(f.normal), f.rhs) not in fset:
            raise GeometryError(
                f"facet set is not centrally symmetric at normal {f.normal}"
            )
    if affine_rank(ball_v.vertices) != dim:
        raise GeometryError("the ball must be full-dimensional")
    tight_per_facet = [0] * len(ball_h.facets)
    for v in ball_v.vertices:
        tight = 0
        for k, f in enumerate(ball_h.facets):
            val = dot(f.normal, v)
            if val > f.rhs:
                raise GeometryError(f"vertex {v} violates facet {f.normal}")
            if val == f.rhs:
                tight += 1
                tight_per_facet[k] += 1
        if tight < dim:
            raise GeometryError(f"vertex {v} is tight on {tight} < {dim} facets")
    for k, count in enumerate(tight_per_facet):
        if count < dim:
            raise GeometryError(
                f"facet {ball_h.facets[k].normal} is tight at {count} < {dim} vertices"
            )
    return PolytopalNorm(dim, ball_v, ball_h, "custom")


def norm(x, ball: PolytopalNorm):
    """Minkowski norm of x: the smallest t >= 0 with x inside t times the ball."""
    if len(x) != ball.dim:
        raise DimensionMismatch(f"vector of length {len(x)} in dimension {ball.dim}")
    if ball.kind == "l1":
        # same value as the facet maximum below; the 2^dim facets of the
        # cross-polytope ball make the generic route needlessly heavy
        return sum(abs(c) for c in x)
    best = 0
    for f in ball.ball_h.facets:
        val = exact_div(dot(f.normal, x), f.rhs)
        if val > best:
            best = val
    return best


def dual_support(u, ball: PolytopalNorm):
    """Support function of the ball at u (the dual norm of u)."""
    return support(ball.ball_v, u)


def parallel_hyperplane_distance(a, c1, c2, ball: PolytopalNorm):
    """Minkowski distance between the hyperplanes a.x = c1 and a.x = c2."""
    if len(a) != ball.dim:
        raise DimensionMismatch(f"normal of length {len(a)} in dimension {ball.dim}")
    if not any(a):
        raise DimensionMismatch("hyperplane normal must be nonzero")
    return exact_div(abs(c1 - c2), dual_support(a, ball))


def point_hyperplane_distance(v, a, c, ball: PolytopalNorm):
    """Minkowski distance from the point v to the hyperplane a.x = c."""
    if len(v) != ball.dim or len(a) != ball.dim:
        raise DimensionMismatch("point or normal has a wrong length")
    if not any(a):
        raise DimensionMismatch("hyperplane normal must be nonzero")
    return exact_div(abs(dot(a, v) - c), dual_support(a, ball))
