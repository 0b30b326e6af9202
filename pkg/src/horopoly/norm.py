"""Polyhedral norms, possibly asymmetric, and the dual pseudo-norm.

A full-dimensional polytope B with 0 interior is the unit ball of the
gauge ||v|| = min{t > 0 : v in tB}.  B need not be centrally symmetric,
so ||v|| and ||-v|| can differ; distances are read d(x, z) = ||z - x||.

The companion pseudo-norm of a compact convex set C is
|p|_C = -min{<q|p> : q in C}, a sublinear functional that can be negative.
On the polar ball it recovers the gauge: |v|_polar(B) = ||v||.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from ._linalg import vec, vdot, vsub
from .errors import DimensionMismatch, EmptyInput
from .polytope import Face, Polytope, polar_dual

ZERO = Fraction(0)


@dataclass(frozen=True)
class PolyhedralNorm:
    """A polyhedral unit ball together with its polar dual ball."""

    ball: Polytope
    dual_ball: Polytope

    @property
    def dim(self) -> int:
        return self.ball.ambient_dim


def polyhedral_norm(ball: Polytope) -> PolyhedralNorm:
    """Wrap a unit ball; raises unless 0 is strictly interior."""
    return PolyhedralNorm(ball, polar_dual(ball))


def gauge(norm: PolyhedralNorm, v) -> Fraction:
    """Minkowski gauge of v: the largest of -<u|v> over facet functionals.

    v lies in tB exactly when every facet constraint <u|v/t> >= -1 holds,
    so the least admissible t is max_u(-<u|v>), clamped at 0 for v = 0.
    """
    v = vec(v)
    if len(v) != norm.dim:
        raise DimensionMismatch("vector dimension does not match the ball")
    best = ZERO
    for h in norm.ball.facets:
        t = -vdot(h.functional, v)
        if t > best:
            best = t
    return best


def pseudo_norm(convex_set, p) -> Fraction:
    """|p|_C = -min{<q|p> : q in C}, the minimum taken over vertices."""
    if isinstance(convex_set, (Polytope, Face)):
        verts = convex_set.vertices
    else:
        verts = tuple(convex_set)
    if not verts:
        raise EmptyInput("pseudo-norm needs a nonempty vertex set")
    p = vec(p)
    if len(p) != len(verts[0]):
        raise DimensionMismatch("vector dimension does not match the set")
    return -min(vdot(q, p) for q in verts)


def distance(norm: PolyhedralNorm, x, z) -> Fraction:
    """The (possibly asymmetric) distance d(x, z) = ||z - x||."""
    return gauge(norm, vsub(vec(z), vec(x)))
