"""Weight-orbit polytopes and Satake-type unit balls.

A choice of dominant functionals for a root system determines the convex
hull of their reflection-group orbits, taken here in the weight chart so
the hull is a full-dimensional polytope.  That hull serves two roles:
its negated polar is the unit ball of a polyhedral Finsler metric
realizing the generalized Satake compactification attached to the
choice, and the hull itself is the unit ball of the dual compactification.

Two choices are considered equivalent when their hulls admit a bijection
of face lattices that preserves dimension and inclusion, commutes with
the reflection group, and matches each face's incidence pattern against
the chamber walls.  The decision procedure is an exhaustive backtracking
search over lattice bijections, pruned by exact invariants (dimension,
setwise stabilizer, wall-sign signature), so a False answer is a proof
of non-existence rather than a heuristic failure.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from ._linalg import frac, mat_vec, vdot, vec, vscale
from .errors import InputError, PreconditionError
from .polytope import (
    Polytope,
    convex_hull,
    f_vector,
    face_lattice,
    negate,
    polar_dual,
    relative_interior_point,
)
from .rootsys import (
    RootSystem,
    singular_support,
    weight_ambient,
    weight_coords,
    weyl_group,
    weyl_orbit,
    weyl_weight_matrices,
)


@dataclass(frozen=True)
class WeightSpec:
    root_system: RootSystem
    highest_weights: tuple
    scale: Fraction


@dataclass(frozen=True)
class CompactificationReport:
    hull_f_vector: tuple
    ball_f_vector: tuple
    vertices: tuple
    facet_count: int
    singular_supports: tuple
    regular: bool
    shape: Optional[str]


def weight_spec(rs: RootSystem, weights, scale=1) -> WeightSpec:
    """Validated bundle of dominant functionals (ambient coords) and scale."""
    ws = tuple(vec(w) for w in weights)
    if not ws:
        raise InputError("at least one weight is required")
    for w in ws:
        if len(w) != rs.ambient_dim:
            raise InputError("weight does not live in the ambient space")
        if any(vdot(a, w) < 0 for a in rs.simple_roots):
            raise InputError("weights must be dominant")
    scale = frac(scale)
    if scale <= 0:
        raise InputError("scale must be positive")
    return WeightSpec(rs, ws, scale)


def weight_hull(spec: WeightSpec) -> Polytope:
    """Convex hull of the scaled orbit points, in weight-chart coordinates."""
    rs = spec.root_system
    group = weyl_group(rs)
    pts = [vscale(weight_coords(rs, p), spec.scale)
           for chi in spec.highest_weights
           for p in weyl_orbit(group, chi)]
    hull = convex_hull(pts)
    if hull.affine_dim < rs.rank or not hull.has_origin_interior():
        raise PreconditionError(
            "weight hull lacks 0 as an interior point and cannot be a unit ball")
    return hull


def satake_ball(hull: Polytope) -> Polytope:
    """Negated polar of the weight hull: the compactification's unit ball."""
    return negate(polar_dual(hull))


def dual_satake_ball(hull: Polytope) -> Polytope:
    """The weight hull itself, in its role as the dual unit ball."""
    if not hull.has_origin_interior():
        raise PreconditionError("0 must be interior to serve as a unit ball")
    return hull


def invariant_under(P: Polytope, matrices) -> bool:
    """Does every matrix map the vertex set onto itself?"""
    vset = set(P.vertices)
    return all({mat_vec(m, v) for v in P.vertices} == vset for m in matrices)


def _sign(x) -> int:
    return (x > 0) - (x < 0)


def _wall_signature(rs: RootSystem, chart_point) -> tuple:
    """Sign pattern of the point against every positive root's wall."""
    ambient = weight_ambient(rs, chart_point)
    return tuple(_sign(vdot(ambient, a)) for a in rs.positive_roots)


def classify(spec: WeightSpec) -> CompactificationReport:
    rs = spec.root_system
    hull = weight_hull(spec)
    ball = satake_ball(hull)
    supports = tuple(singular_support(rs, w) for w in spec.highest_weights)
    return CompactificationReport(
        hull_f_vector=f_vector(hull),
        ball_f_vector=f_vector(ball),
        vertices=hull.vertices,
        facet_count=len(hull.facets),
        singular_supports=supports,
        regular=all(s == () for s in supports),
        shape=_recognize_shape(rs, hull),
    )


def _recognize_shape(rs: RootSystem, hull: Polytope) -> Optional[str]:
    fv = f_vector(hull)
    if hull.affine_dim == 2 and fv == (6, 6, 1):
        return "hexagon"
    if hull.affine_dim == 3 and fv == (12, 24, 14, 1):
        return "cuboctahedron"
    group = weyl_group(rs)
    if len(hull.vertices) == group.order:
        orbit = {mat_vec(m, hull.vertices[0])
                 for m in weyl_weight_matrices(rs)}
        if orbit == set(hull.vertices):
            return "permutohedron"
    return None


def combinatorial_summary(report: CompactificationReport) -> dict:
    """The scale-independent content of a report."""
    return {
        "hull_f_vector": report.hull_f_vector,
        "ball_f_vector": report.ball_f_vector,
        "vertex_count": len(report.vertices),
        "facet_count": report.facet_count,
        "singular_supports": report.singular_supports,
        "regular": report.regular,
        "shape": report.shape,
    }


def report_to_json(report: CompactificationReport) -> dict:
    return {
        "hull_f_vector": list(report.hull_f_vector),
        "ball_f_vector": list(report.ball_f_vector),
        "vertices": [[str(x) for x in v] for v in report.vertices],
        "facet_count": report.facet_count,
        "singular_supports": [list(s) for s in report.singular_supports],
        "regular": report.regular,
        "shape": report.shape,
    }


# ---------------------------------------------------------------------------
# equivalence of compactifications


class _LatticeProfile:
    """Face lattice of a hull with its group action and exact invariants."""

    def __init__(self, rs: RootSystem, hull: Polytope):
        mats = weyl_weight_matrices(rs)
        faces = face_lattice(hull)
        self.sets = [frozenset(f.vertex_indices) for f in faces]
        index_of = {s: i for i, s in enumerate(self.sets)}
        vpos = {v: i for i, v in enumerate(hull.vertices)}
        self.action = []
        for m in mats:
            try:
                perm = tuple(vpos[mat_vec(m, v)] for v in hull.vertices)
            except KeyError:
                raise AssertionError("weight hull is not group invariant")
            self.action.append(tuple(index_of[frozenset(perm[i] for i in s)]
                                     for s in self.sets))
        self.keys = []
        for f, face in enumerate(faces):
            stab = tuple(k for k in range(len(mats))
                         if self.action[k][f] == f)
            sig = _wall_signature(rs, relative_interior_point(face))
            self.keys.append((face.dim, stab, sig))
        self.incl = [[a <= b for b in self.sets] for a in self.sets]


def same_compactification(spec1: WeightSpec, spec2: WeightSpec) -> bool:
    """Equivalence by exhaustive equivariant lattice-bijection search."""
    if spec1.root_system != spec2.root_system:
        raise InputError("specs must share a root system")
    rs = spec1.root_system
    p1 = _LatticeProfile(rs, weight_hull(spec1))
    p2 = _LatticeProfile(rs, weight_hull(spec2))
    n = len(p1.sets)
    if n != len(p2.sets) or sorted(p1.keys) != sorted(p2.keys):
        return False
    candidates = [[g for g in range(n) if p2.keys[g] == p1.keys[f]]
                  for f in range(n)]
    assign = [None] * n
    taken = [False] * n
    nmats = len(p1.action)

    def place(f: int, g: int, log: list) -> bool:
        """Assign the whole equivariant closure of f -> g; False on clash."""
        stack = [(f, g)]
        while stack:
            a, b = stack.pop()
            if assign[a] is not None:
                if assign[a] != b:
                    return False
                continue
            if taken[b] or p1.keys[a] != p2.keys[b]:
                return False
            for c in range(n):
                if assign[c] is not None:
                    if (p1.incl[a][c] != p2.incl[b][assign[c]]
                            or p1.incl[c][a] != p2.incl[assign[c]][b]):
                        return False
            assign[a] = b
            taken[b] = True
            log.append(a)
            for k in range(nmats):
                stack.append((p1.action[k][a], p2.action[k][b]))
        return True

    def search() -> bool:
        try:
            f = assign.index(None)
        except ValueError:
            return True
        for g in candidates[f]:
            if taken[g]:
                continue
            log = []
            ok = place(f, g, log)
            if ok and search():
                return True
            for a in log:
                taken[assign[a]] = False
                assign[a] = None
        return False

    return search()
