"""Exact convex polytopes over the rationals with dual descriptions.

Vertices and facet halfspaces are both carried on every full-dimensional
polytope.  Halfspaces are written {x : <functional|x> >= offset} with the
offset normalised to -1, 0 or +1; a polytope contains the origin in its
interior exactly when every facet offset is -1, which is the form polar
duality works in:

    polar(B) = {y : <y|x> >= -1 for all x in B}.

Designed for low dimensions (<= 4) and modest vertex counts; facet
enumeration is a brute-force scan over vertex subsets, which is entirely
adequate at that scale and keeps every step exact.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import combinations

from ._linalg import (
    ONE,
    affine_span,
    coords_in_basis,
    frac,
    is_zero_vec,
    nullspace,
    primitive,
    rank,
    solve_square,
    vdot,
    vec,
    vscale,
    vsub,
    vzero,
)
from .errors import (
    DimensionMismatch,
    EmptyInput,
    InputError,
    NotAFace,
    OriginNotInterior,
    PreconditionError,
    UnboundedRegion,
)

Vector = tuple  # tuple of Fraction


@dataclass(frozen=True)
class Halfspace:
    """The closed halfspace {x : <functional|x> >= offset}, offset in {-1,0,1}."""

    functional: Vector
    offset: Fraction

    @staticmethod
    def normalized(functional, offset) -> "Halfspace":
        f = vec(functional)
        c = frac(offset)
        if is_zero_vec(f):
            raise InputError("halfspace functional must be nonzero")
        if c != 0:
            f = vscale(f, ONE / abs(c))
            c = Fraction(1 if c > 0 else -1)
        else:
            # offset 0 leaves the scale free; pin it with the primitive form
            f = primitive(f)
        return Halfspace(f, c)

    def value(self, x) -> Fraction:
        return vdot(self.functional, x)

    def contains(self, x) -> bool:
        return vdot(self.functional, x) >= self.offset

    def active_at(self, x) -> bool:
        return vdot(self.functional, x) == self.offset


@dataclass(frozen=True)
class Polytope:
    """A convex polytope with canonical vertex and facet descriptions.

    vertices are extremal points, deduplicated and sorted lexicographically,
    so structural equality of two polytopes is set equality.  facets is the
    irredundant facet list when the polytope is full-dimensional and empty
    otherwise (lower-dimensional polytopes appear only as intermediate
    values and as faces of other polytopes).
    """

    vertices: tuple
    facets: tuple
    ambient_dim: int
    affine_dim: int

    def __repr__(self) -> str:
        return (f"Polytope(ambient={self.ambient_dim}, dim={self.affine_dim}, "
                f"vertices={len(self.vertices)}, facets={len(self.facets)})")

    @property
    def is_full_dimensional(self) -> bool:
        return self.affine_dim == self.ambient_dim

    def contains(self, x) -> bool:
        if not self.facets:
            raise PreconditionError("containment needs a facet description")
        x = vec(x)
        return all(h.contains(x) for h in self.facets)

    def has_origin_interior(self) -> bool:
        return (self.is_full_dimensional and bool(self.facets)
                and all(h.offset == -1 for h in self.facets))


@dataclass(frozen=True)
class Face:
    """A face of a polytope, identified by its sorted vertex index set.

    support lists the parent facets active on the whole face; it is empty
    exactly for the improper face (the polytope itself).
    """

    parent: Polytope
    vertex_indices: tuple
    support: tuple
    dim: int

    @property
    def vertices(self) -> tuple:
        return tuple(self.parent.vertices[i] for i in self.vertex_indices)

    @property
    def is_proper(self) -> bool:
        return len(self.vertex_indices) < len(self.parent.vertices)

    def __repr__(self) -> str:
        return f"Face(dim={self.dim}, vertices={list(self.vertex_indices)})"


# ---------------------------------------------------------------------------
# construction


def _check_points(points):
    pts = [vec(p) for p in points]
    if not pts:
        raise EmptyInput("no points given")
    m = len(pts[0])
    if m == 0 or any(len(p) != m for p in pts):
        raise DimensionMismatch("points must share a positive dimension")
    return sorted(set(pts)), m


def _hyperplane_through(points):
    """(normal, value) of the hyperplane through the points, or None."""
    origin, basis = affine_span(points)
    if len(basis) != len(origin) - 1:
        return None
    normal = nullspace(basis)[0]
    return normal, vdot(normal, origin)


def _cross2(o, a, b):
    return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])


def _hull_2d(pts):
    """Monotone chain on presorted distinct points; returns CCW boundary."""
    lower: list = []
    for p in pts:
        while len(lower) >= 2 and _cross2(lower[-2], lower[-1], p) <= 0:
            lower.pop()
        lower.append(p)
    upper: list = []
    for p in reversed(pts):
        while len(upper) >= 2 and _cross2(upper[-2], upper[-1], p) <= 0:
            upper.pop()
        upper.append(p)
    boundary = lower[:-1] + upper[:-1]
    facets = []
    for a, b in zip(boundary, boundary[1:] + boundary[:1]):
        d = vsub(b, a)
        inward = (-d[1], d[0])  # CCW boundary: this points into the polygon
        facets.append(Halfspace.normalized(inward, vdot(inward, a)))
    return boundary, facets


def _hull_full(pts, m):
    """Facets and vertices of a full-dimensional hull via subset enumeration."""
    if m == 1:
        lo, hi = pts[0], pts[-1]
        facets = [Halfspace.normalized((ONE,), lo[0]),
                  Halfspace.normalized((-ONE,), -hi[0])]
        return [lo, hi], facets
    if m == 2:
        return _hull_2d(pts)

    facets = {}
    for comb in combinations(pts, m):
        hp = _hyperplane_through(comb)
        if hp is None:
            continue
        normal, value = hp
        above = below = False
        for p in pts:
            s = vdot(normal, p) - value
            if s > 0:
                above = True
            elif s < 0:
                below = True
            if above and below:
                break
        if above and below:
            continue
        if above:
            hs = Halfspace.normalized(normal, value)
        else:
            hs = Halfspace.normalized(tuple(-x for x in normal), -value)
        facets[hs] = None

    facet_list = list(facets)
    verts = []
    for p in pts:
        active = [h.functional for h in facet_list if h.active_at(p)]
        if len(active) >= m and rank(active) == m:
            verts.append(p)
    return verts, facet_list


def convex_hull(points) -> Polytope:
    """Convex hull of rational points, with facets when full-dimensional."""
    pts, m = _check_points(points)
    origin, basis = affine_span(pts)
    d = len(basis)
    if d == m:
        verts, facets = _hull_full(pts, m)
        return Polytope(tuple(sorted(verts)),
                        tuple(sorted(facets, key=lambda h: (h.functional, h.offset))),
                        m, m)
    if d == 0:
        return Polytope((pts[0],), (), m, 0)
    # lower-dimensional: find the vertex set inside the affine span
    coord_map = {}
    for p in pts:
        c = coords_in_basis(basis, vsub(p, origin))
        coord_map[c] = p
    sub = convex_hull(list(coord_map))
    verts = sorted(coord_map[c] for c in sub.vertices)
    return Polytope(tuple(verts), (), m, d)


def _region_is_bounded(halfspaces) -> bool:
    """True iff the intersection of the halfspaces has trivial recession cone.

    The recession cone {x : <u|x> >= 0 for all functionals u} is trivial
    exactly when 0 is interior to the hull of the functionals.
    """
    hull = convex_hull([h.functional for h in halfspaces])
    return hull.has_origin_interior()


def from_halfspaces(halfspaces) -> Polytope:
    """Vertex enumeration for a bounded full-dimensional halfspace intersection."""
    hs = sorted({Halfspace.normalized(h.functional, h.offset) for h in halfspaces},
                key=lambda h: (h.functional, h.offset))
    if not hs:
        raise EmptyInput("no halfspaces given")
    m = len(hs[0].functional)
    if any(len(h.functional) != m for h in hs):
        raise DimensionMismatch("halfspaces must share one ambient dimension")
    if len(hs) <= m or not _region_is_bounded(hs):
        raise UnboundedRegion("halfspace intersection is unbounded")
    candidates = set()
    for comb in combinations(hs, m):
        x = solve_square([h.functional for h in comb], [h.offset for h in comb])
        if x is not None and all(h.contains(x) for h in hs):
            candidates.add(x)
    if not candidates:
        raise UnboundedRegion("halfspace intersection is empty")
    P = convex_hull(candidates)
    if not P.is_full_dimensional:
        raise PreconditionError("halfspace intersection is not full-dimensional")
    return P


def dual_description(P: Polytope, from_side: str = "vertices") -> Polytope:
    """Recompute a polytope from one description only.

    from_side='vertices' rebuilds facets from the vertex list;
    from_side='facets' enumerates vertices from the facet list.  Either way
    the result is fully canonical, so round trips are the identity.
    """
    if from_side == "vertices":
        return convex_hull(P.vertices)
    if from_side == "facets":
        if not P.facets:
            raise PreconditionError("polytope has no facet description")
        return from_halfspaces(P.facets)
    raise InputError(f"unknown side {from_side!r}")


# ---------------------------------------------------------------------------
# polarity and faces


@lru_cache(maxsize=None)
def polar_dual(P: Polytope) -> Polytope:
    """The polar {y : <y|x> >= -1 for all x in P}.

    Needs 0 strictly interior.  Vertices of the polar are the facet
    functionals of P and vice versa, so the polar of the polar is P itself,
    exactly and structurally.
    """
    if not P.has_origin_interior():
        raise OriginNotInterior(
            "polar duality needs a full-dimensional polytope with 0 interior")
    m = P.ambient_dim
    verts = tuple(sorted(h.functional for h in P.facets))
    facets = tuple(sorted((Halfspace(v, Fraction(-1)) for v in P.vertices),
                          key=lambda h: (h.functional, h.offset)))
    return Polytope(verts, facets, m, m)


def _face_from_index_set(P: Polytope, idxs, facet_sets=None) -> Face:
    idxs = tuple(sorted(idxs))
    if facet_sets is None:
        facet_sets = [frozenset(i for i, v in enumerate(P.vertices) if h.active_at(v))
                      for h in P.facets]
    iset = set(idxs)
    support = tuple(h for h, s in zip(P.facets, facet_sets) if iset <= s)
    pts = [P.vertices[i] for i in idxs]
    dim = len(affine_span(pts)[1])
    return Face(P, idxs, support, dim)


def face_of(P: Polytope, vertex_indices) -> Face:
    """Build the face with exactly these vertices; NotAFace if there is none."""
    idxs = tuple(sorted(set(vertex_indices)))
    if not idxs:
        raise NotAFace("a face needs at least one vertex")
    if any(i < 0 or i >= len(P.vertices) for i in idxs):
        raise InputError("vertex index out of range")
    if len(idxs) == len(P.vertices):
        return Face(P, idxs, (), P.affine_dim)
    if not P.facets:
        raise PreconditionError("faces need a facet description")
    face = _face_from_index_set(P, idxs)
    if not face.support:
        raise NotAFace(f"{list(idxs)} is not the equality set of any facet subset")
    equality = set(range(len(P.vertices)))
    for h in face.support:
        equality &= {i for i, v in enumerate(P.vertices) if h.active_at(v)}
    if equality != set(idxs):
        raise NotAFace(f"{list(idxs)} is not a face (closure is {sorted(equality)})")
    return face


def face_lattice(P: Polytope) -> tuple:
    """All faces of P graded by dimension: P itself included, empty face not.

    Proper faces are exactly the intersections of facets, computed by
    closing the facet vertex sets under pairwise intersection.
    """
    n = len(P.vertices)
    if P.affine_dim == 0:
        return (Face(P, (0,), (), 0),)
    if not P.facets:
        raise PreconditionError("face lattice needs a facet description")
    facet_sets = [frozenset(i for i, v in enumerate(P.vertices) if h.active_at(v))
                  for h in P.facets]
    proper = set(facet_sets)
    frontier = set(facet_sets)
    while frontier:
        fresh = set()
        for s in frontier:
            for f in facet_sets:
                t = s & f
                if t and t not in proper:
                    proper.add(t)
                    fresh.add(t)
        frontier = fresh
    faces = [_face_from_index_set(P, s, facet_sets) for s in proper]
    faces.append(Face(P, tuple(range(n)), (), P.affine_dim))
    faces.sort(key=lambda f: (f.dim, f.vertex_indices))
    return tuple(faces)


def f_vector(P: Polytope) -> tuple:
    """Face counts by dimension 0..affine_dim, the top face included."""
    counts = [0] * (P.affine_dim + 1)
    for f in face_lattice(P):
        counts[f.dim] += 1
    return tuple(counts)


def dual_face(P: Polytope, F: Face) -> Face:
    """The face {y in polar(P) : <y|x> = -1 on all of F} of the polar.

    Inclusion-reversing bijection on proper faces; dim F + dim dual = dim - 1.
    """
    if F.parent is not P and F.parent != P:
        raise NotAFace("face does not belong to this polytope")
    if not F.is_proper:
        raise PreconditionError("only proper faces have dual faces")
    Q = polar_dual(P)
    fverts = F.vertices
    idxs = [j for j, w in enumerate(Q.vertices)
            if all(vdot(w, v) == -1 for v in fverts)]
    if not idxs:
        raise NotAFace("empty dual face; input was not a face")
    return face_of(Q, idxs)


def relative_interior_point(obj) -> tuple:
    """Vertex barycenter, a canonical relative interior point."""
    verts = obj.vertices
    if not verts:
        raise EmptyInput("no vertices")
    n = Fraction(len(verts))
    out = vzero(len(verts[0]))
    for v in verts:
        out = tuple(a + b / n for a, b in zip(out, v))
    return out


def hull_of_union(P: Polytope, Q: Polytope) -> Polytope:
    if P.ambient_dim != Q.ambient_dim:
        raise DimensionMismatch("polytopes live in different dimensions")
    return convex_hull(P.vertices + Q.vertices)


def negate(P: Polytope) -> Polytope:
    """The pointwise negation -P, computed structurally."""
    verts = tuple(sorted(tuple(-x for x in v) for v in P.vertices))
    facets = tuple(sorted(
        (Halfspace.normalized(tuple(-x for x in h.functional), h.offset)
         for h in P.facets),
        key=lambda h: (h.functional, h.offset)))
    return Polytope(verts, facets, P.ambient_dim, P.affine_dim)


def dilate(P: Polytope, t) -> Polytope:
    """The dilate t * P for a positive rational t, computed structurally."""
    t = frac(t)
    if t <= 0:
        raise InputError("dilation factor must be positive")
    verts = tuple(sorted(vscale(v, t) for v in P.vertices))
    facets = tuple(sorted(
        (Halfspace.normalized(vscale(h.functional, ONE / t), h.offset)
         for h in P.facets),
        key=lambda h: (h.functional, h.offset)))
    return Polytope(verts, facets, P.ambient_dim, P.affine_dim)


# ---------------------------------------------------------------------------
# serialization


def _format_vec(v) -> list:
    return [str(x) for x in v]


def polytope_to_json(P: Polytope) -> dict:
    """JSON form: rationals as strings; facets included when 0 is interior."""
    out = {"dim": P.ambient_dim, "vertices": [_format_vec(v) for v in P.vertices]}
    if P.facets and all(h.offset == -1 for h in P.facets):
        out["facets"] = [_format_vec(h.functional) for h in P.facets]
    return out


def polytope_from_json(obj) -> Polytope:
    """Parse and validate; vertex lists must be extremal and canonical."""
    if not isinstance(obj, dict) or "vertices" not in obj:
        raise InputError("polytope JSON needs a 'vertices' key")
    try:
        pts = [vec(v) for v in obj["vertices"]]
    except (TypeError, ValueError) as exc:
        raise InputError(f"bad vertex data: {exc}") from exc
    P = convex_hull(pts)
    if "dim" in obj and P.ambient_dim != obj["dim"]:
        raise InputError("'dim' does not match the vertex coordinates")
    if list(P.vertices) != sorted(set(pts)):
        raise InputError("vertex list contains non-extremal or duplicate points")
    if "facets" in obj:
        given = {vec(f) for f in obj["facets"]}
        actual = {h.functional for h in P.facets}
        if not P.has_origin_interior() or given != actual:
            raise InputError("facet list does not match the vertex data")
    return P


def load_polytope(path) -> Polytope:
    with open(path, encoding="utf-8") as fh:
        try:
            obj = json.load(fh)
        except json.JSONDecodeError as exc:
            raise InputError(f"invalid JSON in {path}: {exc}") from exc
    return polytope_from_json(obj)
