"""Classical root systems with exact arithmetic.

Families A, B, C and D in their standard coordinate realisations: family
A of rank r lives in the trace-zero hyperplane of R^(r+1), the other
families fill R^r.  The reflection group of each system is enumerated
explicitly as orthogonal matrices with rational entries, so orbits,
chamber membership and stabilisers are all decided exactly.

Family A keeps its ambient coordinates, and two rank-sized charts
translate to full-dimensional coordinates where polytopes live: a point
chart (partial sums) for vectors of the space the group acts on, and a
weight chart (consecutive differences) for linear functionals on it.
The charts preserve the evaluation pairing <functional|vector>, so
polarity computed in chart coordinates matches the ambient geometry.
For the other families both charts are the identity.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import accumulate

from ._linalg import (
    identity_matrix,
    mat_mul,
    mat_vec,
    nullspace,
    solve_system,
    span_basis,
    transpose,
    vdot,
    vec,
    vscale,
    vsub,
)
from .errors import DimensionMismatch, InputError, PreconditionError

_MIN_RANK = {"A": 1, "B": 2, "C": 2, "D": 3}
_GROUP_CAP = 25000


@dataclass(frozen=True)
class RootSystem:
    type_label: str
    rank: int
    ambient_dim: int
    simple_roots: tuple
    positive_roots: tuple


@dataclass(frozen=True)
class WeylGroup:
    """The finite reflection group, fully enumerated.

    elements: every group element as an exact orthogonal matrix, in a
    canonical sorted order.  generators: the simple reflections, aligned
    with the simple roots.
    """

    root_system: RootSystem
    elements: tuple
    generators: tuple

    @property
    def order(self) -> int:
        return len(self.elements)


@dataclass(frozen=True)
class SimpleSubset:
    """Data attached to a subset of the simple roots.

    fixed_basis spans the intersection of the chosen roots' kernels (the
    directions the generated subgroup fixes pointwise); root_span_basis
    spans its orthogonal complement, the span of the chosen roots; the
    two dimensions add up to the rank.
    """

    root_system: RootSystem
    indices: tuple
    fixed_basis: tuple
    root_span_basis: tuple
    subgroup: tuple


def _unit(n: int, i: int) -> tuple:
    return tuple(Fraction(1) if j == i else Fraction(0) for j in range(n))


def build(type_label, rank) -> RootSystem:
    """Standard realisation of the chosen family at the chosen rank."""
    label = str(type_label).upper()
    if label not in _MIN_RANK:
        raise InputError(f"unsupported family {type_label!r}; pick one of A, B, C, D")
    if not isinstance(rank, int) or isinstance(rank, bool):
        raise InputError("rank must be an integer")
    if rank < _MIN_RANK[label]:
        raise InputError(f"family {label} needs rank >= {_MIN_RANK[label]}")
    r = rank
    if label == "A":
        n = r + 1
        simple = [vsub(_unit(n, i), _unit(n, i + 1)) for i in range(r)]
        positive = [vsub(_unit(n, i), _unit(n, j))
                    for i in range(n) for j in range(i + 1, n)]
    else:
        n = r
        simple = [vsub(_unit(n, i), _unit(n, i + 1)) for i in range(r - 1)]
        positive = [vsub(_unit(n, i), _unit(n, j))
                    for i in range(r) for j in range(i + 1, r)]
        positive += [tuple(a + b for a, b in zip(_unit(n, i), _unit(n, j)))
                     for i in range(r) for j in range(i + 1, r)]
        if label == "B":
            simple.append(_unit(n, r - 1))
            positive += [_unit(n, i) for i in range(r)]
        elif label == "C":
            simple.append(vscale(_unit(n, r - 1), 2))
            positive += [vscale(_unit(n, i), 2) for i in range(r)]
        else:
            simple.append(tuple(a + b for a, b in
                                zip(_unit(n, r - 2), _unit(n, r - 1))))
    rs = RootSystem(label, r, n, tuple(simple), tuple(positive))
    for root in rs.positive_roots:
        combo = _simple_root_combination(rs, root)
        if combo is None or any(c < 0 or c.denominator != 1 for c in combo):
            raise AssertionError("positive root outside the nonnegative "
                                 "integer cone of the simple roots")
    return rs


def _simple_root_combination(rs: RootSystem, v):
    """Coefficients expressing v over the simple roots, or None."""
    return solve_system(transpose(rs.simple_roots), vec(v))


def reflection_matrix(root) -> tuple:
    """The orthogonal reflection fixing the root's kernel hyperplane."""
    root = vec(root)
    n = len(root)
    norm2 = vdot(root, root)
    if norm2 == 0:
        raise InputError("cannot reflect in the zero vector")
    return tuple(tuple((Fraction(1) if i == j else Fraction(0))
                       - 2 * root[i] * root[j] / norm2
                       for j in range(n))
                 for i in range(n))


def _closure(generators, ambient_dim: int, cap: int) -> tuple:
    elems = {identity_matrix(ambient_dim)}
    frontier = list(elems)
    while frontier:
        fresh = []
        for m in frontier:
            for g in generators:
                prod = mat_mul(g, m)
                if prod not in elems:
                    elems.add(prod)
                    fresh.append(prod)
                    if len(elems) > cap:
                        raise PreconditionError(
                            f"reflection group exceeds the safety cap {cap}")
        frontier = fresh
    return tuple(sorted(elems))


def _classical_order(label: str, r: int) -> int:
    if label == "A":
        return math.factorial(r + 1)
    if label in ("B", "C"):
        return 2 ** r * math.factorial(r)
    return 2 ** (r - 1) * math.factorial(r)


@lru_cache(maxsize=None)
def weyl_group(rs: RootSystem) -> WeylGroup:
    """Enumerate the full reflection group by closing the generators."""
    expected = _classical_order(rs.type_label, rs.rank)
    if expected > _GROUP_CAP:
        raise PreconditionError(
            f"group order {expected} exceeds the safety cap {_GROUP_CAP}")
    gens = tuple(reflection_matrix(a) for a in rs.simple_roots)
    elems = _closure(gens, rs.ambient_dim, _GROUP_CAP)
    if len(elems) != expected:
        raise AssertionError(f"closure produced {len(elems)} elements, "
                             f"expected {expected}")
    return WeylGroup(rs, elems, gens)


def weyl_orbit(group: WeylGroup, v) -> tuple:
    """Deduplicated orbit of v, lexicographically sorted."""
    v = vec(v)
    if len(v) != group.root_system.ambient_dim:
        raise DimensionMismatch("vector does not live in the ambient space")
    return tuple(sorted({mat_vec(m, v) for m in group.elements}))


def dominant_representative(rs: RootSystem, v) -> tuple:
    """The unique orbit point paired nonnegatively with every simple root."""
    v = vec(v)
    if len(v) != rs.ambient_dim:
        raise DimensionMismatch("vector does not live in the ambient space")
    moved = True
    while moved:
        moved = False
        for a in rs.simple_roots:
            t = vdot(a, v)
            if t < 0:
                v = vsub(v, vscale(a, 2 * t / vdot(a, a)))
                moved = True
    return v


def singular_support(rs: RootSystem, v) -> tuple:
    """Indices of the simple roots vanishing on a dominant vector."""
    v = vec(v)
    if len(v) != rs.ambient_dim:
        raise DimensionMismatch("vector does not live in the ambient space")
    values = [vdot(a, v) for a in rs.simple_roots]
    if any(t < 0 for t in values):
        raise PreconditionError("vector is not dominant")
    return tuple(i for i, t in enumerate(values) if t == 0)


def subset_data(rs: RootSystem, indices) -> SimpleSubset:
    """Kernel/span splitting and reflection subgroup for chosen simple roots."""
    idxs = tuple(sorted(set(indices)))
    if any(not isinstance(i, int) or i < 0 or i >= rs.rank for i in idxs):
        raise InputError("simple-root indices must lie in range(rank)")
    rows = [rs.simple_roots[i] for i in idxs]
    if rs.type_label == "A":
        rows = rows + [tuple(Fraction(1) for _ in range(rs.ambient_dim))]
    fixed = nullspace(rows, ambient_dim=rs.ambient_dim)
    span = span_basis([rs.simple_roots[i] for i in idxs])
    if len(fixed) + len(span) != rs.rank:
        raise AssertionError("kernel/span dimensions do not add to the rank")
    gens = tuple(reflection_matrix(rs.simple_roots[i]) for i in idxs)
    subgroup = (_closure(gens, rs.ambient_dim, _GROUP_CAP) if gens
                else (identity_matrix(rs.ambient_dim),))
    return SimpleSubset(rs, idxs, tuple(fixed), tuple(span), subgroup)


def irreducible_components(rs: RootSystem, indices) -> tuple:
    """Finest splitting of the index set into mutually orthogonal parts.

    Connected components of the graph joining two chosen simple roots
    when their inner product is nonzero.
    """
    idxs = sorted(set(indices))
    if any(not isinstance(i, int) or i < 0 or i >= rs.rank for i in idxs):
        raise InputError("simple-root indices must lie in range(rank)")
    remaining = set(idxs)
    parts = []
    while remaining:
        seed = min(remaining)
        comp = {seed}
        frontier = [seed]
        while frontier:
            i = frontier.pop()
            for j in list(remaining - comp):
                if vdot(rs.simple_roots[i], rs.simple_roots[j]) != 0:
                    comp.add(j)
                    frontier.append(j)
        parts.append(tuple(sorted(comp)))
        remaining -= comp
    return tuple(sorted(parts))


# ---------------------------------------------------------------------------
# coordinate charts (nontrivial for family A only)


def point_coords(rs: RootSystem, v) -> tuple:
    """Chart for vectors acted on: partial sums of the ambient coordinates.

    Family A input must be trace-zero (the chart inverts only there).
    """
    v = vec(v)
    if len(v) != rs.ambient_dim:
        raise DimensionMismatch("vector does not live in the ambient space")
    if rs.type_label != "A":
        return v
    if sum(v) != 0:
        raise InputError("family A vectors must have coordinate sum zero")
    return tuple(accumulate(v))[: rs.rank]


def point_ambient(rs: RootSystem, x) -> tuple:
    """Inverse of point_coords; lands in the trace-zero hyperplane."""
    x = vec(x)
    if len(x) != rs.rank:
        raise DimensionMismatch("expected a rank-sized coordinate vector")
    if rs.type_label != "A":
        return x
    return tuple(x[i] - (x[i - 1] if i else 0) for i in range(rs.rank)) + (-x[-1],)


def weight_coords(rs: RootSystem, m) -> tuple:
    """Chart for functionals: consecutive differences of ambient coordinates.

    Constant shifts of a family-A functional act identically on trace-zero
    vectors, and the chart quotients exactly that redundancy away.
    """
    m = vec(m)
    if len(m) != rs.ambient_dim:
        raise DimensionMismatch("functional does not live in the ambient space")
    if rs.type_label != "A":
        return m
    return tuple(m[i] - m[i + 1] for i in range(rs.rank))


def weight_ambient(rs: RootSystem, y) -> tuple:
    """Section of weight_coords choosing last ambient coordinate zero."""
    y = vec(y)
    if len(y) != rs.rank:
        raise DimensionMismatch("expected a rank-sized coordinate vector")
    if rs.type_label != "A":
        return y
    out = [Fraction(0)] * (rs.rank + 1)
    for i in range(rs.rank - 1, -1, -1):
        out[i] = out[i + 1] + y[i]
    return tuple(out)


def _transported(rs: RootSystem, matrices, embed, project) -> tuple:
    if rs.type_label != "A":
        return tuple(matrices)
    basis = [_unit(rs.rank, j) for j in range(rs.rank)]
    out = []
    for m in matrices:
        cols = [project(rs, mat_vec(m, embed(rs, e))) for e in basis]
        out.append(tuple(tuple(cols[j][i] for j in range(rs.rank))
                         for i in range(rs.rank)))
    return tuple(out)


@lru_cache(maxsize=None)
def weyl_point_matrices(rs: RootSystem) -> tuple:
    """Group elements in the point chart, aligned with weyl_group order."""
    return _transported(rs, weyl_group(rs).elements, point_ambient, point_coords)


@lru_cache(maxsize=None)
def weyl_weight_matrices(rs: RootSystem) -> tuple:
    """Group elements in the weight chart, aligned with weyl_group order."""
    return _transported(rs, weyl_group(rs).elements, weight_ambient, weight_coords)


# ---------------------------------------------------------------------------
# named dominant functionals


def named_weight(rs: RootSystem, name: str) -> tuple:
    """Dominant functionals by preset name, in ambient coordinates.

    Supported: "adjoint" (the highest root), "standard", "dual-standard",
    and "fundamental:k" with 1-based k up to the rank.
    """
    n, r = rs.ambient_dim, rs.rank
    label = rs.type_label
    name = str(name).strip().lower()
    if name == "adjoint":
        if label == "A":
            return vsub(_unit(n, 0), _unit(n, n - 1))
        if label == "C":
            return vscale(_unit(n, 0), 2)
        return tuple(a + b for a, b in zip(_unit(n, 0), _unit(n, 1)))
    if name == "standard":
        return _unit(n, 0)
    if name == "dual-standard":
        return vscale(_unit(n, n - 1), -1) if label == "A" else _unit(n, 0)
    if name.startswith("fundamental:"):
        try:
            k = int(name.split(":", 1)[1])
        except ValueError:
            raise InputError(f"bad fundamental weight index in {name!r}")
        if not 1 <= k <= r:
            raise InputError(f"fundamental weight index must be in 1..{r}")
        ones = tuple(Fraction(1) if i < k else Fraction(0) for i in range(n))
        if label == "B" and k == r:
            return vscale(ones, Fraction(1, 2))
        if label == "D" and k >= r - 1:
            out = [Fraction(1, 2)] * r
            if k == r - 1:
                out[r - 1] = Fraction(-1, 2)
            return tuple(out)
        return ones
    raise InputError(f"unknown weight preset {name!r}")
