"""Root systems: construction, reflection groups, orbits, charts.

Derived counts are cross-checked against independent oracles: orbit
sizes against explicit stabilizer counts, kernel bases against direct
inner products with the defining roots, component splittings against
pairwise orthogonality.
"""

import math
import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from geomtest import rand_vector
from horopoly._linalg import identity_matrix, mat_mul, mat_vec, rank, transpose, vdot
from horopoly.errors import DimensionMismatch, InputError, PreconditionError
from horopoly.rootsys import (
    build,
    dominant_representative,
    irreducible_components,
    named_weight,
    point_ambient,
    point_coords,
    reflection_matrix,
    singular_support,
    subset_data,
    weight_ambient,
    weight_coords,
    weyl_group,
    weyl_orbit,
    weyl_point_matrices,
    weyl_weight_matrices,
)

F = Fraction


def all_roots(rs):
    return set(rs.positive_roots) | {tuple(-x for x in r) for r in rs.positive_roots}


# ---------------------------------------------------------------------------
# construction


def test_build_a2_frozen():
    rs = build("A", 2)
    assert rs.simple_roots == ((1, -1, 0), (0, 1, -1))
    assert len(rs.positive_roots) == 3
    assert rs.ambient_dim == 3


def test_build_counts_match_classical():
    for r in (1, 2, 3, 4):
        assert len(build("A", r).positive_roots) == r * (r + 1) // 2
    for r in (2, 3, 4):
        assert len(build("B", r).positive_roots) == r * r
        assert len(build("C", r).positive_roots) == r * r
    for r in (3, 4):
        assert len(build("D", r).positive_roots) == r * (r - 1)


def test_build_b2():
    rs = build("B", 2)
    assert len(rs.positive_roots) == 4
    assert (F(1), F(0)) in rs.positive_roots


def test_positive_roots_in_nonnegative_cone():
    # every positive root decomposes over the simple roots with coefficients
    # that are nonnegative integers
    from horopoly._linalg import solve_system
    for rs in (build("A", 3), build("B", 3), build("C", 2), build("D", 4)):
        for root in rs.positive_roots:
            combo = solve_system(transpose(rs.simple_roots), root)
            assert combo is not None
            assert all(c >= 0 and c.denominator == 1 for c in combo)


def test_build_rejections():
    with pytest.raises(InputError):
        build("A", 0)
    with pytest.raises(InputError):
        build("E", 2)
    with pytest.raises(InputError):
        build("B", 1)
    with pytest.raises(InputError):
        build("D", 2)
    with pytest.raises(InputError):
        build("A", "3")


def test_simple_roots_independent():
    for rs in (build("A", 4), build("B", 4), build("C", 3), build("D", 4)):
        assert rank(rs.simple_roots) == rs.rank


# ---------------------------------------------------------------------------
# reflection groups


def test_group_orders():
    assert weyl_group(build("A", 2)).order == 6
    assert weyl_group(build("A", 3)).order == 24
    assert weyl_group(build("A", 4)).order == 120
    assert weyl_group(build("B", 2)).order == 8
    assert weyl_group(build("B", 3)).order == 48
    assert weyl_group(build("C", 2)).order == 8
    assert weyl_group(build("D", 3)).order == 24
    assert weyl_group(build("D", 4)).order == 192


def test_group_cap_guards_high_rank():
    with pytest.raises(PreconditionError):
        weyl_group(build("B", 6))


def test_elements_orthogonal_and_permute_roots():
    for rs in (build("A", 2), build("B", 2), build("D", 3)):
        W = weyl_group(rs)
        roots = all_roots(rs)
        eye = identity_matrix(rs.ambient_dim)
        for m in W.elements:
            assert mat_mul(transpose(m), m) == eye
            assert {mat_vec(m, r) for r in roots} == roots


def test_group_closure_exhaustive_a2():
    W = weyl_group(build("A", 2))
    elems = set(W.elements)
    for a in W.elements:
        for b in W.elements:
            assert mat_mul(a, b) in elems


def test_generators_are_simple_reflections():
    rs = build("B", 2)
    W = weyl_group(rs)
    assert len(W.generators) == 2
    for g, a in zip(W.generators, rs.simple_roots):
        assert mat_vec(g, a) == tuple(-x for x in a)
        assert mat_mul(g, g) == identity_matrix(2)


# ---------------------------------------------------------------------------
# orbits and chambers


def test_orbit_of_highest_root_is_root_set():
    rs = build("A", 2)
    orbit = weyl_orbit(weyl_group(rs), named_weight(rs, "adjoint"))
    assert len(orbit) == 6
    assert set(orbit) == all_roots(rs)


def test_orbit_of_zero():
    rs = build("B", 2)
    assert weyl_orbit(weyl_group(rs), (0, 0)) == ((0, 0),)


def test_orbit_fundamental_weight_a2():
    rs = build("A", 2)
    W = weyl_group(rs)
    v = named_weight(rs, "standard")
    orbit = weyl_orbit(W, v)
    stab = [m for m in W.elements if mat_vec(m, v) == v]
    assert len(stab) == 2
    assert len(orbit) == 3
    assert len(orbit) * len(stab) == W.order


def test_orbit_stabilizer_random():
    rng = random.Random(61)
    for rs in (build("A", 3), build("B", 2), build("D", 3)):
        W = weyl_group(rs)
        for _ in range(6):
            v = rand_vector(rng, rs.ambient_dim)
            orbit = weyl_orbit(W, v)
            stab = sum(1 for m in W.elements if mat_vec(m, v) == v)
            assert len(orbit) * stab == W.order


def test_orbit_dimension_mismatch():
    rs = build("A", 2)
    with pytest.raises(DimensionMismatch):
        weyl_orbit(weyl_group(rs), (1, 0))


def test_dominant_representative_frozen():
    rs = build("A", 2)
    assert dominant_representative(rs, (-1, 0, 1)) == (1, 0, -1)
    assert dominant_representative(rs, (1, 0, -1)) == (1, 0, -1)
    assert dominant_representative(rs, (1, 1, -2)) == (1, 1, -2)


def test_each_orbit_meets_chamber_once():
    rng = random.Random(67)
    for rs in (build("A", 2), build("B", 2), build("C", 3)):
        W = weyl_group(rs)
        for _ in range(5):
            v = rand_vector(rng, rs.ambient_dim)
            orbit = weyl_orbit(W, v)
            dom = [w for w in orbit
                   if all(vdot(a, w) >= 0 for a in rs.simple_roots)]
            assert len(dom) == 1
            assert dominant_representative(rs, v) == dom[0]


def test_singular_support():
    a3 = build("A", 3)
    assert singular_support(a3, named_weight(a3, "adjoint")) == (1,)
    assert singular_support(a3, (3, 2, 1, 0)) == ()
    assert singular_support(a3, (0, 0, 0, 0)) == (0, 1, 2)
    with pytest.raises(PreconditionError):
        singular_support(a3, (0, 1, 2, 3))


# ---------------------------------------------------------------------------
# simple-root subsets


def test_subset_data_empty_and_full():
    rs = build("A", 2)
    empty = subset_data(rs, [])
    assert len(empty.fixed_basis) == 2 and empty.root_span_basis == ()
    assert len(empty.subgroup) == 1
    full = subset_data(rs, [0, 1])
    assert full.fixed_basis == () and len(full.root_span_basis) == 2
    assert set(full.subgroup) == set(weyl_group(rs).elements)


def test_subset_data_single_wall_a2():
    rs = build("A", 2)
    data = subset_data(rs, [0])
    assert len(data.fixed_basis) == 1 and len(data.root_span_basis) == 1
    assert len(data.subgroup) == 2


def test_subset_fixed_space_oracle():
    # basis vectors of the fixed space are killed by each chosen root, and
    # the subgroup fixes them pointwise
    rng = random.Random(71)
    for rs in (build("A", 3), build("B", 3), build("D", 4)):
        for _ in range(4):
            idxs = sorted(rng.sample(range(rs.rank), rng.randint(0, rs.rank)))
            data = subset_data(rs, idxs)
            assert len(data.fixed_basis) + len(data.root_span_basis) == rs.rank
            for b in data.fixed_basis:
                for i in idxs:
                    assert vdot(rs.simple_roots[i], b) == 0
                for m in data.subgroup:
                    assert mat_vec(m, b) == b
            # the root span is preserved setwise by the subgroup
            span_rank = rank(data.root_span_basis)
            for m in data.subgroup:
                imgs = [mat_vec(m, b) for b in data.root_span_basis]
                assert rank(list(data.root_span_basis) + imgs) == span_rank


def test_subset_data_rejections():
    rs = build("A", 2)
    with pytest.raises(InputError):
        subset_data(rs, [2])
    with pytest.raises(InputError):
        subset_data(rs, [-1])


def test_irreducible_components():
    a3 = build("A", 3)
    assert irreducible_components(a3, [0, 2]) == ((0,), (2,))
    assert vdot(a3.simple_roots[0], a3.simple_roots[2]) == 0
    assert irreducible_components(a3, [0, 1]) == ((0, 1),)
    assert vdot(a3.simple_roots[0], a3.simple_roots[1]) != 0
    assert irreducible_components(a3, []) == ()
    assert irreducible_components(a3, [0, 1, 2]) == ((0, 1, 2),)
    d4 = build("D", 4)
    assert irreducible_components(d4, [0, 2, 3]) == ((0,), (2,), (3,))


def test_components_are_orthogonal_and_connected():
    rng = random.Random(73)
    for rs in (build("A", 4), build("B", 4), build("D", 4)):
        for _ in range(6):
            idxs = sorted(rng.sample(range(rs.rank), rng.randint(0, rs.rank)))
            parts = irreducible_components(rs, idxs)
            assert sorted(i for p in parts for i in p) == idxs
            for p in parts:
                for q in parts:
                    if p is not q:
                        assert all(vdot(rs.simple_roots[i], rs.simple_roots[j]) == 0
                                   for i in p for j in q)


# ---------------------------------------------------------------------------
# coordinate charts


def test_point_chart_roundtrip_a():
    rng = random.Random(79)
    rs = build("A", 3)
    for _ in range(20):
        x = rand_vector(rng, 3)
        assert point_coords(rs, point_ambient(rs, x)) == x
        head = rand_vector(rng, 3)
        v = head + (-sum(head),)
        assert point_ambient(rs, point_coords(rs, v)) == v


def test_weight_chart_roundtrip_a():
    rng = random.Random(83)
    rs = build("A", 3)
    for _ in range(20):
        y = rand_vector(rng, 3)
        assert weight_coords(rs, weight_ambient(rs, y)) == y
        # constant shifts of the functional are quotiented away
        m = rand_vector(rng, 4)
        shifted = tuple(a + F(7, 3) for a in m)
        assert weight_coords(rs, m) == weight_coords(rs, shifted)


def test_charts_preserve_pairing():
    rng = random.Random(89)
    for r in (1, 2, 3):
        rs = build("A", r)
        for _ in range(20):
            head = rand_vector(rng, r)
            v = head + (-sum(head),)
            m = rand_vector(rng, r + 1)
            assert (vdot(weight_coords(rs, m), point_coords(rs, v))
                    == vdot(m, v))


def test_chart_rejections():
    rs = build("A", 2)
    with pytest.raises(InputError):
        point_coords(rs, (1, 0, 1))
    with pytest.raises(DimensionMismatch):
        point_coords(rs, (1, 0))
    with pytest.raises(DimensionMismatch):
        point_ambient(rs, (1, 0, -1))
    with pytest.raises(DimensionMismatch):
        weight_coords(rs, (1, 0))


def test_charts_identity_outside_family_a():
    rs = build("B", 2)
    assert point_coords(rs, (F(1), F(2))) == (1, 2)
    assert weight_ambient(rs, (F(1), F(2))) == (1, 2)
    assert weyl_point_matrices(rs) == weyl_group(rs).elements


def test_transported_matrices_commute_with_charts():
    rng = random.Random(97)
    for r in (2, 3):
        rs = build("A", r)
        W = weyl_group(rs)
        for m, mp, mw in zip(W.elements, weyl_point_matrices(rs),
                             weyl_weight_matrices(rs)):
            head = rand_vector(rng, r)
            v = head + (-sum(head),)
            assert point_coords(rs, mat_vec(m, v)) == mat_vec(mp, point_coords(rs, v))
            f = rand_vector(rng, r + 1)
            assert (weight_coords(rs, mat_vec(m, f))
                    == mat_vec(mw, weight_coords(rs, f)))


def test_point_chart_of_a2_roots_frozen():
    rs = build("A", 2)
    pts = {point_coords(rs, r) for r in all_roots(rs)}
    assert pts == {(1, 0), (0, 1), (1, 1), (-1, 0), (0, -1), (-1, -1)}


# ---------------------------------------------------------------------------
# named weights


def test_named_weights_frozen():
    a2 = build("A", 2)
    assert named_weight(a2, "adjoint") == (1, 0, -1)
    assert named_weight(a2, "standard") == (1, 0, 0)
    assert named_weight(a2, "dual-standard") == (0, 0, -1)
    a3 = build("A", 3)
    assert named_weight(a3, "fundamental:2") == (1, 1, 0, 0)
    b2 = build("B", 2)
    assert named_weight(b2, "fundamental:2") == (F(1, 2), F(1, 2))
    d4 = build("D", 4)
    assert named_weight(d4, "fundamental:3") == (F(1, 2),) * 3 + (F(-1, 2),)


def test_named_weights_dominant():
    for rs in (build("A", 3), build("B", 3), build("C", 2), build("D", 4)):
        names = ["adjoint", "standard", "dual-standard"]
        names += [f"fundamental:{k}" for k in range(1, rs.rank + 1)]
        for name in names:
            singular_support(rs, named_weight(rs, name))


def test_named_weight_rejections():
    rs = build("A", 2)
    for bad in ("spelled-wrong", "fundamental:0", "fundamental:3",
                "fundamental:x"):
        with pytest.raises(InputError):
            named_weight(rs, bad)


# ---------------------------------------------------------------------------
# properties


@settings(max_examples=40, deadline=None)
@given(st.integers(0, 10**6))
def test_reflections_are_orthogonal_involutions(seed):
    rng = random.Random(seed)
    dim = rng.randint(2, 4)
    root = tuple(F(rng.randint(-6, 6), rng.randint(1, 4)) for _ in range(dim))
    if all(x == 0 for x in root):
        root = (F(1),) + root[1:]
    s = reflection_matrix(root)
    assert mat_mul(s, s) == identity_matrix(dim)
    assert mat_mul(transpose(s), s) == identity_matrix(dim)
    assert mat_vec(s, root) == tuple(-x for x in root)


@settings(max_examples=30, deadline=None)
@given(st.integers(0, 10**6))
def test_dominant_representative_is_in_orbit(seed):
    rng = random.Random(seed)
    rs = build("A", 2)
    v = rand_vector(rng, 3)
    dom = dominant_representative(rs, v)
    assert all(vdot(a, dom) >= 0 for a in rs.simple_roots)
    assert dom in weyl_orbit(weyl_group(rs), v)
    assert dominant_representative(rs, dom) == dom
