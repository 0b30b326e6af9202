"""Exact polyhedral horofunction compactifications.

Polar-dual polytopes over the rationals, asymmetric polyhedral norms and
their horofunction boundaries, Weyl orbit weight polytopes with the unit
balls they induce, and a floating-point model of the corresponding
symmetric-space flats.
"""

from .errors import (
    DimensionMismatch,
    EmptyInput,
    InputError,
    NotAFace,
    OriginNotInterior,
    PreconditionError,
    UnboundedRegion,
)
from .flatspace import (
    FlatSpace,
    InvarianceConfig,
    act,
    cartan_projection,
    exp_flat,
    finsler_distance,
    flat_limit,
    flat_limit_consistency,
    flat_space,
    invariance_suite,
    sequence_type_of_ray,
    sequence_type_of_samples,
    validate_spd,
)
from .horoboundary import (
    Horofunction,
    SequenceSample,
    almost_geodesic_check,
    chain_check,
    convexity_midpoint_test,
    enumerate_strata,
    evaluate,
    horofunction_from_json,
    horofunction_to_json,
    horofunctions_equal,
    limit_of_ray,
    make_horofunction,
    psi,
    walsh_criterion,
)
from .norm import PolyhedralNorm, distance, gauge, polyhedral_norm, pseudo_norm
from .polytope import (
    Face,
    Halfspace,
    Polytope,
    convex_hull,
    dilate,
    dual_description,
    dual_face,
    f_vector,
    face_lattice,
    face_of,
    from_halfspaces,
    hull_of_union,
    load_polytope,
    negate,
    polar_dual,
    polytope_from_json,
    polytope_to_json,
    relative_interior_point,
)
from .render import render_off, render_svg
from .rootsys import (
    RootSystem,
    WeylGroup,
    build,
    dominant_representative,
    named_weight,
    singular_support,
    subset_data,
    weyl_group,
    weyl_orbit,
    weyl_point_matrices,
    weyl_weight_matrices,
)
from .satake import (
    classify,
    combinatorial_summary,
    dual_satake_ball,
    invariant_under,
    report_to_json,
    same_compactification,
    satake_ball,
    weight_hull,
    weight_spec,
)

__all__ = [
    "DimensionMismatch",
    "EmptyInput",
    "Face",
    "FlatSpace",
    "Halfspace",
    "Horofunction",
    "InputError",
    "InvarianceConfig",
    "NotAFace",
    "OriginNotInterior",
    "PolyhedralNorm",
    "Polytope",
    "PreconditionError",
    "RootSystem",
    "SequenceSample",
    "UnboundedRegion",
    "WeylGroup",
    "act",
    "almost_geodesic_check",
    "build",
    "cartan_projection",
    "chain_check",
    "classify",
    "combinatorial_summary",
    "convex_hull",
    "convexity_midpoint_test",
    "dilate",
    "distance",
    "dominant_representative",
    "dual_description",
    "dual_face",
    "dual_satake_ball",
    "enumerate_strata",
    "evaluate",
    "exp_flat",
    "f_vector",
    "face_lattice",
    "face_of",
    "finsler_distance",
    "flat_limit",
    "flat_limit_consistency",
    "flat_space",
    "from_halfspaces",
    "gauge",
    "horofunction_from_json",
    "horofunction_to_json",
    "horofunctions_equal",
    "hull_of_union",
    "invariance_suite",
    "invariant_under",
    "limit_of_ray",
    "load_polytope",
    "make_horofunction",
    "named_weight",
    "negate",
    "polar_dual",
    "polyhedral_norm",
    "polytope_from_json",
    "polytope_to_json",
    "pseudo_norm",
    "psi",
    "relative_interior_point",
    "render_off",
    "render_svg",
    "report_to_json",
    "same_compactification",
    "satake_ball",
    "sequence_type_of_ray",
    "sequence_type_of_samples",
    "singular_support",
    "subset_data",
    "validate_spd",
    "walsh_criterion",
    "weight_hull",
    "weight_spec",
    "weyl_group",
    "weyl_orbit",
    "weyl_point_matrices",
    "weyl_weight_matrices",
]
