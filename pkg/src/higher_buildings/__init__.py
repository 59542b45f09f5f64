"""Diagonal lattice classes over local fields of dimension one and two.

The package models the apartment of the building of PGL(m) (m = 2, 3)
over a one- or two-dimensional local field: lattice classes, the maximal
chains they form, finite apartment windows with their boundary strata,
the residue projection, and the affine Weyl group action.
"""
from .gamma import (
    FieldConfig,
    GammaElement,
    IdealClass,
    IdealKind,
    full,
    gamma_cmp,
    ideal_includes,
    ideal_translate,
    monomial_member,
    oclosure,
    partial,
    principal,
)
from .lattices import (
    CompactifiedVertex,
    LatticeClass,
    TypeSignature,
    act_translate,
    compactify,
    normalize,
    parse_lattice,
    project_pi,
    ray_limit,
    vertex_type,
)
from .chains import (
    ChainSegment,
    ChainType,
    adjacent,
    classify_chain,
    compatible,
    enumerate_intermediate,
    maximal_chain_through,
    maximal_chains_through,
    simplices_from_chain,
)
from .complex import (
    ApartmentSpec,
    SimplicialSetWindow,
    annotate_boundary,
    build_apartment,
    link,
    pgl2_lines,
    project_window,
)
from .spherical import enum_points, flag_complex, link_residue, spherical_apartment
from .weyl import (
    WeylElement,
    act,
    involution_fixed_point,
    weyl_from_monomial,
    weyl_mul,
    weyl_order,
)

__version__ = "0.1.0"
