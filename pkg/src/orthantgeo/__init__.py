"""Circuits, ideals and exact halfspace realizations of finite convex geometries."""

from .geometry import (
    AxiomReport,
    ConvexGeometry,
    RootedCircuit,
    check_anti_exchange,
    check_axioms,
    check_c4,
    check_dietrich,
    circuits_via_cubes,
    closure,
    convex_dimension,
    copoints,
    critical_rooted_circuits,
    extreme_points,
    generate_from_orders,
    generating_orders,
    is_downset_alignment,
    reconstruct_from_rooted_sets,
    rooted_circuits,
)
from .ideals import (
    IdealOfGeometry,
    check_bouquet,
    check_ideal,
    check_locally_union_closed,
    check_median,
    embed_bouquet,
    ideal_from_positive_circuits,
    positive_circuits,
)
from .lp import Rational, StrictRow, StrictSystem, homogeneous_strictly_feasible, in_convex_hull, strictly_feasible
from .sets import (
    SetFamily,
    SignVector,
    Universe,
    complement_family,
    is_ample,
    is_shattered,
    is_strongly_shattered,
    maximal_cubes,
    trace,
    vc_dimension,
)

__version__ = "0.1.0"
