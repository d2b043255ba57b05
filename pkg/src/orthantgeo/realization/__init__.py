from .cone import realize_cone, realize_ideal, witness_point
from .lowdim import coefficient_sequence, realize_lowdim, witness_lowdim
from .shelling import PointRepresentation, export_point_representation, shelling_family, verify_shelling
from .system import ConeRow, HalfspaceSystem, Hyperplane
from .tree import random_tree, realize_tree

__all__ = [
    "ConeRow",
    "HalfspaceSystem",
    "Hyperplane",
    "PointRepresentation",
    "coefficient_sequence",
    "export_point_representation",
    "random_tree",
    "realize_cone",
    "realize_ideal",
    "realize_lowdim",
    "realize_tree",
    "shelling_family",
    "verify_shelling",
    "witness_lowdim",
    "witness_point",
]
