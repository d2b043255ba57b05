"""Full-dimensional realizations: coordinate hyperplanes cut by a polyhedral cone K."""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Iterable, Sequence

from ..geometry import ConvexGeometry, RootedCircuit, critical_rooted_circuits, rooted_circuits
from ..ideals import IdealOfGeometry, minimal_positive_circuits, positive_circuits
from ..sets import bits
from .system import ConeRow, HalfspaceSystem, Hyperplane, source_circuit, source_positive


def coordinate_arrangement(geometry: ConvexGeometry) -> list[Hyperplane]:
    n = geometry.n
    return [
        Hyperplane(lab, tuple(1 if j == i else 0 for j in range(n)), 0)
        for i, lab in enumerate(geometry.universe.labels)
    ]


def circuit_row(n: int, circuit: RootedCircuit, coefficient: int | Fraction, source: dict) -> ConeRow:
    """``sum(x_e for e in C - r) < coefficient * x_r``."""
    coeffs = [Fraction(0)] * n
    for e in bits(circuit.base):
        coeffs[e] = Fraction(1)
    coeffs[circuit.root] = -Fraction(coefficient)
    return ConeRow(tuple(coeffs), 0, "<", source)


def positive_row(n: int, p: int, source: dict) -> ConeRow:
    """``sum(x_e for e in P) < 0``."""
    return ConeRow(tuple(Fraction(1 if p >> i & 1 else 0) for i in range(n)), 0, "<", source)


def _select_circuits(geometry: ConvexGeometry, circuits: str) -> tuple[list[RootedCircuit], str]:
    if circuits == "all":
        return rooted_circuits(geometry), "circuit"
    if circuits == "critical":
        return critical_rooted_circuits(geometry), "critical_circuit"
    raise ValueError(f"circuits must be 'all' or 'critical', got {circuits!r}")


def realize_cone(
    geometry: ConvexGeometry,
    circuits: str = "all",
    positive: Iterable[int] = (),
    coefficient: int | Fraction | None = None,
) -> HalfspaceSystem:
    """Coordinate hyperplanes with K given by circuit rows and positive-circuit rows.

    ``coefficient`` is the weight on the root coordinate, ``n`` by default.
    """
    if not isinstance(geometry, ConvexGeometry):
        raise TypeError("realize_cone needs a ConvexGeometry")
    n = geometry.n
    k = n if coefficient is None else coefficient
    if coefficient is not None and Fraction(k) <= 0:
        raise ValueError("root coefficient must be positive")
    chosen, kind = _select_circuits(geometry, circuits)
    u = geometry.universe
    cone = [circuit_row(n, c, k, source_circuit(kind, u, c.stem, c.root)) for c in chosen]
    pos = sorted(set(positive))
    cone.extend(positive_row(n, p, source_positive(u, p)) for p in pos)
    meta = {
        "kind": "cone",
        "circuits": circuits,
        "coefficient": str(Fraction(k)),
        "circuit_rows": len(chosen),
        "positive_rows": len(pos),
    }
    return HalfspaceSystem(n, coordinate_arrangement(geometry), cone, meta)


def realize_ideal(
    ideal: IdealOfGeometry,
    circuits: str = "all",
    minimal_positive: bool = False,
    coefficient: int | Fraction | None = None,
) -> HalfspaceSystem:
    """Cone realization of an ideal; ``minimal_positive`` keeps only minimal positive circuits (experimental)."""
    pcs = minimal_positive_circuits(ideal) if minimal_positive else positive_circuits(ideal)
    system = realize_cone(ideal.host, circuits, pcs, coefficient)
    if minimal_positive:
        system.meta["experimental"] = "minimal positive circuits"
    return system


def _positive_sets(system: HalfspaceSystem) -> list[int]:
    u = system.universe
    return [u.mask(r.source["set"]) for r in system.cone if r.source.get("kind") == "positive_circuit"]


def witness_point(geometry: ConvexGeometry, system: HalfspaceSystem, x: int) -> list[Fraction]:
    """A point of the X-orthant inside K, built coordinate by coordinate.

    Coordinates of X are 1. The others follow a chain of one-step convex
    extensions from X to the universe; each new coordinate is a negative
    integer small enough for every row whose support is completed by it.
    """
    if x not in geometry:
        raise ValueError(f"{geometry.universe.format(x)} is not convex")
    if any(p & x == p for p in _positive_sets(system)):
        raise ValueError(f"{geometry.universe.format(x)} is not in the realized ideal")
    n = geometry.n
    rows = []
    for r in system.cone:
        coeffs, rhs = (r.coeffs, r.rhs) if r.rel == "<" else (tuple(-c for c in r.coeffs), -r.rhs)
        support = sum(1 << i for i, c in enumerate(coeffs) if c)
        rows.append((coeffs, rhs, support))
    point: list[Fraction | None] = [None] * n
    for i in bits(x):
        point[i] = Fraction(1)
    assigned = x
    for e in geometry.extension_order(x):
        bit = 1 << e
        bound = None
        for coeffs, rhs, support in rows:
            if not support & bit or support & ~(assigned | bit):
                continue
            if coeffs[e] <= 0:
                raise RuntimeError(f"row completed by element {geometry.universe.labels[e]} has a non-positive coefficient there")
            rest = sum((coeffs[i] * point[i] for i in bits(support & ~bit)), Fraction(0))
            b = (rhs - rest) / coeffs[e]
            bound = b if bound is None else min(bound, b)
        value = -1 if bound is None else min(-1, math.floor(bound) - 1)
        point[e] = Fraction(value)
        assigned |= bit
    out = [Fraction(v) for v in point]
    if not system.region_system(x).satisfied_by(out):
        raise RuntimeError("witness construction failed substitution")
    return out
