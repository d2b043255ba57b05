"""Point representations: generalized convex shellings built from cone realizations."""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction

from ..geometry import ConvexGeometry
from ..lp import format_rational, in_convex_hull, to_rational
from ..sets import bits
from .system import HalfspaceSystem


@dataclass
class PointRepresentation:
    dimension: int
    labels: list[str]
    p: list[tuple[Fraction, ...]]
    q: list[tuple[Fraction, ...]]

    def to_dict(self) -> dict:
        return {
            "dimension": self.dimension,
            "P": [{"label": lab, "coords": [format_rational(c) for c in pt]} for lab, pt in zip(self.labels, self.p)],
            "Q": [[format_rational(c) for c in pt] for pt in self.q],
        }

    def to_json(self, indent: int | None = 2) -> str:
        return json.dumps(self.to_dict(), indent=indent)

    @classmethod
    def from_dict(cls, data: dict) -> "PointRepresentation":
        try:
            labels = [str(e["label"]) for e in data["P"]]
            p = [tuple(to_rational(c) for c in e["coords"]) for e in data["P"]]
            q = [tuple(to_rational(c) for c in pt) for pt in data["Q"]]
            return cls(int(data["dimension"]), labels, p, q)
        except (KeyError, TypeError) as exc:
            raise ValueError(f"malformed point representation: {exc}") from exc


def export_point_representation(geometry: ConvexGeometry, system: HalfspaceSystem) -> PointRepresentation:
    """Scale hyperplane normals onto ``sum x = 1``: basis vectors give P, cone-row normals give Q.

    Each cone row ``coefficient * x_r - sum(x_e, e in C - r) > 0`` has normal
    with positive coordinate sum, so the all-ones direction is a valid cut.
    """
    if geometry.universe.full not in geometry:
        raise ValueError("point representation needs an acyclic geometry")
    if any(r.source.get("kind") == "positive_circuit" for r in system.cone):
        raise ValueError("point representation is undefined with positive circuits")
    if system.meta.get("kind") != "cone":
        raise ValueError("point representation needs a cone realization")
    n = geometry.n
    p = [tuple(Fraction(1 if j == i else 0) for j in range(n)) for i in range(n)]
    q = []
    for r in system.cone:
        normal = r.coeffs if r.rel == ">" else tuple(-c for c in r.coeffs)
        total = sum(normal, Fraction(0))
        if total <= 0:
            raise ValueError("cone row normal has non-positive coordinate sum")
        q.append(tuple(c / total for c in normal))
    return PointRepresentation(n, list(geometry.universe.labels), p, q)


def shelling_family(rep: PointRepresentation) -> list[int]:
    """All X with no point of P - X in conv(X | Q), as masks over the order of P."""
    k = len(rep.p)
    out = []
    for x in range(1 << k):
        hull = [rep.p[i] for i in bits(x)] + list(rep.q)
        if not any(in_convex_hull(rep.p[i], hull) for i in range(k) if not x >> i & 1):
            out.append(x)
    return out


def verify_shelling(rep: PointRepresentation, geometry: ConvexGeometry) -> bool:
    """Whether the shelling of (P, Q) equals the geometry, with conv(Q) missing P."""
    if rep.labels != list(geometry.universe.labels):
        return False
    if any(in_convex_hull(pt, rep.q) for pt in rep.p):
        return False
    return shelling_family(rep) == list(geometry.family.members)
