"""Halfspace systems: an arrangement of labeled hyperplanes plus the strict rows of K."""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Sequence

from ..lp import StrictRow, StrictSystem, format_rational, to_rational
from ..sets import SignVector, Universe


@dataclass(frozen=True)
class Hyperplane:
    """``coeffs . x = rhs``; the element is present on the side ``coeffs . x > rhs``."""

    label: str
    coeffs: tuple[Fraction, ...]
    rhs: Fraction

    def __post_init__(self) -> None:
        object.__setattr__(self, "label", str(self.label))
        object.__setattr__(self, "coeffs", tuple(to_rational(c) for c in self.coeffs))
        object.__setattr__(self, "rhs", to_rational(self.rhs))

    def side(self, present: bool) -> StrictRow:
        return StrictRow(self.coeffs, self.rhs, ">" if present else "<")

    def sign(self, point: Sequence) -> int:
        v = sum((c * to_rational(x) for c, x in zip(self.coeffs, point)), Fraction(0)) - self.rhs
        return (v > 0) - (v < 0)


@dataclass(frozen=True)
class ConeRow:
    """One strict row of K, tagged with the object it came from."""

    coeffs: tuple[Fraction, ...]
    rhs: Fraction
    rel: str
    source: dict = field(default_factory=dict, compare=False)

    def __post_init__(self) -> None:
        object.__setattr__(self, "coeffs", tuple(to_rational(c) for c in self.coeffs))
        object.__setattr__(self, "rhs", to_rational(self.rhs))
        if self.rel not in ("<", ">"):
            raise ValueError(f"relation must be '<' or '>', got {self.rel!r}")

    def row(self) -> StrictRow:
        return StrictRow(self.coeffs, self.rhs, self.rel)


@dataclass
class HalfspaceSystem:
    dimension: int
    arrangement: list[Hyperplane]
    cone: list[ConeRow]
    meta: dict = field(default_factory=dict)

    def __post_init__(self) -> None:
        labels = [h.label for h in self.arrangement]
        if len(set(labels)) != len(labels):
            raise ValueError(f"duplicate arrangement labels: {labels}")
        for h in self.arrangement:
            if len(h.coeffs) != self.dimension:
                raise ValueError(f"hyperplane {h.label} has {len(h.coeffs)} coefficients, expected {self.dimension}")
        for r in self.cone:
            if len(r.coeffs) != self.dimension:
                raise ValueError(f"cone row has {len(r.coeffs)} coefficients, expected {self.dimension}")

    @property
    def universe(self) -> Universe:
        return Universe(tuple(h.label for h in self.arrangement))

    def cone_system(self) -> StrictSystem:
        return StrictSystem(self.dimension, [r.row() for r in self.cone])

    def region_system(self, mask: int) -> StrictSystem:
        """Strict rows cutting out the region where exactly the elements of ``mask`` are present."""
        rows = [h.side(bool(mask >> i & 1)) for i, h in enumerate(self.arrangement)]
        rows.extend(r.row() for r in self.cone)
        return StrictSystem(self.dimension, rows)

    def sign_vector(self, point: Sequence) -> SignVector:
        return SignVector(tuple(h.sign(point) for h in self.arrangement))

    def contains(self, point: Sequence) -> bool:
        """Whether ``point`` lies strictly inside K."""
        return self.cone_system().satisfied_by(point)

    def to_dict(self) -> dict[str, Any]:
        return {
            "dimension": self.dimension,
            "arrangement": [
                {"label": h.label, "coeffs": [format_rational(c) for c in h.coeffs], "rhs": format_rational(h.rhs)}
                for h in self.arrangement
            ],
            "cone": [
                {
                    "coeffs": [format_rational(c) for c in r.coeffs],
                    "rhs": format_rational(r.rhs),
                    "rel": r.rel,
                    "source": r.source,
                }
                for r in self.cone
            ],
            "meta": self.meta,
        }

    def to_json(self, indent: int | None = 2) -> str:
        return json.dumps(self.to_dict(), indent=indent, sort_keys=False)

    @classmethod
    def from_dict(cls, data: dict) -> "HalfspaceSystem":
        try:
            dim = int(data["dimension"])
            arrangement = [Hyperplane(h["label"], h["coeffs"], h["rhs"]) for h in data["arrangement"]]
            cone = [ConeRow(r["coeffs"], r["rhs"], r["rel"], dict(r.get("source", {}))) for r in data.get("cone", [])]
        except (KeyError, TypeError) as exc:
            raise ValueError(f"malformed halfspace system: {exc}") from exc
        return cls(dim, arrangement, cone, dict(data.get("meta", {})))

    @classmethod
    def from_json(cls, text: str) -> "HalfspaceSystem":
        return cls.from_dict(json.loads(text))


def source_circuit(kind: str, universe: Universe, stem: int, root: int) -> dict:
    return {"kind": kind, "stem": universe.names(stem), "root": universe.labels[root]}


def source_positive(universe: Universe, p: int) -> dict:
    return {"kind": "positive_circuit", "set": universe.names(p)}
