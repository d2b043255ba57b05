"""Realization in dimension equal to the convex dimension, from generating orders."""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence

from ..geometry import ConvexGeometry, TotalOrder, generating_orders
from .system import ConeRow, HalfspaceSystem, Hyperplane


def coefficient_sequence(d: int, n: int) -> list[int]:
    """``a_0 = 0`` and ``a_{j+1} = d * a_j + d + 1`` for ``j < n``."""
    if d < 1:
        raise ValueError("dimension must be at least 1")
    seq = [0]
    for _ in range(n):
        seq.append(d * seq[-1] + d + 1)
    return seq


def realize_lowdim(
    geometry: ConvexGeometry,
    orders: Sequence[TotalOrder] | None = None,
    sequence: Sequence[int] | None = None,
) -> HalfspaceSystem:
    """Hyperplanes ``sum_i x_i / b_i(e) = 1`` inside the open positive orthant of R^d.

    ``b_i(e)`` is ``a_j`` for the 1-based position ``j`` of ``e`` in order
    ``i``. ``sequence`` replaces ``a`` (indices 0..n); it exists for
    negative controls.
    """
    n = geometry.n
    orders = [tuple(o) for o in (generating_orders(geometry) if orders is None else orders)]
    d = len(orders)
    # the empty universe has no orders; its one region is all of R^0
    seq = list(coefficient_sequence(max(d, 1), n) if sequence is None else sequence)
    if len(seq) < n + 1:
        raise ValueError(f"coefficient sequence needs {n + 1} entries")
    if any(Fraction(v) <= 0 for v in seq[1:n + 1]):
        raise ValueError("coefficient sequence must be positive from index 1")
    position = [{e: j + 1 for j, e in enumerate(order)} for order in orders]
    arrangement = []
    for e, label in enumerate(geometry.universe.labels):
        coeffs = tuple(-Fraction(1, 1) / Fraction(seq[position[i][e]]) for i in range(d))
        arrangement.append(Hyperplane(label, coeffs, -1))
    cone = [
        ConeRow(tuple(1 if j == i else 0 for j in range(d)), 0, ">", {"kind": "positive_orthant", "axis": i})
        for i in range(d)
    ]
    meta = {
        "kind": "lowdim",
        "orders": [[geometry.universe.labels[e] for e in o] for o in orders],
        "sequence": [str(Fraction(v)) for v in seq[: n + 1]],
    }
    return HalfspaceSystem(d, arrangement, cone, meta)


def _orders_and_sequence(geometry: ConvexGeometry, system: HalfspaceSystem) -> tuple[list[list[int]], list[Fraction]]:
    try:
        u = geometry.universe
        orders = [[u.index(lab) for lab in o] for o in system.meta["orders"]]
        seq = [Fraction(v) for v in system.meta["sequence"]]
    except KeyError as exc:
        raise ValueError("system lacks low-dimensional metadata") from exc
    return orders, seq


def witness_lowdim(geometry: ConvexGeometry, system: HalfspaceSystem, c: int) -> list[Fraction]:
    """The explicit region point: ``1 + b_l(predecessor of min_l C)`` per axis, or ``a_n + 1`` for C empty."""
    if c not in geometry:
        raise ValueError(f"{geometry.universe.format(c)} is not convex")
    orders, seq = _orders_and_sequence(geometry, system)
    n = geometry.n
    if c == 0:
        y = [seq[n] + 1] * len(orders)
    else:
        y = []
        for order in orders:
            idx = next(j for j, e in enumerate(order) if c >> e & 1)
            lower = Fraction(0) if idx == 0 else seq[idx]  # predecessor sits at 1-based position idx
            y.append(1 + lower)
    if not system.region_system(c).satisfied_by(y):
        raise RuntimeError("low-dimensional witness failed substitution")
    return y
