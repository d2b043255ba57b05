"""Planar realization of trees with rational coordinates.

Every edge becomes a line and the region of a vertex has the edges on its
path from the root as positive elements. K is a convex polygon. The root
starts as a polygon with one vertex per child; a leaf owns a triangular
cap at a polygon vertex (its apex), bounded by its edge line. Children of
a leaf are attached by truncating the apex into a convex chain of new
polygon vertices, one per child, and capping each of them in turn.
"""

from __future__ import annotations

from collections import deque
from fractions import Fraction
from typing import Hashable, Mapping, Sequence

from ..sets import SignVector
from .system import ConeRow, HalfspaceSystem, Hyperplane

Point = tuple[Fraction, Fraction]
TAU = Fraction(1, 3)


def _lerp(p: Point, q: Point, t: Fraction) -> Point:
    return (p[0] + t * (q[0] - p[0]), p[1] + t * (q[1] - p[1]))


def _line(p: Point, q: Point, inside: Point) -> tuple[tuple[Fraction, Fraction], Fraction]:
    """``(a, b)`` with ``a . x = b`` through p and q and ``a . inside > b``."""
    a = (q[1] - p[1], p[0] - q[0])
    b = a[0] * p[0] + a[1] * p[1]
    side = a[0] * inside[0] + a[1] * inside[1] - b
    if side == 0:
        raise RuntimeError("reference point lies on the line")
    if side < 0:
        a, b = (-a[0], -a[1]), -b
    return a, b


def _bezier(p0: Point, ctrl: Point, p1: Point, t: Fraction) -> Point:
    s = 1 - t
    return (
        s * s * p0[0] + 2 * s * t * ctrl[0] + t * t * p1[0],
        s * s * p0[1] + 2 * s * t * ctrl[1] + t * t * p1[1],
    )


def _centroid(points: Sequence[Point]) -> Point:
    k = len(points)
    return (sum((p[0] for p in points), Fraction(0)) / k, sum((p[1] for p in points), Fraction(0)) / k)


def _check_tree(adjacency: Mapping[Hashable, Sequence[Hashable]], root: Hashable) -> dict:
    nodes = set(adjacency)
    for v, nbrs in adjacency.items():
        for w in nbrs:
            if w not in nodes:
                raise ValueError(f"vertex {w!r} appears only as a neighbour")
            if v == w:
                raise ValueError(f"self-loop at {v!r}")
            if v not in adjacency[w]:
                raise ValueError(f"edge {v!r}-{w!r} is not symmetric")
    if root not in nodes:
        raise ValueError(f"root {root!r} is not a vertex")
    edges = sum(len(set(n)) for n in adjacency.values())
    if edges != 2 * (len(nodes) - 1):
        raise ValueError("input is not a tree: wrong number of edges")
    parent = {root: None}
    queue = deque([root])
    while queue:
        v = queue.popleft()
        for w in adjacency[v]:
            if w not in parent:
                parent[w] = v
                queue.append(w)
    if len(parent) != len(nodes):
        raise ValueError("input is not a tree: disconnected")
    return parent


def realize_tree(adjacency: Mapping[Hashable, Sequence[Hashable]], root: Hashable) -> tuple[HalfspaceSystem, dict]:
    """Return the planar system and the map vertex -> expected sign vector.

    Elements are labeled by the child endpoint of their edge, in BFS order.
    """
    parent = _check_tree(adjacency, root)
    children: dict = {v: [] for v in adjacency}
    order = []
    queue = deque([root])
    while queue:
        v = queue.popleft()
        order.append(v)
        kids = [w for w in adjacency[v] if parent.get(w) == v and w != root]
        kids.sort(key=str)
        children[v] = kids
        queue.extend(kids)
    elements = order[1:]
    index = {v: i for i, v in enumerate(elements)}
    labels = [str(v) for v in elements]
    if len(set(labels)) != len(labels):
        raise ValueError("vertex labels must be distinct as strings")

    # root polygon: points of a parabola, at least a triangle
    k = max(3, len(children[root]))
    polygon: list[Point] = [(Fraction(i), Fraction(i * i)) for i in range(k)]
    interior = _centroid(polygon)
    cone_rows = []
    for i in range(k):
        p, q = polygon[i], polygon[(i + 1) % k]
        a, b = _line(p, q, interior)
        cone_rows.append(ConeRow(a, b, ">", {"kind": "polygon_edge"}))
    lines: dict = {}

    def cap(v_label, apex: Point, left: Point, right: Point, tau: Fraction, inside_ref: Point) -> tuple[Point, Point]:
        b1, b2 = _lerp(apex, left, tau), _lerp(apex, right, tau)
        a, b = _line(b1, b2, apex)
        lines[v_label] = (a, b)
        return b1, b2

    # leaf record: vertex -> (apex, base1, base2), bases lying on the polygon edges at the apex
    owned: dict = {}
    roots_kids = children[root]
    for i, c in enumerate(roots_kids):
        apex = polygon[i]
        b1, b2 = cap(c, apex, polygon[i - 1], polygon[(i + 1) % k], TAU, interior)
        owned[c] = (apex, b1, b2)

    for v in order[1:]:
        kids = children[v]
        if not kids:
            continue
        apex, b1, b2 = owned.pop(v)
        if len(kids) == 1:
            c = kids[0]
            h = Fraction(1, 2)
            n1, n2 = cap(c, apex, b1, b2, h, apex)
            owned[c] = (apex, n1, n2)
            continue
        m = len(kids)
        w1, wm = _lerp(b1, apex, Fraction(1, 2)), _lerp(b2, apex, Fraction(1, 2))
        chain = [_bezier(w1, apex, wm, Fraction(j, m - 1)) for j in range(m)]
        ref = _centroid([b1, b2, apex])
        for j in range(m - 1):
            a, b = _line(chain[j], chain[j + 1], ref)
            cone_rows.append(ConeRow(a, b, ">", {"kind": "truncation", "at": str(v)}))
        for j, c in enumerate(kids):
            left = b1 if j == 0 else chain[j - 1]
            right = b2 if j == m - 1 else chain[j + 1]
            n1, n2 = cap(c, chain[j], left, right, TAU, ref)
            owned[c] = (chain[j], n1, n2)

    arrangement = [Hyperplane(str(v), lines[v][0], lines[v][1]) for v in elements]
    system = HalfspaceSystem(2, arrangement, cone_rows, {"kind": "tree", "root": str(root)})

    signs = {}
    for v in order:
        entries = [-1] * len(elements)
        w = v
        while w != root:
            entries[index[w]] = 1
            w = parent[w]
        signs[v] = SignVector(tuple(entries))
    return system, signs


def random_tree(n: int, rng) -> dict:
    """A random labeled tree on vertices ``0..n-1`` (uniform parent attachment)."""
    adj: dict = {i: [] for i in range(n)}
    for v in range(1, n):
        p = rng.randrange(v)
        adj[v].append(p)
        adj[p].append(v)
    return adj
