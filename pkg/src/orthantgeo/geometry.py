"""Convex geometries: axioms, hulls, rooted circuits, copoints and orders."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .sets import (
    SetFamily,
    SignVector,
    Universe,
    bits,
    complement_family,
    maximal_cubes,
    popcount,
)


@dataclass(frozen=True, order=True)
class RootedCircuit:
    """A rooted set ``(stem, root)`` with ``root`` in ``stem``; ordered by (stem, root)."""

    stem: int
    root: int

    def __post_init__(self) -> None:
        if not self.stem >> self.root & 1:
            raise ValueError(f"root {self.root} is not in stem {self.stem:#b}")

    @property
    def base(self) -> int:
        """The stem without its root."""
        return self.stem & ~(1 << self.root)

    def cube(self, n: int) -> SignVector:
        """Sign-vector encoding of the cube ``{stem - root} | X'`` for ``X'`` outside the stem."""
        out = []
        for i in range(n):
            if i == self.root:
                out.append(-1)
            elif self.stem >> i & 1:
                out.append(1)
            else:
                out.append(0)
        return SignVector(tuple(out))

    def format(self, universe: Universe) -> str:
        return f"({universe.format(self.stem)},{universe.labels[self.root]})"


TotalOrder = tuple[int, ...]
"""A permutation of element indices, listed from the minimum to the maximum."""


@dataclass
class AxiomReport:
    c1: bool
    c2: bool
    c3: bool
    witnesses: dict[str, tuple[int, ...]] = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return self.c1 and self.c2 and self.c3


def check_axioms(family: SetFamily) -> AxiomReport:
    """Evaluate (C1) contains empty set and universe, (C2) meets, (C3) one-step extension."""
    full = family.universe.full
    witnesses: dict[str, tuple[int, ...]] = {}
    c1 = 0 in family and full in family
    if not c1:
        witnesses["c1"] = tuple(m for m in (0, full) if m not in family)
    c2 = True
    ms = family.members
    for i, x in enumerate(ms):
        for y in ms[i + 1:]:
            if (x & y) not in family:
                c2 = False
                witnesses["c2"] = (x, y)
                break
        if not c2:
            break
    c3 = True
    for x in ms:
        if x == full:
            continue
        if not any((x | 1 << e) in family for e in bits(full & ~x)):
            c3 = False
            witnesses["c3"] = (x,)
            break
    return AxiomReport(c1, c2, c3, witnesses)


def _require_c1_c2(family: SetFamily) -> None:
    report = check_axioms(family)
    if not (report.c1 and report.c2):
        raise ValueError("family must satisfy (C1) and (C2)")


def hull(family: SetFamily, a: int) -> int:
    """Intersection of all members containing ``a`` (the universe if none does)."""
    out = family.universe.full
    for m in family.members:
        if m & a == a:
            out &= m
    return out


def check_anti_exchange(family: SetFamily) -> bool:
    """(C5): for convex X and distinct p, q outside it, q in conv(X+p) forbids p in conv(X+q)."""
    _require_c1_c2(family)
    full = family.universe.full
    for x in family.members:
        outside = list(bits(full & ~x))
        hulls = {p: hull(family, x | 1 << p) for p in outside}
        for p in outside:
            for q in outside:
                if p != q and hulls[p] >> q & 1 and hulls[q] >> p & 1:
                    return False
    return True


def check_c4(family: SetFamily) -> bool:
    """(C4): every member is the hull of its extreme points."""
    _require_c1_c2(family)
    for x in family.members:
        ext = 0
        for e in bits(x):
            if (x & ~(1 << e)) in family:
                ext |= 1 << e
        if hull(family, ext) != x:
            return False
    return True


class ConvexGeometry:
    """A validated convex geometry; construction raises ValueError on bad input."""

    def __init__(self, family: SetFamily):
        report = check_axioms(family)
        if not report.ok:
            failed = [k for k in ("c1", "c2", "c3") if not getattr(report, k)]
            raise ValueError(f"not a convex geometry: axioms {', '.join(failed)} fail")
        self.family = family

    @classmethod
    def from_sets(cls, universe, sets: Iterable[Iterable]) -> "ConvexGeometry":
        return cls(SetFamily.from_sets(universe, sets))

    @classmethod
    def free(cls, universe: Universe) -> "ConvexGeometry":
        return cls(SetFamily.power_set(universe))

    @property
    def universe(self) -> Universe:
        return self.family.universe

    @property
    def n(self) -> int:
        return self.family.n

    def __contains__(self, mask: int) -> bool:
        return mask in self.family

    def __eq__(self, other: object) -> bool:
        return isinstance(other, ConvexGeometry) and self.family == other.family

    def __hash__(self) -> int:
        return hash(self.family)

    def __repr__(self) -> str:
        return f"ConvexGeometry({self.family!r})"

    def closure(self, a: int) -> int:
        return hull(self.family, a)

    def extreme_points(self, x: int) -> int:
        if x not in self.family:
            raise ValueError(f"{self.universe.format(x)} is not convex")
        out = 0
        for e in bits(x):
            if (x & ~(1 << e)) in self.family:
                out |= 1 << e
        return out

    def extension_order(self, start: int, stop: int | None = None) -> list[int]:
        """Elements added, lowest index first, along one-step extensions from ``start`` to ``stop``."""
        target = self.universe.full if stop is None else stop
        if start not in self.family or target not in self.family or start & ~target:
            raise ValueError("extension needs convex start inside a convex stop")
        order = []
        cur = start
        while cur != target:
            for e in bits(target & ~cur):
                if (cur | 1 << e) in self.family:
                    cur |= 1 << e
                    order.append(e)
                    break
            else:
                raise RuntimeError("no one-step extension found; family is not a convex geometry")
        return order


def closure(geometry: ConvexGeometry, a: int) -> int:
    return geometry.closure(a)


def extreme_points(geometry: ConvexGeometry, x: int) -> int:
    return geometry.extreme_points(x)


# --------------------------------------------------------------------------
# rooted circuits


def rooted_circuits(geometry: ConvexGeometry) -> list[RootedCircuit]:
    """All rooted circuits, sorted by (stem mask, root).

    ``(C, r)`` is a rooted circuit exactly when ``r`` lies in the hull of
    ``C - r`` and of no proper subset of it. Candidate bases are scanned by
    increasing size per root, keeping the minimal ones.
    """
    n = geometry.n
    full = geometry.universe.full
    out = []
    for r in range(n):
        rbit = 1 << r
        others = full & ~rbit
        hits: set[int] = set()
        by_size: dict[int, list[int]] = {}
        sub = others
        while True:
            by_size.setdefault(popcount(sub), []).append(sub)
            if sub == 0:
                break
            sub = (sub - 1) & others
        for size in sorted(by_size):
            for base in by_size[size]:
                if any((base & ~(1 << e)) in hits for e in bits(base)):
                    # a smaller base already reaches r; mark so supersets are skipped too
                    hits.add(base)
                    continue
                if geometry.closure(base) & rbit:
                    hits.add(base)
                    out.append(RootedCircuit(base | rbit, r))
    out.sort()
    return out


def critical_rooted_circuits(geometry: ConvexGeometry, circuits: Sequence[RootedCircuit] | None = None) -> list[RootedCircuit]:
    """Rooted circuits ``(C, a)`` with conv(C)-a not convex but conv(C)-{a,b} convex for all b."""
    if circuits is None:
        circuits = rooted_circuits(geometry)
    out = []
    for c in circuits:
        h = geometry.closure(c.stem)
        drop = h & ~(1 << c.root)
        if drop in geometry:
            continue
        if all((drop & ~(1 << b)) in geometry for b in bits(c.base)):
            out.append(c)
    return out


def reconstruct_from_rooted_sets(universe: Universe, rooted: Iterable[RootedCircuit]) -> SetFamily:
    """All X meeting no rooted set ``(C, r)`` in exactly ``C - r``."""
    pairs = [(c.stem, c.base) for c in rooted]
    return SetFamily(
        universe,
        (x for x in range(1 << len(universe)) if all(x & stem != base for stem, base in pairs)),
    )


def check_dietrich(rooted: Sequence[RootedCircuit]) -> bool:
    """Whether ``rooted`` satisfies Dietrich's two axioms for the circuits of a convex geometry."""
    rs = list(rooted)
    for c1 in rs:
        for c2 in rs:
            if c1 != c2 and c1.stem & ~c2.stem == 0:
                return False
    for c1 in rs:
        for c2 in rs:
            if c2.base >> c1.root & 1:
                allowed = (c1.stem | c2.stem) & ~(1 << c1.root)
                if not any(c3.root == c2.root and c3.stem & ~allowed == 0 for c3 in rs):
                    return False
    return True


def circuits_via_cubes(geometry: ConvexGeometry) -> list[RootedCircuit]:
    """Rooted circuits decoded from the maximal cubes of the complement family."""
    out = []
    for cube in maximal_cubes(complement_family(geometry.family)):
        neg = cube.negative
        if popcount(neg) != 1:
            raise RuntimeError(f"maximal cube {cube} of the complement has {popcount(neg)} negative entries")
        root = neg.bit_length() - 1
        out.append(RootedCircuit(cube.positive | neg, root))
    out.sort()
    return out


# --------------------------------------------------------------------------
# lattice structure, convex dimension, orders


def upper_covers(family: SetFamily, x: int) -> list[int]:
    above = [m for m in family.members if m != x and m & x == x]
    return [m for m in above if not any(o != m and o & m == o for o in above)]


def copoints(geometry: ConvexGeometry) -> list[tuple[int, int]]:
    """Meet-irreducible members with their attaching point, sorted by mask."""
    out = []
    for m in geometry.family.members:
        covers = upper_covers(geometry.family, m)
        if len(covers) == 1:
            diff = covers[0] & ~m
            if popcount(diff) != 1:
                raise RuntimeError("cover differs by more than one element")
            out.append((m, diff.bit_length() - 1))
    return out


def _max_matching(adj: list[list[int]], right: int) -> list[int]:
    """Kuhn's augmenting paths; returns the left partner of each right vertex (-1 if free)."""
    match_r = [-1] * right

    def augment(u: int, seen: list[bool]) -> bool:
        for v in adj[u]:
            if not seen[v]:
                seen[v] = True
                if match_r[v] < 0 or augment(match_r[v], seen):
                    match_r[v] = u
                    return True
        return False

    for u in range(len(adj)):
        augment(u, [False] * right)
    return match_r


def chain_cover(sets: Sequence[int]) -> list[list[int]]:
    """A minimum chain cover of ``sets`` under inclusion (Dilworth via bipartite matching).

    Each chain is listed from smallest to largest.
    """
    k = len(sets)
    adj = [[j for j in range(k) if j != i and sets[i] & sets[j] == sets[i]] for i in range(k)]
    match_r = _max_matching(adj, k)
    succ = [-1] * k
    for j, i in enumerate(match_r):
        if i >= 0:
            succ[i] = j
    has_pred = {j for j, i in enumerate(match_r) if i >= 0}
    chains = []
    for start in range(k):
        if start in has_pred:
            continue
        chain = [start]
        while succ[chain[-1]] >= 0:
            chain.append(succ[chain[-1]])
        chains.append([sets[i] for i in chain])
    chains.sort()
    return chains


def convex_dimension(geometry: ConvexGeometry) -> int:
    """Width of the poset of meet-irreducibles."""
    return len(chain_cover([m for m, _ in copoints(geometry)]))


def generate_from_orders(universe: Universe, orders: Sequence[TotalOrder]) -> SetFamily:
    """The empty set plus all intersections of one ending interval per order."""
    n = len(universe)
    if not orders:
        if n:
            raise ValueError("at least one order is needed")
        return SetFamily(universe, [0])
    for order in orders:
        if sorted(order) != list(range(n)):
            raise ValueError(f"{order} is not a permutation of the universe")

    def ending_intervals(order: TotalOrder) -> list[int]:
        out = []
        acc = 0
        for e in reversed(order):
            acc |= 1 << e
            out.append(acc)
        return out

    current = set(ending_intervals(orders[0]))
    for order in orders[1:]:
        ivs = ending_intervals(order)
        current = {c & iv for c in current for iv in ivs}
    current.add(0)
    return SetFamily(universe, current)


def generating_orders(geometry: ConvexGeometry) -> list[TotalOrder]:
    """``convex_dimension`` total orders generating the geometry.

    Each chain of a minimum chain cover of the meet-irreducibles is extended
    to a maximal chain of the lattice by lowest-index one-step extensions;
    the element added at step k takes position n+1-k, so the ending
    intervals of the order are exactly the sets of the maximal chain.
    """
    n = geometry.n
    if n == 0:
        return []
    full = geometry.universe.full
    chains = chain_cover([m for m, _ in copoints(geometry)])
    orders = []
    for chain in chains:
        added: list[int] = []
        cur = 0
        for target in list(chain) + [full]:
            added.extend(geometry.extension_order(cur, target))
            cur = target
        orders.append(tuple(reversed(added)))
    if generate_from_orders(geometry.universe, orders) != geometry.family:
        raise RuntimeError("generated orders do not reproduce the geometry")
    assert len(orders) == len(chains) and all(len(o) == n for o in orders)
    return orders


def is_downset_alignment(geometry: ConvexGeometry) -> bool:
    """Whether the convex sets are closed under union."""
    fam = geometry.family
    ms = fam.members
    return all((x | y) in fam for i, x in enumerate(ms) for y in ms[i + 1:])
