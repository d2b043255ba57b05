"""Brute-force oracles and instance generators for cross-checking the production code.

The oracle functions work on frozensets of labels and re-evaluate each
definition literally; they deliberately share no code with the bitset paths.
"""

from __future__ import annotations

import random
from itertools import chain, combinations
from typing import Iterator

from .geometry import ConvexGeometry, generate_from_orders
from .ideals import IdealOfGeometry, check_bouquet, check_locally_union_closed, check_median
from .sets import SetFamily, Universe, bits, popcount

ENUMERATION_CAP = 4


# --------------------------------------------------------------------------
# generators


def enumerate_convex_geometries(n: int) -> Iterator[ConvexGeometry]:
    """Every convex geometry on ``{1..n}`` for ``n <= 4``.

    Masks are decided from the largest popcount down. Including a set
    forces its meets with earlier inclusions, so excluding a forced set
    prunes the branch; (C3) is checked on each complete family.
    """
    if n > ENUMERATION_CAP:
        raise ValueError(f"exhaustive enumeration is capped at n = {ENUMERATION_CAP}; use random_geometry")
    if n < 0:
        raise ValueError("n must be non-negative")
    universe = Universe.of_size(n)
    full = universe.full
    middle = sorted((m for m in range(1, full)), key=lambda m: (-popcount(m), m))
    results = []

    def extendable(chosen: set[int]) -> bool:
        return all(x == full or any((x | 1 << e) in chosen for e in bits(full & ~x)) for x in chosen)

    def rec(i: int, chosen: set[int], forced: set[int]) -> None:
        if i == len(middle):
            if extendable(chosen):
                results.append(frozenset(chosen))
            return
        m = middle[i]
        if m not in forced:
            rec(i + 1, chosen, forced)
        new_forced = forced | {m & c for c in chosen}
        chosen.add(m)
        rec(i + 1, chosen, new_forced)
        chosen.discard(m)

    base = {full, 0} if n else {0}
    rec(0, set(base), set())
    for fam in sorted(results, key=lambda s: sorted(s)):
        yield ConvexGeometry(SetFamily(universe, fam))


def enumerate_convex_geometries_plain(n: int) -> list[SetFamily]:
    """Same corpus by filtering every family that holds the empty set and the universe."""
    if n > ENUMERATION_CAP:
        raise ValueError(f"exhaustive enumeration is capped at n = {ENUMERATION_CAP}")
    universe = Universe.of_size(n)
    full = universe.full
    middle = list(range(1, full))
    out = []
    for pick in range(1 << len(middle)):
        fam = {0, full} | {m for j, m in enumerate(middle) if pick >> j & 1}
        ok = all((a & b) in fam for a in fam for b in fam)
        ok = ok and all(x == full or any((x | 1 << e) in fam for e in bits(full & ~x)) for x in fam)
        if ok:
            out.append(SetFamily(universe, fam))
    return sorted(out, key=lambda f: f.members)


def random_orders(n: int, k: int, rng: random.Random) -> list[tuple[int, ...]]:
    return [tuple(rng.sample(range(n), n)) for _ in range(k)]


def random_geometry(n: int, k_orders: int, seed: int) -> ConvexGeometry:
    """Geometry generated by ``k_orders`` random permutations (reproducible per seed)."""
    if n > 20:
        raise ValueError("random_geometry supports n <= 20")
    if k_orders < 1:
        raise ValueError("at least one order is needed")
    rng = random.Random(seed)
    return ConvexGeometry(generate_from_orders(Universe.of_size(n), random_orders(n, k_orders, rng)))


def _downset(family: SetFamily, tops: list[int]) -> SetFamily:
    return family.with_members(x for x in family.members if any(x & t == x for t in tops))


def enumerate_ideals(geometry: ConvexGeometry) -> Iterator[IdealOfGeometry]:
    """All nonempty ideals, one per nonempty antichain of the lattice of convex sets.

    Antichains are produced lazily in depth-first order, so callers may stop early.
    """
    members = geometry.family.members
    k = len(members)
    comparable = [[i != j and (members[i] & members[j] in (members[i], members[j])) for j in range(k)] for i in range(k)]
    stack = [(0, [])]
    while stack:
        start, picked = stack.pop()
        if picked:
            yield IdealOfGeometry(geometry, _downset(geometry.family, [members[i] for i in picked]))
        for j in range(k - 1, start - 1, -1):
            if not any(comparable[j][p] for p in picked):
                stack.append((j + 1, picked + [j]))


def sample_ideals(geometry: ConvexGeometry, count: int, seed: int) -> list[IdealOfGeometry]:
    """Up to ``count`` distinct ideals generated by random antichains."""
    rng = random.Random(seed)
    members = geometry.family.members
    out: dict[SetFamily, IdealOfGeometry] = {}
    attempts = 0
    while len(out) < count and attempts < 50 * count:
        attempts += 1
        size = rng.randint(1, min(4, len(members)))
        picks = rng.sample(members, size)
        tops = [m for m in picks if not any(o != m and o & m == m for o in picks)]
        fam = _downset(geometry.family, tops)
        if fam not in out:
            out[fam] = IdealOfGeometry(geometry, fam)
    return [out[f] for f in sorted(out, key=lambda f: f.members)]


def random_median_system(n: int, seed: int) -> SetFamily:
    """A random median set system, drawn as a clique complex, a rooted tree or an ideal of a downset alignment."""
    rng = random.Random(seed)
    kind = rng.randrange(3)
    universe = Universe.of_size(n)
    if kind == 0:
        adj = [[False] * n for _ in range(n)]
        p = rng.choice([0.3, 0.5, 0.7])
        for i in range(n):
            for j in range(i + 1, n):
                adj[i][j] = adj[j][i] = rng.random() < p
        fam = [m for m in range(1 << n) if all(adj[i][j] for i, j in combinations(list(bits(m)), 2))]
        return SetFamily(universe, fam)
    if kind == 1:
        # a rooted tree with n edges; each vertex is the set of edges on its root path
        parent = [None] + [rng.randrange(v) for v in range(1, n + 1)]
        fam = []
        for v in range(n + 1):
            mask = 0
            w = v
            while w:
                mask |= 1 << (w - 1)
                w = parent[w]
            fam.append(mask)
        return SetFamily(universe, fam)
    for _ in range(200):
        order = list(range(n))
        rng.shuffle(order)
        below = {e: {f for f in order[: order.index(e)] if rng.random() < 0.3} for e in order}
        # close under transitivity so the relation is a partial order
        changed = True
        while changed:
            changed = False
            for e in order:
                extra = set().union(*(below[f] for f in below[e])) - below[e] if below[e] else set()
                if extra:
                    below[e] |= extra
                    changed = True
        downsets = [m for m in range(1 << n) if all(all(m >> f & 1 for f in below[e]) for e in bits(m))]
        alignment = ConvexGeometry(SetFamily(universe, downsets))
        ideal = sample_ideals(alignment, 1, rng.randrange(1 << 30))[0]
        support = 0
        for m in ideal.family.members:
            support |= m
        if support == universe.full and check_median(ideal.family):
            return ideal.family
    return SetFamily.power_set(universe)


# --------------------------------------------------------------------------
# definition-level oracles on frozensets


def _as_sets(family: SetFamily) -> tuple[list[str], list[frozenset]]:
    return list(family.universe.labels), [frozenset(family.universe.names(m)) for m in family.members]


def _powerset(items) -> list[frozenset]:
    items = list(items)
    return [frozenset(c) for c in chain.from_iterable(combinations(items, k) for k in range(len(items) + 1))]


def oracle_rooted_circuits(geometry: ConvexGeometry) -> set[tuple[frozenset, str]]:
    """All (C, r) with trace of the geometry on C equal to every subset of C except C - r."""
    labels, sets = _as_sets(geometry.family)
    if len(labels) > 7:
        raise ValueError("oracle_rooted_circuits is capped at 7 elements")
    out = set()
    for c in _powerset(labels):
        traced = {s & c for s in sets}
        full = set(_powerset(c))
        for r in c:
            if traced == full - {c - {r}}:
                out.add((c, r))
    return out


def _hull(sets: list[frozenset], universe: frozenset, a: frozenset) -> frozenset:
    out = universe
    for s in sets:
        if a <= s:
            out = out & s
    return out


def oracle_critical_circuits(geometry: ConvexGeometry) -> set[tuple[frozenset, str]]:
    labels, sets = _as_sets(geometry.family)
    universe = frozenset(labels)
    members = set(sets)
    out = set()
    for c, a in oracle_rooted_circuits(geometry):
        h = _hull(sets, universe, c)
        if h - {a} in members:
            continue
        if all(h - {a, b} in members for b in c - {a}):
            out.add((c, a))
    return out


def oracle_positive_circuits(ideal: IdealOfGeometry) -> set[frozenset]:
    labels, sets = _as_sets(ideal.family)
    if len(labels) > 10:
        raise ValueError("oracle_positive_circuits is capped at 10 elements")
    out = set()
    for p in _powerset(labels):
        traced = {s & p for s in sets}
        if traced == set(_powerset(p)) - {p}:
            out.add(p)
    return out


def oracle_meet_irreducibles(geometry: ConvexGeometry) -> list[frozenset]:
    labels, sets = _as_sets(geometry.family)
    universe = frozenset(labels)
    out = []
    for m in sets:
        if m == universe:
            continue
        meet = universe
        for s in sets:
            if m < s:
                meet = meet & s
        if meet != m:
            out.append(m)
    return out


def oracle_cdim(geometry: ConvexGeometry) -> int:
    """Largest antichain of meet-irreducibles, by exhaustive search from the top size down."""
    irr = oracle_meet_irreducibles(geometry)
    if len(irr) > 20:
        raise ValueError("oracle_cdim is capped at 20 meet-irreducibles")
    for k in range(len(irr), 0, -1):
        for combo in combinations(irr, k):
            if all(not (a <= b or b <= a) for a, b in combinations(combo, 2)):
                return k
    return 0


def bouquets_of_downset_alignments(geometry: ConvexGeometry) -> list[SetFamily]:
    """Ideals of ``geometry`` that are bouquets of downset alignments."""
    out = []
    for ideal in enumerate_ideals(geometry):
        fam = ideal.family
        if check_bouquet(fam) and check_locally_union_closed(fam):
            out.append(fam)
    return out
