"""Ideals of convex geometries, bouquets, positive circuits and median systems."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable

from .geometry import ConvexGeometry
from .sets import SetFamily, bits, popcount


def _is_downward_closed_in(host: SetFamily, sub: SetFamily) -> bool:
    for y in sub.members:
        for x in host.members:
            if x & y == x and x not in sub:
                return False
    return True


def check_ideal(host: ConvexGeometry, sub: SetFamily) -> bool:
    """Whether ``sub`` is a subfamily of the host closed downward inside it."""
    if sub.universe != host.universe:
        return False
    if any(m not in host.family for m in sub.members):
        return False
    return _is_downward_closed_in(host.family, sub)


@dataclass(frozen=True)
class IdealOfGeometry:
    """An ideal ``(U', C')`` of a convex geometry; ``U'`` defaults to the union of ``C'``."""

    host: ConvexGeometry
    family: SetFamily
    sub_universe: int | None = None

    def __post_init__(self) -> None:
        if not check_ideal(self.host, self.family):
            raise ValueError("family is not an ideal of the host geometry")
        support = 0
        for m in self.family.members:
            support |= m
        if self.sub_universe is None:
            object.__setattr__(self, "sub_universe", support)
        elif support & ~self.sub_universe:
            raise ValueError("members reach outside the declared sub-universe")

    @property
    def universe(self):
        return self.host.universe


def maximal_members(family: SetFamily) -> list[int]:
    ms = family.members
    return [m for m in ms if not any(o != m and o & m == m for o in ms)]


def check_bouquet(family: SetFamily) -> bool:
    """(C1') empty set present, (C2) meets, (C3') local one-step extension."""
    if 0 not in family:
        return False
    ms = family.members
    for i, x in enumerate(ms):
        for y in ms[i + 1:]:
            if (x & y) not in family:
                return False
    for x in ms:
        for y in ms:
            if y != x and y & x == y:
                if not any((y | 1 << e) in family for e in bits(x & ~y)):
                    return False
    return True


def positive_circuits(ideal: IdealOfGeometry) -> list[int]:
    """All P whose trace in the ideal is every subset of P except P, sorted by mask.

    A trace misses P exactly when no member contains P, and contains every
    proper subset Q exactly when some member meets P in Q. Candidates are
    checked top-down from each size against the traces of the members.
    """
    n = ideal.host.n
    if n > 20:
        raise ValueError("positive circuit enumeration is capped at 20 elements")
    members = ideal.family.members
    out = []
    for p in range(1 << n):
        if any(m & p == p for m in members):
            continue
        traces = {m & p for m in members}
        if len(traces) == (1 << popcount(p)) - 1:
            out.append(p)
    return out


def minimal_positive_circuits(ideal: IdealOfGeometry) -> list[int]:
    """Inclusion-minimal positive circuits (experimental; not known to suffice for realizations)."""
    pcs = positive_circuits(ideal)
    return [p for p in pcs if not any(q != p and q & p == q for q in pcs)]


def ideal_from_positive_circuits(host: ConvexGeometry, circuits: Iterable[int]) -> SetFamily:
    """Members of the host containing none of the listed sets."""
    pcs = list(circuits)
    return host.family.with_members(
        x for x in host.family.members if not any(p & x == p for p in pcs)
    )


# --------------------------------------------------------------------------
# median set systems and bouquets of downset alignments


def check_c6(family: SetFamily) -> bool:
    """Every pair of distinct elements is separated by some member."""
    n = family.n
    for x in range(n):
        for y in range(x + 1, n):
            pair = 1 << x | 1 << y
            if not any(popcount(k & pair) == 1 for k in family.members):
                return False
    return True


def check_c7(family: SetFamily) -> bool:
    """If K1, K2, K3 have pairwise unions inside members, their union is a member."""
    ms = family.members
    covered = set()
    for i, a in enumerate(ms):
        for b in ms[i:]:
            u = a | b
            if any(m & u == u for m in ms):
                covered.add((a, b))
                covered.add((b, a))
    for k1, k2 in covered:
        for k3 in ms:
            if (k1, k3) in covered and (k2, k3) in covered and (k1 | k2 | k3) not in family:
                return False
    return True


def check_median(family: SetFamily) -> bool:
    """(C1'), (C2), (C6) and (C7)."""
    if 0 not in family:
        return False
    ms = family.members
    for i, x in enumerate(ms):
        for y in ms[i + 1:]:
            if (x & y) not in family:
                return False
    return check_c6(family) and check_c7(family)


def check_locally_union_closed(family: SetFamily) -> bool:
    """(C8): a union of two members lying inside some member is a member."""
    ms = family.members
    for i, x in enumerate(ms):
        for y in ms[i + 1:]:
            u = x | y
            if u not in family and any(z & u == u for z in ms):
                return False
    return True


def check_bouquet_of_downset_alignments(family: SetFamily) -> bool:
    return check_bouquet(family) and check_locally_union_closed(family)


def median(a: int, b: int, c: int) -> int:
    return (a & b) | (a & c) | (b & c)


@dataclass
class MergeStep:
    meet: int
    merged: tuple[int, ...]
    added: tuple[int, ...]


@dataclass
class Embedding:
    """Result of :func:`embed_bouquet`: the host geometry and the merge steps that built it."""

    host: ConvexGeometry
    steps: list[MergeStep] = field(default_factory=list)
    completion: tuple[int, ...] = ()
    maximal_count: int = 0


def _principal_ideal(family: set[int], x: int) -> list[int]:
    return [y for y in family if y & x == y]


def embed_bouquet(bouquet: SetFamily) -> Embedding:
    """Embed a bouquet of downset alignments as an ideal of a downset alignment.

    While several maximal members remain, pick the inclusion-maximal set M
    among pairwise meets of maximal members (largest mask on ties), let
    X_1..X_k be the maximal members above M, and add every union
    Y_1 | ... | Y_k of members Y_i <= X_i. Requiring M <= Y_i as well can
    leave two old members inside the new top without their union, so that
    lower bound is dropped. Once a single maximal member X is left, a chain
    from X up to the universe is appended when X is not already the
    universe.
    """
    if not check_bouquet(bouquet):
        raise ValueError("input is not a bouquet")
    if not check_locally_union_closed(bouquet):
        raise ValueError("bouquet is not locally union-closed")
    current = set(bouquet.members)
    steps: list[MergeStep] = []
    ell = len(maximal_members(bouquet))
    while True:
        maxima = sorted(m for m in current if not any(o != m and o & m == m for o in current))
        if len(maxima) == 1:
            break
        meets = {a & b for i, a in enumerate(maxima) for b in maxima[i + 1:]}
        top = [m for m in meets if not any(o != m and o & m == m for o in meets)]
        meet = max(top)
        group = [x for x in maxima if x & meet == meet]
        choices = [_principal_ideal(current, x) for x in group]
        unions = {0}
        for options in choices:
            unions = {u | y for u in unions for y in options}
        added = unions - current
        current |= added
        steps.append(MergeStep(meet, tuple(group), tuple(sorted(added))))
    top_set = maxima[0]
    full = bouquet.universe.full
    chain = []
    cur = top_set
    for e in bits(full & ~top_set):
        cur |= 1 << e
        chain.append(cur)
    current.update(chain)
    host = ConvexGeometry(bouquet.with_members(current))
    return Embedding(host, steps, tuple(chain), ell)
