"""Bitset-backed set families over a small labeled universe.

A subset of the universe is an ``int`` mask: bit ``i`` is set when the
element at index ``i`` belongs to the subset. Families are immutable and
kept in canonical form (deduplicated, sorted by mask value), so two
families over the same universe are equal exactly when they hold the same
sets.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterable, Iterator, Sequence

MAX_UNIVERSE = 64


def popcount(mask: int) -> int:
    return bin(mask).count("1")


def bits(mask: int) -> Iterator[int]:
    """Yield the indices of the set bits of ``mask`` in increasing order."""
    i = 0
    while mask:
        if mask & 1:
            yield i
        mask >>= 1
        i += 1


def submasks(mask: int) -> Iterator[int]:
    """Yield every submask of ``mask``, including 0 and ``mask`` itself."""
    sub = mask
    while True:
        yield sub
        if sub == 0:
            return
        sub = (sub - 1) & mask


def compress(mask: int, onto: int) -> int:
    """Re-index the bits of ``mask`` lying in ``onto`` to consecutive positions."""
    out = 0
    for pos, i in enumerate(bits(onto)):
        if mask >> i & 1:
            out |= 1 << pos
    return out


@dataclass(frozen=True)
class Universe:
    """An ordered list of distinct element labels."""

    labels: tuple[str, ...]
    _index: dict = field(init=False, repr=False, compare=False, hash=False)

    def __post_init__(self) -> None:
        labels = tuple(str(x) for x in self.labels)
        object.__setattr__(self, "labels", labels)
        if len(set(labels)) != len(labels):
            raise ValueError(f"duplicate labels in universe: {labels}")
        if len(labels) > MAX_UNIVERSE:
            raise ValueError(f"universe has {len(labels)} elements; at most {MAX_UNIVERSE} supported")
        object.__setattr__(self, "_index", {lab: i for i, lab in enumerate(labels)})

    @classmethod
    def of_size(cls, n: int) -> "Universe":
        """The universe ``1..n`` with labels ``"1"``, ... ``str(n)``."""
        return cls(tuple(str(i) for i in range(1, n + 1)))

    def __len__(self) -> int:
        return len(self.labels)

    @property
    def full(self) -> int:
        return (1 << len(self.labels)) - 1

    def index(self, label: str) -> int:
        try:
            return self._index[str(label)]
        except KeyError:
            raise ValueError(f"label {label!r} not in universe {list(self.labels)}") from None

    def mask(self, labels: Iterable) -> int:
        out = 0
        for lab in labels:
            out |= 1 << self.index(lab)
        return out

    def names(self, mask: int) -> list[str]:
        return [self.labels[i] for i in bits(mask)]

    def restrict(self, mask: int) -> "Universe":
        return Universe(tuple(self.labels[i] for i in bits(mask)))

    def format(self, mask: int) -> str:
        return "{" + ",".join(self.names(mask)) + "}"


class SetFamily:
    """An immutable, canonical family of subsets of a :class:`Universe`."""

    __slots__ = ("universe", "members", "_lookup")

    def __init__(self, universe: Universe, members: Iterable[int] = ()):
        full = universe.full
        ms = set()
        for m in members:
            m = int(m)
            if m < 0 or m & ~full:
                raise ValueError(f"mask {m:#x} has bits outside a universe of size {len(universe)}")
            ms.add(m)
        self.universe = universe
        self.members: tuple[int, ...] = tuple(sorted(ms))
        self._lookup = frozenset(ms)

    @classmethod
    def from_sets(cls, universe: Universe | Sequence[str] | int, sets: Iterable[Iterable]) -> "SetFamily":
        """Build a family from label collections; ``universe`` may be a size ``n``."""
        if isinstance(universe, int):
            universe = Universe.of_size(universe)
        elif not isinstance(universe, Universe):
            universe = Universe(tuple(universe))
        return cls(universe, (universe.mask(s) for s in sets))

    @classmethod
    def power_set(cls, universe: Universe) -> "SetFamily":
        return cls(universe, range(1 << len(universe)))

    @property
    def n(self) -> int:
        return len(self.universe)

    def __contains__(self, mask: int) -> bool:
        return mask in self._lookup

    def __iter__(self) -> Iterator[int]:
        return iter(self.members)

    def __len__(self) -> int:
        return len(self.members)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, SetFamily):
            return NotImplemented
        return self.universe == other.universe and self.members == other.members

    def __hash__(self) -> int:
        return hash((self.universe.labels, self.members))

    def __repr__(self) -> str:
        body = ", ".join(self.universe.format(m) for m in self.members)
        return f"SetFamily([{body}])"

    def as_frozensets(self) -> set[frozenset[str]]:
        return {frozenset(self.universe.names(m)) for m in self.members}

    def with_members(self, members: Iterable[int]) -> "SetFamily":
        return SetFamily(self.universe, members)


@dataclass(frozen=True)
class SignVector:
    """A map from universe positions to -1, 0 or +1."""

    entries: tuple[int, ...]

    def __post_init__(self) -> None:
        if any(v not in (-1, 0, 1) for v in self.entries):
            raise ValueError(f"sign entries must be -1, 0 or +1: {self.entries}")

    @classmethod
    def from_set(cls, mask: int, n: int) -> "SignVector":
        """Tope encoding of a set: +1 on members, -1 elsewhere."""
        return cls(tuple(1 if mask >> i & 1 else -1 for i in range(n)))

    @classmethod
    def parse(cls, text: str) -> "SignVector":
        table = {"+": 1, "+1": 1, "1": 1, "-": -1, "-1": -1, "0": 0}
        try:
            return cls(tuple(table[t.strip()] for t in text.split(",")))
        except KeyError as exc:
            raise ValueError(f"bad sign vector {text!r}") from exc

    def __len__(self) -> int:
        return len(self.entries)

    @property
    def positive(self) -> int:
        return sum(1 << i for i, v in enumerate(self.entries) if v == 1)

    @property
    def negative(self) -> int:
        return sum(1 << i for i, v in enumerate(self.entries) if v == -1)

    @property
    def zero(self) -> int:
        return sum(1 << i for i, v in enumerate(self.entries) if v == 0)

    def to_set(self) -> int:
        if self.zero:
            raise ValueError(f"{self} is not a tope")
        return self.positive

    def __str__(self) -> str:
        return ",".join({1: "+", -1: "-", 0: "0"}[v] for v in self.entries)


# --------------------------------------------------------------------------
# family operations


def complement_family(family: SetFamily) -> SetFamily:
    """All subsets of the universe that are not members of ``family``."""
    return family.with_members(m for m in range(1 << family.n) if m not in family)


def trace(family: SetFamily, y: int) -> SetFamily:
    """The family ``{X & y}`` re-expressed over the sub-universe ``y``."""
    sub = family.universe.restrict(y)
    return SetFamily(sub, {compress(m & y, y) for m in family.members})


def _trace_masks(family: SetFamily, x: int) -> set[int]:
    return {m & x for m in family.members}


def is_shattered(family: SetFamily, x: int) -> bool:
    return len(_trace_masks(family, x)) == 1 << popcount(x)


def strong_shattering_support(family: SetFamily, x: int) -> int | None:
    """A support ``Y`` disjoint from ``x`` with every ``Y | X'`` in the family, or None."""
    subs = list(submasks(x))
    for m in family.members:
        if m & x:
            continue
        if all((m | s) in family for s in subs):
            return m
    return None


def is_strongly_shattered(family: SetFamily, x: int) -> bool:
    return strong_shattering_support(family, x) is not None


def shattered_sets(family: SetFamily) -> list[int]:
    """Every shattered subset, grown level by level (the complex is closed downward)."""
    if not family.members:
        return []
    known = {0}
    level = [0]
    n = family.n
    while level:
        nxt = []
        for x in level:
            # extend only above the highest element, so each set is built once
            for e in range(x.bit_length(), n):
                cand = x | 1 << e
                if all(cand & ~(1 << i) in known for i in bits(x)) and is_shattered(family, cand):
                    nxt.append(cand)
        known.update(nxt)
        level = nxt
    return sorted(known)


def vc_dimension(family: SetFamily) -> int:
    """Size of the largest shattered subset; the family must be nonempty."""
    if not family.members:
        raise ValueError("VC-dimension of an empty family is undefined")
    return max(popcount(x) for x in shattered_sets(family))


def is_ample(family: SetFamily) -> bool:
    """True when every shattered set is also strongly shattered."""
    return all(is_strongly_shattered(family, x) for x in shattered_sets(family))


def maximal_cubes(family: SetFamily) -> list[SignVector]:
    """All inclusion-maximal cubes of the 1-inclusion graph of ``family``.

    A cube with free set ``X`` and support ``Y`` is returned as the sign
    vector with 0 on ``X``, +1 on ``Y`` and -1 elsewhere. Cubes are built
    bottom-up: two cubes with the same free set whose supports differ in one
    coordinate ``e`` merge into a cube with free set ``X | e``; a cube that
    never merges is maximal. Output is sorted by (free set, support).
    """
    n = family.n
    level: dict[int, set[int]] = {0: set(family.members)}
    maximal: list[tuple[int, int]] = []
    while level:
        nxt: dict[int, set[int]] = {}
        for x, supports in level.items():
            merged: set[int] = set()
            for e in range(n):
                bit = 1 << e
                if x & bit:
                    continue
                for y in supports:
                    if not y & bit and (y | bit) in supports:
                        nxt.setdefault(x | bit, set()).add(y)
                        merged.add(y)
                        merged.add(y | bit)
            maximal.extend((x, y) for y in supports if y not in merged)
        level = nxt
    maximal.sort()
    out = []
    for x, y in maximal:
        out.append(SignVector(tuple(0 if x >> i & 1 else (1 if y >> i & 1 else -1) for i in range(n))))
    return out


def subsets_of_size(mask: int, k: int) -> Iterator[int]:
    for combo in combinations(list(bits(mask)), k):
        yield sum(1 << i for i in combo)
