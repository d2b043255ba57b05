"""Certify that a halfspace system realizes a set family, one region LP at a time."""

from __future__ import annotations

import os
from collections import deque
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable

from gmpy2 import mpq

from .lp import format_rational, max_slack, max_slack_prepared
from .realization.system import HalfspaceSystem
from .sets import SetFamily, SignVector

EXHAUSTIVE_CAP = 22


@dataclass
class VerificationReport:
    verdict: bool
    expected_regions: int
    found_regions: int
    mismatches: list[tuple[SignVector, bool, bool]] = field(default_factory=list)
    witnesses: dict[SignVector, list[Fraction]] = field(default_factory=dict)
    mode: str = "exhaustive"

    @property
    def found(self) -> set[int]:
        return {sv.positive for sv in self.witnesses}

    def to_dict(self, universe_labels: Iterable[str] | None = None) -> dict:
        def key(sv: SignVector):
            return sv.entries

        return {
            "verdict": self.verdict,
            "mode": self.mode,
            "expected_regions": self.expected_regions,
            "found_regions": self.found_regions,
            "mismatches": [
                {"sign": str(sv), "expected": exp, "found": got}
                for sv, exp, got in sorted(self.mismatches, key=lambda m: key(m[0]))
            ],
            "witnesses": [
                {"sign": str(sv), "point": [format_rational(c) for c in self.witnesses[sv]]}
                for sv in sorted(self.witnesses, key=key)
            ],
        }


def _row_key(row) -> tuple:
    return (row.coeffs, row.rhs, row.rel)


class WitnessCache:
    """Region answers keyed by sign vector, reusable when a system only gains rows.

    A cached infeasible answer carries over to any superset of its rows; a
    cached witness is reused only after it passes substitution again.
    """

    def __init__(self) -> None:
        self._store: dict[tuple[int, int], tuple[frozenset, list[Fraction] | None]] = {}
        self.hits = 0

    def decide(self, system: HalfspaceSystem, mask: int) -> list[Fraction] | None:
        region = system.region_system(mask)
        rows = frozenset(_row_key(r) for r in region.rows)
        key = (len(system.arrangement), mask)
        cached = self._store.get(key)
        if cached is not None:
            old_rows, witness = cached
            if witness is None and old_rows <= rows:
                self.hits += 1
                return None
            if witness is not None and region.satisfied_by(witness):
                self.hits += 1
                return witness
        t, x = max_slack(region)
        witness = x if t > 0 else None
        self._store[key] = (rows, witness)
        return witness


class _PreparedSystem:
    """Region rows pre-converted to the solver's number type, built once per verification."""

    def __init__(self, system: HalfspaceSystem):
        self.system = system
        self.dimension = system.dimension
        self.sides = []
        for h in system.arrangement:
            a = [mpq(c.numerator, c.denominator) for c in h.coeffs]
            b = mpq(h.rhs.numerator, h.rhs.denominator)
            self.sides.append(((a, b), ([-v for v in a], -b)))
        self.cone = []
        for r in system.cone:
            coeffs, rhs = r.row().as_greater()
            self.cone.append(([mpq(c.numerator, c.denominator) for c in coeffs], mpq(rhs.numerator, rhs.denominator)))

    def rows(self, mask: int) -> list:
        rows = [pos if mask >> i & 1 else neg for i, (pos, neg) in enumerate(self.sides)]
        rows.extend(self.cone)
        return rows

    def decide(self, mask: int) -> list[Fraction] | None:
        t, x = max_slack_prepared(self.dimension, self.rows(mask))
        return x if t > 0 else None

    def satisfied(self, mask: int, point: list[Fraction]) -> bool:
        """Exact substitution of ``point`` into every region row."""
        if len(point) != self.dimension:
            return False
        p = [mpq(c.numerator, c.denominator) for c in point]
        for a, b in self.rows(mask):
            total = mpq(0)
            for coeff, v in zip(a, p):
                if coeff:
                    total += coeff * v
            if not total > b:
                return False
        return True


def _decide_batch(args) -> list[tuple[int, list[Fraction] | None]]:
    system, masks = args
    prepared = _PreparedSystem(system)
    return [(m, prepared.decide(m)) for m in masks]


def worker_count() -> int:
    try:
        return max(1, int(os.environ.get("ORTHANTGEO_THREADS", "1")))
    except ValueError:
        return 1


def _check_labels(system: HalfspaceSystem, family: SetFamily) -> None:
    labels = [h.label for h in system.arrangement]
    if labels != list(family.universe.labels):
        raise ValueError(f"arrangement labels {labels} differ from universe {list(family.universe.labels)}")


def _report(system: HalfspaceSystem, family: SetFamily, answers: dict[int, list[Fraction] | None], mode: str) -> VerificationReport:
    n = family.n
    prepared = _PreparedSystem(system)
    witnesses = {}
    mismatches = []
    for mask in sorted(answers):
        w = answers[mask]
        sv = SignVector.from_set(mask, n)
        if w is not None:
            if not prepared.satisfied(mask, w):
                raise RuntimeError(f"witness for {sv} failed independent substitution")
            witnesses[sv] = w
        expected = mask in family
        if expected != (w is not None):
            mismatches.append((sv, expected, w is not None))
    for mask in family.members:
        if mask not in answers:
            mismatches.append((SignVector.from_set(mask, n), True, False))
    mismatches.sort(key=lambda m: m[0].entries)
    found = len(witnesses)
    verdict = not mismatches and found == len(family)
    return VerificationReport(verdict, len(family), found, mismatches, witnesses, mode)


def _run(system: HalfspaceSystem, masks: list[int], cache: WitnessCache | None, workers: int | None) -> dict:
    workers = worker_count() if workers is None else workers
    if cache is not None or workers <= 1 or len(masks) < 64:
        if cache is not None:
            return {m: cache.decide(system, m) for m in masks}
        prepared = _PreparedSystem(system)
        return {m: prepared.decide(m) for m in masks}
    chunk = max(1, len(masks) // (workers * 4))
    batches = [(system, masks[i:i + chunk]) for i in range(0, len(masks), chunk)]
    out = {}
    with ProcessPoolExecutor(max_workers=workers) as pool:
        for part in pool.map(_decide_batch, batches):
            out.update(part)
    return out


def verify_exhaustive(
    system: HalfspaceSystem,
    family: SetFamily,
    cache: WitnessCache | None = None,
    workers: int | None = None,
) -> VerificationReport:
    """Decide every one of the 2^n candidate regions and compare with ``family``."""
    _check_labels(system, family)
    n = family.n
    if n > EXHAUSTIVE_CAP:
        raise ValueError(f"exhaustive verification is capped at {EXHAUSTIVE_CAP} elements; use verify_bfs")
    answers = _run(system, list(range(1 << n)), cache, workers)
    return _report(system, family, answers, "exhaustive")


def verify_bfs(
    system: HalfspaceSystem,
    family: SetFamily,
    seed: SignVector,
    cache: WitnessCache | None = None,
) -> VerificationReport:
    """Explore regions from ``seed`` by single sign flips; complete for connected tope graphs."""
    _check_labels(system, family)
    n = family.n
    if len(seed) != n:
        raise ValueError(f"seed has {len(seed)} signs, universe has {n}")
    start = seed.to_set()
    if cache is not None:
        def decide(m: int):
            return cache.decide(system, m)
    else:
        decide = _PreparedSystem(system).decide
    answers = {start: decide(start)}
    if answers[start] is None:
        raise ValueError(f"seed region {seed} is infeasible")
    queue = deque([start])
    while queue:
        cur = queue.popleft()
        for e in range(n):
            nb = cur ^ (1 << e)
            if nb in answers:
                continue
            answers[nb] = decide(nb)
            if answers[nb] is not None:
                queue.append(nb)
    return _report(system, family, answers, "bfs")


def verify_lowdim(system: HalfspaceSystem, family: SetFamily, cache: WitnessCache | None = None) -> VerificationReport:
    """Candidate regions X: on the inner side of H_e for e in X, outer side otherwise, inside x > 0."""
    if system.meta.get("kind") != "lowdim":
        raise ValueError("verify_lowdim expects a system from realize_lowdim")
    report = verify_exhaustive(system, family, cache)
    report.mode = "lowdim"
    return report
