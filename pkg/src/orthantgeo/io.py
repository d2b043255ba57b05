"""JSON formats for families, rooted circuits, orders and trees."""

from __future__ import annotations

import json
import sys
from typing import Any, Iterable, Sequence

from .geometry import RootedCircuit
from .sets import SetFamily, Universe


class InputError(ValueError):
    """Malformed or inconsistent user input."""


def read_json(source: str) -> Any:
    """Parse JSON from a path, or from stdin when ``source`` is ``-``."""
    try:
        if source == "-":
            text = sys.stdin.read()
        else:
            with open(source, encoding="utf-8") as fh:
                text = fh.read()
    except OSError as exc:
        raise InputError(f"cannot read {source}: {exc}") from exc
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise InputError(f"malformed JSON in {source}: {exc}") from exc


def family_from_json(data: Any) -> SetFamily:
    if not isinstance(data, dict) or "universe" not in data or "sets" not in data:
        raise InputError('family JSON needs "universe" and "sets" keys')
    labels = data["universe"]
    if not isinstance(labels, list) or not all(isinstance(x, (str, int)) for x in labels):
        raise InputError('"universe" must be a list of labels')
    try:
        universe = Universe(tuple(str(x) for x in labels))
    except ValueError as exc:
        raise InputError(str(exc)) from exc
    sets = data["sets"]
    if not isinstance(sets, list):
        raise InputError('"sets" must be a list of label lists')
    masks = []
    for s in sets:
        if not isinstance(s, list):
            raise InputError(f"set entry {s!r} is not a list")
        if len(set(map(str, s))) != len(s):
            raise InputError(f"set {s!r} repeats a label")
        try:
            masks.append(universe.mask(str(x) for x in s))
        except ValueError as exc:
            raise InputError(str(exc)) from exc
    if len(set(masks)) != len(masks):
        raise InputError("family lists the same set twice")
    return SetFamily(universe, masks)


def family_to_json(family: SetFamily) -> dict:
    return {"universe": list(family.universe.labels), "sets": [family.universe.names(m) for m in family.members]}


def circuits_to_json(universe: Universe, circuits: Iterable[RootedCircuit]) -> list[dict]:
    return [{"stem": universe.names(c.stem), "root": universe.labels[c.root]} for c in circuits]


def circuits_from_json(universe: Universe, data: Any) -> list[RootedCircuit]:
    if not isinstance(data, list):
        raise InputError("rooted circuits must be a JSON list")
    out = []
    try:
        for entry in data:
            stem = universe.mask(str(x) for x in entry["stem"])
            out.append(RootedCircuit(stem, universe.index(str(entry["root"]))))
    except (KeyError, TypeError, ValueError) as exc:
        raise InputError(f"bad rooted circuit entry: {exc}") from exc
    return out


def order_to_json(universe: Universe, order: Sequence[int]) -> list[str]:
    return [universe.labels[e] for e in order]


def order_from_json(universe: Universe, data: Any) -> tuple[int, ...]:
    if not isinstance(data, list):
        raise InputError("an order must be a list of labels")
    try:
        order = tuple(universe.index(str(x)) for x in data)
    except ValueError as exc:
        raise InputError(str(exc)) from exc
    if sorted(order) != list(range(len(universe))):
        raise InputError("an order must list every label exactly once")
    return order


def sets_to_json(universe: Universe, masks: Iterable[int]) -> list[list[str]]:
    return [universe.names(m) for m in masks]


def tree_from_json(data: Any) -> dict:
    """Adjacency ``{"vertex": [neighbours]}`` or edge list ``{"edges": [[u, v], ...]}``."""
    if isinstance(data, dict) and "edges" in data:
        adj: dict = {}
        for edge in data["edges"]:
            if not isinstance(edge, list) or len(edge) != 2:
                raise InputError(f"bad edge {edge!r}")
            u, v = (str(x) for x in edge)
            adj.setdefault(u, []).append(v)
            adj.setdefault(v, []).append(u)
        for v in data.get("vertices", []):
            adj.setdefault(str(v), [])
        return adj
    if isinstance(data, dict):
        return {str(k): [str(x) for x in v] for k, v in data.items()}
    raise InputError("tree JSON must be an adjacency object or {\"edges\": [...]}")
