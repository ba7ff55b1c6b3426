"""JSON and DOT formats for finite lattices."""
from __future__ import annotations

import json

from ..errors import ParseError
from .lattice import FiniteLattice, lattice_from_leq


def lattice_to_dict(L: FiniteLattice) -> dict:
    """{"elements": labels, "leq": strict pairs [i, j] meaning i < j}."""
    return {"elements": list(L.labels), "leq": [[a, b] for a, b in L.strict_pairs()]}


def lattice_from_dict(data) -> FiniteLattice:
    if not isinstance(data, dict) or "elements" not in data or "leq" not in data:
        raise ParseError('lattice JSON needs "elements" and "leq"')
    elements, leq = data["elements"], data["leq"]
    if not isinstance(elements, list) or not isinstance(leq, list):
        raise ParseError('"elements" and "leq" must be arrays')
    labels = [str(e) for e in elements]
    if len(set(labels)) != len(labels):
        raise ParseError("duplicate element labels")
    index = {lab: i for i, lab in enumerate(labels)}

    def resolve(v) -> int:
        if isinstance(v, bool):
            raise ParseError(f"bad element reference {v!r}")
        if isinstance(v, int):
            if not 0 <= v < len(labels):
                raise ParseError(f"element index {v} out of range")
            return v
        if isinstance(v, str) and v in index:
            return index[v]
        raise ParseError(f"unknown element {v!r}")

    pairs = []
    for p in leq:
        if not isinstance(p, list) or len(p) != 2:
            raise ParseError(f"leq entry {p!r} is not a pair")
        pairs.append((resolve(p[0]), resolve(p[1])))
    return lattice_from_leq(labels, pairs)


def lattice_to_json(L: FiniteLattice) -> str:
    return json.dumps(lattice_to_dict(L), sort_keys=True)


def lattice_from_json(text: str) -> FiniteLattice:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"malformed JSON: {exc}") from exc
    return lattice_from_dict(data)


def _quote(s: str) -> str:
    return '"' + s.replace("\\", "\\\\").replace('"', '\\"') + '"'


def lattice_to_dot(L: FiniteLattice, name: str = "hasse") -> str:
    """Hasse diagram, bottom at the bottom. Atoms are boxes, co-atoms are filled."""
    atoms, coatoms = L.atoms(), L.coatoms()
    lines = [f"digraph {name} {{", "  rankdir=BT;", "  node [shape=ellipse];"]
    for i, lab in enumerate(L.labels):
        attrs = [f"label={_quote(lab)}"]
        if i in atoms:
            attrs.append("shape=box")
        if i in coatoms:
            attrs.append('style=filled, fillcolor="lightgrey"')
        lines.append(f"  n{i} [{', '.join(attrs)}];")
    for a, b in L.covers():
        lines.append(f"  n{a} -> n{b};")
    lines.append("}")
    return "\n".join(lines) + "\n"
