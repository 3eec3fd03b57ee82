"""The containment poset of Dyck diagrams of a lattice and its exports.

Despite the traditional name "tree", the covering relation has diamonds, so
the full Hasse diagram is kept.  A branch is the down-set of one node.
"""
from __future__ import annotations

import json
import os
from dataclasses import dataclass
from typing import Optional

from .christoffel import christoffel_diagram
from .core import Diagram, Lattice
from .errors import CapExceeded, NotANode
from .oracle import count_contained

DEFAULT_NODE_CAP = 100_000


def node_cap() -> int:
    return int(os.environ.get("FERRERS_NODE_CAP", DEFAULT_NODE_CAP))


def _graded_key(d: Diagram):
    return (d.cells, d.rows)


@dataclass(frozen=True)
class PosetGraph:
    """Nodes in graded order (cell count, then rows); edges as ``(child, parent)``."""

    nodes: tuple[Diagram, ...]
    edges: tuple[tuple[Diagram, Diagram], ...]

    def __len__(self):
        return len(self.nodes)

    def __contains__(self, d):
        return d in set(self.nodes)

    @property
    def top(self) -> Diagram:
        return self.nodes[-1]

    def children(self, d: Diagram) -> list[Diagram]:
        return [c for c, p in self.edges if p == d]

    def parents(self, d: Diagram) -> list[Diagram]:
        return [p for c, p in self.edges if c == d]


def _down_set(root: Diagram) -> list[Diagram]:
    seen = {root}
    stack = [root]
    while stack:
        d = stack.pop()
        for child in _children(d):
            if child not in seen:
                seen.add(child)
                stack.append(child)
    return sorted(seen, key=_graded_key)


def _children(d: Diagram) -> list[Diagram]:
    rows = d.rows
    out = []
    for i in range(len(rows)):
        below = rows[i + 1] if i + 1 < len(rows) else 0
        if rows[i] > below:
            out.append(Diagram(rows[:i] + (rows[i] - 1,) + rows[i + 1 :]))
    return out


def _poset_below(root: Diagram) -> PosetGraph:
    nodes = _down_set(root)
    edges = tuple((child, parent) for parent in nodes for child in _children(parent))
    edges = tuple(sorted(edges, key=lambda e: (_graded_key(e[1]), _graded_key(e[0]))))
    return PosetGraph(tuple(nodes), edges)


def build_poset(lat: Lattice, cap: Optional[int] = None) -> PosetGraph:
    """All Dyck diagrams of ``lat`` ordered by inclusion, Christoffel diagram on top."""
    cap = node_cap() if cap is None else cap
    root = christoffel_diagram(lat)
    size = count_contained(root)
    if size > cap:
        raise CapExceeded(f"{lat.a}x{lat.b} poset has {size} nodes, cap is {cap}")
    return _poset_below(root)


def branch(g: PosetGraph, d: Diagram) -> PosetGraph:
    """Sub-poset induced on the nodes of ``g`` contained in ``d``."""
    if d not in g:
        raise NotANode(f"{d} is not a node of the poset")
    keep = [n for n in g.nodes if d.contains(n)]
    kept = set(keep)
    edges = tuple((c, p) for c, p in g.edges if c in kept and p in kept)
    return PosetGraph(tuple(keep), edges)


def to_dot(g: PosetGraph, highlight: Optional[Diagram] = None, name: str = "kreweras") -> str:
    red = set(branch(g, highlight).nodes) if highlight is not None else set()
    index = {d: i for i, d in enumerate(g.nodes)}
    lines = [f"digraph {name} {{"]
    for d, i in index.items():
        attrs = f'label="{d.code()}"'
        if d in red:
            attrs += ", color=red"
        lines.append(f"  n{i} [{attrs}];")
    for child, parent in g.edges:
        lines.append(f"  n{index[parent]} -> n{index[child]};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def to_json(g: PosetGraph) -> str:
    index = {d: i for i, d in enumerate(g.nodes)}
    return json.dumps(
        {
            "nodes": [d.code() for d in g.nodes],
            "edges": [[index[p], index[c]] for c, p in g.edges],
        }
    )
