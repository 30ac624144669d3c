"""Kashiwara operators on charged multipartitions and the resulting crystal graph.

For a residue q, the addable (A) and removable (R) q-nodes are listed in a
fixed order, every adjacent "R A" pair is cancelled repeatedly, and what is
left reads A...A R...R.  f̃_q adds the rightmost surviving A and ẽ_q removes
the leftmost surviving R.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field

from .fock import FockSpaceParams
from .partitions import (
    Multipartition,
    Node,
    add_node,
    addable_removable,
    format_multipartition,
    multipartitions,
    multisize,
    remove_node,
)

CONTENT_FIRST = "content-then-component"
COMPONENT_FIRST = "component-then-content"
ORDERS = (CONTENT_FIRST, COMPONENT_FIRST)


ORDER_KEYS = {
    CONTENT_FIRST: lambda p, content: (content, p),
    COMPONENT_FIRST: lambda p, content: (p, content),
}


def node_key(node: Node, charge, order: str):
    """Sort key of a node: charged content j - i + s_p and component p."""
    try:
        key = ORDER_KEYS[order]
    except KeyError:
        raise ValueError(f"unknown node order {order!r}") from None
    p, i, j = node
    return key(p, charge[p - 1] + j - i)


def signature(mp: Multipartition, params: FockSpaceParams, q: int, order: str = CONTENT_FIRST):
    """Ordered word of ("A"|"R", node) for residue q."""
    addable, removable = addable_removable(mp, params.charge, params.m, q)
    word = [("A", x) for x in addable] + [("R", x) for x in removable]
    word.sort(key=lambda t: node_key(t[1], params.charge, order))
    return word


def reduced_signature(word):
    """Surviving (A list, R list) after cancelling every R followed by an A."""
    pending_r: list = []
    free_a: list = []
    for kind, node in word:
        if kind == "R":
            pending_r.append(node)
        elif pending_r:
            pending_r.pop()
        else:
            free_a.append(node)
    return free_a, pending_r


def tilde_f(q: int, mp: Multipartition, params: FockSpaceParams, order: str = CONTENT_FIRST):
    free_a, _ = reduced_signature(signature(mp, params, q, order))
    if not free_a:
        return None
    return add_node(mp, free_a[-1])


def tilde_e(q: int, mp: Multipartition, params: FockSpaceParams, order: str = CONTENT_FIRST):
    _, free_r = reduced_signature(signature(mp, params, q, order))
    if not free_r:
        return None
    return remove_node(mp, free_r[0])


def epsilon_phi(q: int, mp: Multipartition, params: FockSpaceParams, order: str = CONTENT_FIRST):
    """Lengths of the ẽ_q and f̃_q strings through ``mp`` (f̃ unbounded by degree)."""
    free_a, free_r = reduced_signature(signature(mp, params, q, order))
    return len(free_r), len(free_a)


@dataclass
class CrystalGraph:
    params: FockSpaceParams
    order: str
    layers: list = field(default_factory=list)
    arrows: list = field(default_factory=list)
    highest: dict = field(default_factory=dict)
    depth: dict = field(default_factory=dict)

    def vertices(self):
        return [mp for layer in self.layers for mp in layer]

    def highest_weight_vertices(self, n: int) -> list:
        return [mp for mp in self.layers[n] if self.highest[mp] == mp]

    def to_json(self) -> dict:
        return {
            "params": _params_json(self.params, self.order),
            "vertices": [
                {
                    "id": format_multipartition(mp),
                    "degree": multisize(mp),
                    "depth": self.depth[mp],
                    "component": format_multipartition(self.highest[mp]),
                }
                for mp in self.vertices()
            ],
            "arrows": [
                [format_multipartition(a), q, format_multipartition(b)] for a, q, b in self.arrows
            ],
        }

    def to_dot(self) -> str:
        lines = ["digraph crystal {"]
        for mp in self.vertices():
            lines.append(f'  "{format_multipartition(mp)}" [depth={self.depth[mp]}];')
        for a, q, b in self.arrows:
            lines.append(
                f'  "{format_multipartition(a)}" -> "{format_multipartition(b)}" [label="{q}"];'
            )
        lines.append("}")
        return "\n".join(lines) + "\n"


def _params_json(params: FockSpaceParams, order: str) -> dict:
    return {
        "m": params.m,
        "ell": params.ell,
        "charge": list(params.charge),
        "max_degree": params.bound,
        "crystal_order": order,
    }


def build_graph(params: FockSpaceParams, order: str = CONTENT_FIRST) -> CrystalGraph:
    if order not in ORDER_KEYS:
        raise ValueError(f"unknown node order {order!r}")
    g = CrystalGraph(params, order)
    for n in range(params.bound + 1):
        layer = multipartitions(n, params.ell)
        g.layers.append(layer)
        for mp in layer:
            below = None
            for q in range(params.m):
                lower = tilde_e(q, mp, params, order)
                if lower is not None:
                    g.arrows.append((lower, q, mp))
                    if below is None:
                        below = lower
            if below is None:
                g.highest[mp] = mp
                g.depth[mp] = 0
            else:
                g.highest[mp] = g.highest[below]
                g.depth[mp] = g.depth[below] + 1
    return g


def depth_census(g: CrystalGraph, n: int) -> dict:
    if n < 0 or n >= len(g.layers):
        raise ValueError(f"degree {n} outside the graph")
    out: dict = {}
    for mp in g.layers[n]:
        out[g.depth[mp]] = out.get(g.depth[mp], 0) + 1
    return dict(sorted(out.items()))


def graph_json(g: CrystalGraph) -> str:
    return json.dumps(g.to_json(), sort_keys=True)
