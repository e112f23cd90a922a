"""Width of a family of sets ordered by inclusion (Dilworth / Koenig)."""

from __future__ import annotations

from collections.abc import Sequence
from typing import NamedTuple

import networkx as nx
from networkx.algorithms import bipartite

from ..context import is_subset
from ..errors import StructureError


class Width(NamedTuple):
    width: int
    chains: list[tuple[int, ...]]
    antichain: tuple[int, ...]


def poset_width(elements: Sequence[int]) -> Width:
    """Maximum antichain and minimum chain cover of ``elements`` under ``⊆``.

    Chains are listed bottom-up.  The two witnesses always have equal size;
    a mismatch would mean the matching is wrong and raises ``RuntimeError``.
    """
    elements = list(elements)
    if len(set(elements)) != len(elements):
        raise StructureError("poset elements must be distinct")
    n = len(elements)
    if n == 0:
        return Width(0, [], ())

    graph = nx.Graph()
    left = [("L", i) for i in range(n)]
    graph.add_nodes_from(left, bipartite=0)
    graph.add_nodes_from((("R", i) for i in range(n)), bipartite=1)
    for i, a in enumerate(elements):
        for j, b in enumerate(elements):
            if i != j and is_subset(a, b):
                graph.add_edge(("L", i), ("R", j))

    matching = bipartite.hopcroft_karp_matching(graph, top_nodes=left)
    successor = {u[1]: v[1] for u, v in matching.items() if u[0] == "L"}
    has_pred = set(successor.values())
    chains = []
    for i in range(n):
        if i in has_pred:
            continue
        chain = [i]
        while chain[-1] in successor:
            chain.append(successor[chain[-1]])
        chains.append(tuple(elements[k] for k in chain))

    cover = bipartite.to_vertex_cover(graph, matching, top_nodes=left)
    antichain = tuple(
        elements[i] for i in range(n) if ("L", i) not in cover and ("R", i) not in cover
    )
    if len(antichain) != len(chains):
        raise RuntimeError(
            f"Dilworth certificate mismatch: antichain {len(antichain)} vs {len(chains)} chains"
        )
    return Width(len(chains), chains, antichain)
