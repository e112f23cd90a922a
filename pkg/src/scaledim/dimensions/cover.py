"""Exact minimum set cover by branch and bound.

Sets and the universe are bitmasks.  The search is deterministic: candidate
sets are tried by descending new coverage, ties broken by input position.
"""

from __future__ import annotations

from collections.abc import Sequence
from dataclasses import dataclass

from ..context import bits, is_subset, popcount


@dataclass
class CoverResult:
    chosen: list[int]
    exact: bool
    lower: int
    nodes: int

    @property
    def size(self) -> int:
        return len(self.chosen)


class _BudgetExceeded(Exception):
    pass


def prune_dominated(universe: int, sets: Sequence[int]) -> list[int]:
    """Indices of sets not strictly dominated (restricted to the universe).

    Among equal restrictions the first index is kept.
    """
    restricted = [s & universe for s in sets]
    keep = []
    for i, s in enumerate(restricted):
        if s == 0:
            continue
        dominated = False
        for j, t in enumerate(restricted):
            if j == i:
                continue
            if is_subset(s, t) and (s != t or j < i):
                dominated = True
                break
        if not dominated:
            keep.append(i)
    return keep


def min_set_cover(universe: int, sets: Sequence[int], *, lower_bound: int = 0,
                  initial: Sequence[int] | None = None,
                  node_budget: int | None = None) -> CoverResult:
    """Smallest collection of ``sets`` whose union contains ``universe``.

    ``initial`` is a known feasible cover (indices) used as the incumbent.
    ``lower_bound`` lets the search stop as soon as a cover of that size is
    found.  When ``node_budget`` runs out the incumbent is returned with
    ``exact=False``.  Raises ``ValueError`` if no cover exists.
    """
    union = 0
    for s in sets:
        union |= s
    if not is_subset(universe, union):
        raise ValueError("the sets do not cover the universe")
    if universe == 0:
        return CoverResult([], True, 0, 0)

    candidates = prune_dominated(universe, sets)
    restricted = {i: sets[i] & universe for i in candidates}
    containing = {e: [i for i in candidates if restricted[i] >> e & 1] for e in bits(universe)}

    best: list[int] = list(initial) if initial is not None else _greedy(universe, restricted)
    lower_bound = max(lower_bound, 1)
    nodes = 0

    def search(uncovered: int, chosen: list[int]):
        nonlocal best, nodes
        nodes += 1
        if node_budget is not None and nodes > node_budget:
            raise _BudgetExceeded
        if uncovered == 0:
            if len(chosen) < len(best):
                best = list(chosen)
            return
        largest = max(popcount(restricted[i] & uncovered) for i in candidates)
        if len(chosen) + -(-popcount(uncovered) // largest) >= len(best):
            return
        pivot = min(bits(uncovered), key=lambda e: (len(containing[e]), e))
        options = sorted(containing[pivot], key=lambda i: (-popcount(restricted[i] & uncovered), i))
        for i in options:
            chosen.append(i)
            search(uncovered & ~restricted[i], chosen)
            chosen.pop()
            if len(best) <= lower_bound:
                return

    exact = True
    if len(best) > lower_bound:
        try:
            search(universe, [])
        except _BudgetExceeded:
            exact = False
    return CoverResult(sorted(best), exact, len(best) if exact else lower_bound, nodes)


def _greedy(universe: int, restricted: dict[int, int]) -> list[int]:
    chosen = []
    uncovered = universe
    while uncovered:
        i = max(restricted, key=lambda k: (popcount(restricted[k] & uncovered), -k))
        chosen.append(i)
        uncovered &= ~restricted[i]
    return chosen
