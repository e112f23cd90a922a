"""Ferrers dimension of a context, i.e. the order dimension of its lattice.

A Ferrers relation has row sets that are totally ordered by inclusion.  The
Ferrers dimension is the least number of Ferrers relations contained in the
non-incidence whose union is the whole non-incidence.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from ..context import FormalContext, bits, popcount
from .cover import min_set_cover

DEFAULT_MAX_CELLS = 48
DEFAULT_NODE_BUDGET = 2_000_000


@dataclass(frozen=True)
class FerrersResult:
    exact: bool
    lower: int
    upper: int
    relations: tuple[frozenset[tuple[int, int]], ...] = field(default=())
    nodes: int = 0
    reason: str | None = None

    @property
    def dimension(self) -> int | None:
        return self.lower if self.exact else None


def _non_incidence_rows(ctx: FormalContext) -> list[int]:
    return [ctx.all_attributes & ~r for r in ctx.row_masks]


def is_ferrers(rows: list[int]) -> bool:
    """True iff the nonempty row sets form a chain under inclusion."""
    ordered = sorted(rows, key=popcount)
    return all(a & ~b == 0 for a, b in zip(ordered, ordered[1:]))


def maximal_ferrers_relations(rows: list[int]) -> list[tuple[int, ...]]:
    """Candidate maximal Ferrers subrelations of ``rows``.

    Each is given row-wise.  Every maximal one arises from some ordering of
    the rows by taking running intersections; dominated relations may also
    appear and are left to the caller.
    """
    n = len(rows)
    memo: dict[tuple[int, int], set[tuple[int, ...]]] = {}

    def suffixes(used: int, cur: int) -> set[tuple[int, ...]]:
        key = (used, cur)
        if key in memo:
            return memo[key]
        out: set[tuple[int, ...]] = set()
        free = [g for g in range(n) if not used >> g & 1]
        if cur == 0 or not free:
            out.add((0,) * n)
        else:
            for g in free:
                nxt = cur & rows[g]
                for rest in suffixes(used | 1 << g, nxt):
                    out.add(rest[:g] + (nxt,) + rest[g + 1:])
        memo[key] = out
        return out

    full = 0
    for r in rows:
        full |= r
    return sorted(suffixes(0, full))


def _cells_mask(relation: tuple[int, ...], width: int) -> int:
    mask = 0
    for g, r in enumerate(relation):
        mask |= r << (g * width)
    return mask


def _crown_bound(ctx: FormalContext) -> int:
    """Greedy clique of pairwise incompatible non-incidences."""
    rows = ctx.row_masks
    cells = [(g, m) for g in range(ctx.n_objects) for m in bits(ctx.all_attributes & ~rows[g])]

    def clash(a, b):
        (g, m), (h, n) = a, b
        return bool(rows[g] >> n & 1) and bool(rows[h] >> m & 1)

    degree = {c: sum(clash(c, d) for d in cells) for c in cells}
    clique: list[tuple[int, int]] = []
    for c in sorted(cells, key=lambda c: (-degree[c], c)):
        if all(clash(c, d) for d in clique):
            clique.append(c)
    return len(clique)


def _greedy_cover(rows: list[int]) -> list[tuple[int, ...]]:
    n = len(rows)
    uncovered = list(rows)
    relations = []
    while any(uncovered):
        first = max(range(n), key=lambda g: (popcount(uncovered[g]), -g))
        rel = [0] * n
        rel[first] = cur = rows[first]
        used = {first}
        while True:
            best, gain = None, 0
            for g in range(n):
                if g in used:
                    continue
                k = popcount(cur & rows[g] & uncovered[g])
                if k > gain:
                    best, gain = g, k
            if best is None:
                break
            cur &= rows[best]
            rel[best] = cur
            used.add(best)
        for g in range(n):
            uncovered[g] &= ~rel[g]
        relations.append(tuple(rel))
    return relations


def _greedy_witness(ctx: FormalContext) -> tuple[frozenset[tuple[int, int]], ...]:
    """Greedy cover on both orientations; the smaller one wins."""
    direct = tuple(_as_pairs(r, False) for r in _greedy_cover(_non_incidence_rows(ctx)))
    flipped = tuple(
        _as_pairs(r, True) for r in _greedy_cover(_non_incidence_rows(ctx.transpose()))
    )
    return min(direct, flipped, key=len)


def _as_pairs(relation: tuple[int, ...], transposed: bool) -> frozenset[tuple[int, int]]:
    pairs = set()
    for g, r in enumerate(relation):
        for m in bits(r):
            pairs.add((m, g) if transposed else (g, m))
    return frozenset(pairs)


def ferrers_order_dimension(ctx: FormalContext, max_cells: int = DEFAULT_MAX_CELLS,
                            node_budget: int | None = DEFAULT_NODE_BUDGET) -> FerrersResult:
    """Exact Ferrers dimension for contexts with at most ``max_cells`` cells.

    Larger contexts, or an exhausted ``node_budget``, yield ``exact=False``
    with a lower bound from a crown of pairwise incompatible non-incidences
    and an upper bound from a greedy cover.  Witness relations are sets of
    ``(object index, attribute index)`` pairs.
    """
    transposed = ctx.n_objects > ctx.n_attributes
    work = ctx.transpose() if transposed else ctx
    rows = _non_incidence_rows(work)
    if not any(rows):
        return FerrersResult(True, 0, 0)
    lower = _crown_bound(work)

    if ctx.n_objects * ctx.n_attributes > max_cells:
        greedy = _greedy_witness(ctx)
        return FerrersResult(False, lower, len(greedy), greedy,
                             reason=f"{ctx.n_objects * ctx.n_attributes} cells exceed max_cells={max_cells}")

    width = work.n_attributes
    relations = maximal_ferrers_relations(rows)
    universe = _cells_mask(tuple(rows), width)
    result = min_set_cover(universe, [_cells_mask(r, width) for r in relations],
                           lower_bound=lower, node_budget=node_budget)
    witness = tuple(_as_pairs(relations[i], transposed) for i in result.chosen)
    if result.exact:
        return FerrersResult(True, result.size, result.size, witness, result.nodes)
    return FerrersResult(False, max(lower, result.lower), result.size, witness, result.nodes,
                         reason="node budget exhausted")
