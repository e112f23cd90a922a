"""Extent ladders and the ordinal / interordinal scaling dimensions."""

from __future__ import annotations

from collections.abc import Iterable, Sequence
from dataclasses import dataclass
from typing import NamedTuple

from ..context import (
    ExtentLattice,
    bits,
    is_atomistic,
    is_subset,
    lectic_key,
    meet_irreducible_extents,
    popcount,
)
from ..errors import SpecError
from .cover import min_set_cover
from .width import poset_width

DEFAULT_NODE_BUDGET = 2_000_000


@dataclass(frozen=True)
class ExtentLadder:
    """A complement-closed family of nonempty extents of width at most two.

    ``chain_a`` runs bottom-up from a minimal member; ``chain_b`` holds the
    complements of ``chain_a`` in the same positions.
    """

    members: frozenset[int]
    chain_a: tuple[int, ...]
    chain_b: tuple[int, ...]

    @classmethod
    def from_chain(cls, chain: Iterable[int], top: int) -> ExtentLadder:
        """Ladder made of a chain of proper nonempty subsets and their complements."""
        chain = sorted(set(chain), key=popcount)
        for a, b in zip(chain, chain[1:]):
            if not is_subset(a, b):
                raise SpecError("ladder generators do not form a chain")
        if any(c == 0 or c == top for c in chain):
            raise SpecError("ladder members must be nonempty proper subsets")
        comps = [top & ~c for c in chain]
        return cls(frozenset(chain) | frozenset(comps), tuple(chain), tuple(comps))

    @classmethod
    def from_members(cls, members: Iterable[int], top: int) -> ExtentLadder:
        members = frozenset(members)
        if not members:
            return cls(members, (), ())
        n = top.bit_length()
        # lectically first among the smallest members is minimal
        base = min(members, key=lambda m: (popcount(m), lectic_key(m, n)))
        chain = [m for m in members if is_subset(base, m)]
        ladder = cls.from_chain(chain, top)
        if ladder.members != members:
            raise SpecError("family is not a union of a chain and its complements")
        return ladder

    def __len__(self):
        return len(self.members)


@dataclass(frozen=True)
class LadderCover:
    ladders: tuple[ExtentLadder, ...]
    covered: tuple[int, ...]

    def __len__(self):
        return len(self.ladders)


class LadderCheck(NamedTuple):
    ok: bool
    violation: str | None = None


def _label(lat: ExtentLattice, mask: int) -> str:
    return "{" + ",".join(lat.names(mask)) + "}"


def is_extent_ladder(lat: ExtentLattice, family: Iterable[int]) -> LadderCheck:
    """Test the ladder conditions, naming the first one that fails."""
    family = set(family)
    top = lat.top
    for a in sorted(family, key=lambda m: lectic_key(m, lat.context.n_objects)):
        if a == 0:
            return LadderCheck(False, "contains the empty set")
        if a not in lat.index:
            return LadderCheck(False, f"{_label(lat, a)} is not an extent")
        if top & ~a not in family:
            return LadderCheck(False, f"complement of {_label(lat, a)} is missing")
    width = poset_width(sorted(family)).width
    if width > 2:
        return LadderCheck(False, f"contains {width} mutually incomparable extents")
    return LadderCheck(True)


class IsdGate(NamedTuple):
    exists: bool
    blocker: int | None
    reason: str | None
    atomistic: bool
    attribute_complements_closed: bool


def attribute_complements_closed(lat: ExtentLattice) -> bool:
    top = lat.top
    return all(top & ~c in lat.index for c in lat.context.column_masks)


def isd_exists(lat: ExtentLattice) -> IsdGate:
    """Whether every meet-irreducible extent can lie in some ladder.

    The atomisticity / complement pair used for derivability is reported
    alongside but does not decide the result.
    """
    top = lat.top
    exists, blocker, reason = True, None, None
    # report blockers in order of their member lists, e.g. {g1} before {g2}
    for e in sorted(meet_irreducible_extents(lat), key=lambda m: tuple(bits(m))):
        if e == 0:
            exists, blocker = False, e
            reason = "meet-irreducible extent {} is empty"
            break
        if top & ~e not in lat.index:
            exists, blocker = False, e
            reason = f"complement of {_label(lat, e)} is not an extent"
            break
    return IsdGate(exists, blocker, reason, is_atomistic(lat.context),
                   attribute_complements_closed(lat))


class OrdinalDimension(NamedTuple):
    dimension: int
    chains: list[tuple[int, ...]]
    antichain: tuple[int, ...]


def ordinal_scaling_dimension(lat: ExtentLattice) -> OrdinalDimension:
    """Width of the meet-irreducible extents, with chain and antichain witnesses."""
    w = poset_width(meet_irreducible_extents(lat))
    return OrdinalDimension(w.width, w.chains, w.antichain)


class IsdBounds(NamedTuple):
    lower: int
    upper: int
    width: int
    witness: LadderCover | None


def isd_bounds(lat: ExtentLattice) -> IsdBounds:
    """``(ceil(w/2), w)`` for ``w`` the width of the meet-irreducibles.

    The upper witness closes each chain of a minimum chain cover under
    complements; it exists only when every meet-irreducible has an extent
    complement.
    """
    mi = meet_irreducible_extents(lat)
    w = poset_width(mi)
    witness = None
    if isd_exists(lat).exists:
        witness = LadderCover(
            tuple(ExtentLadder.from_chain(c, lat.top) for c in w.chains), tuple(mi)
        )
    return IsdBounds(-(-w.width // 2), w.width, w.width, witness)


def _maximal_chains(elements: Sequence[int], budget: int | None):
    """All maximal chains of ``elements`` under strict inclusion."""
    covers = {}
    for x in elements:
        above = [y for y in elements if y != x and is_subset(x, y)]
        covers[x] = [y for y in above if not any(z != y and is_subset(z, y) for z in above)]
    minimal = [x for x in elements if not any(y != x and is_subset(y, x) for y in elements)]
    count = 0
    stack = [(x,) for x in reversed(minimal)]
    while stack:
        chain = stack.pop()
        ups = covers[chain[-1]]
        if not ups:
            count += 1
            if budget is not None and count > budget:
                raise _SearchBudget
            yield chain
            continue
        for y in reversed(ups):
            stack.append(chain + (y,))


class _SearchBudget(Exception):
    pass


def candidate_ladders(lat: ExtentLattice, budget: int | None = None) -> list[ExtentLadder]:
    """Maximal ladders built from meet-irreducibles and their complements.

    Every ladder restricted to this ground set stays a ladder, so these
    candidates lose nothing for covering the meet-irreducibles.
    """
    top = lat.top
    mi = meet_irreducible_extents(lat)
    n = lat.context.n_objects
    ground = sorted(set(mi) | {top & ~e for e in mi}, key=lambda m: lectic_key(m, n))
    seen = set()
    ladders = []
    for chain in _maximal_chains(ground, budget):
        ladder = ExtentLadder.from_chain(chain, top)
        if ladder.members not in seen:
            seen.add(ladder.members)
            ladders.append(ladder)
    return ladders


@dataclass(frozen=True)
class InterordinalDimension:
    defined: bool
    dimension: int | None
    lower: int | None
    upper: int | None
    exact: bool
    cover: LadderCover | None
    gate: IsdGate
    nodes: int = 0

    @property
    def reason(self) -> str | None:
        return self.gate.reason


def interordinal_scaling_dimension(lat: ExtentLattice,
                                   node_budget: int | None = DEFAULT_NODE_BUDGET) -> InterordinalDimension:
    """Smallest number of extent ladders jointly containing all meet-irreducibles.

    Undefined when some meet-irreducible extent is empty or lacks an extent
    complement.  If the search budget runs out the best cover found is
    returned with ``exact=False`` and the ``(lower, upper)`` pair.
    """
    gate = isd_exists(lat)
    if not gate.exists:
        return InterordinalDimension(False, None, None, None, True, None, gate)
    mi = meet_irreducible_extents(lat)
    bounds = isd_bounds(lat)
    if not mi:
        return InterordinalDimension(True, 0, 0, 0, True, LadderCover((), ()), gate)

    try:
        ladders = candidate_ladders(lat, node_budget)
    except _SearchBudget:
        cover = bounds.witness
        return InterordinalDimension(True, None, bounds.lower, bounds.upper, False,
                                     cover, gate, node_budget or 0)

    bit = {e: i for i, e in enumerate(mi)}
    universe = (1 << len(mi)) - 1
    sets = [sum(1 << bit[m] for m in ladder.members if m in bit) for ladder in ladders]
    initial = []
    for w_ladder in bounds.witness.ladders:
        initial.append(next(i for i, l in enumerate(ladders) if w_ladder.members <= l.members))
    result = min_set_cover(universe, sets, lower_bound=bounds.lower,
                           initial=sorted(set(initial)), node_budget=node_budget)
    cover = LadderCover(tuple(ladders[i] for i in result.chosen), tuple(mi))
    if result.exact:
        return InterordinalDimension(True, result.size, result.size, result.size, True,
                                     cover, gate, result.nodes)
    return InterordinalDimension(True, None, result.lower, result.size, False,
                                 cover, gate, result.nodes)
