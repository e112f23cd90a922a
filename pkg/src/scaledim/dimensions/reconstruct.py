"""Build small many-valued contexts realising a lattice's extents."""

from __future__ import annotations

from collections.abc import Sequence
from typing import NamedTuple

from ..context import ExtentLattice, is_subset, meet_irreducible_extents, popcount
from ..errors import SpecError
from ..scaling import AttributeDomain, ManyValuedContext, PreScaling, Scale, ScaleKind, build_scale
from .ladders import LadderCover, is_extent_ladder


class Reconstruction(NamedTuple):
    mv: ManyValuedContext
    prescaling: PreScaling
    scales: dict[str, Scale]


def _check_covers(lat: ExtentLattice, families) -> None:
    union = set()
    for fam in families:
        union |= set(fam)
    missing = [e for e in meet_irreducible_extents(lat) if e not in union]
    if missing:
        label = "{" + ",".join(lat.names(missing[0])) + "}"
        raise SpecError(f"meet-irreducible extent {label} is not covered")


def reconstruct_interordinal_mv(lat: ExtentLattice, cover: LadderCover) -> Reconstruction:
    """One interordinally scaled attribute per ladder.

    The values of ``ladder<i>`` are the blocks between consecutive members of
    the ladder's lower chain, i.e. the minimal nonempty intersections of its
    extents, ordered along that chain.  Each object takes the block that
    contains it.
    """
    for ladder in cover.ladders:
        check = is_extent_ladder(lat, ladder.members)
        if not check.ok:
            raise SpecError(f"invalid ladder: {check.violation}")
    _check_covers(lat, (l.members for l in cover.ladders))

    n = lat.context.n_objects
    top = lat.top
    names, columns, domains, scales = [], [], {}, {}
    for k, ladder in enumerate(cover.ladders, start=1):
        name = f"ladder{k}"
        bounds = list(ladder.chain_a) + [top]
        blocks, prev = [], 0
        for b in bounds:
            blocks.append(b & ~prev)
            prev = b
        tokens = tuple(f"b{i}" for i in range(1, len(blocks) + 1))
        column = [None] * n
        for token, block in zip(tokens, blocks):
            for g in range(n):
                if block >> g & 1:
                    column[g] = token
        names.append(name)
        columns.append(column)
        domains[name] = AttributeDomain(tokens, ordered=True)
        scales[name] = build_scale(ScaleKind.INTERORDINAL, tokens)
    rows = tuple(tuple(col[g] for col in columns) for g in range(n))
    mv = ManyValuedContext(lat.context.objects, tuple(names), rows)
    return Reconstruction(mv, PreScaling(domains), scales)


def reconstruct_ordinal_mv(lat: ExtentLattice, chains: Sequence[Sequence[int]]) -> Reconstruction:
    """One ordinally scaled attribute per chain of extents.

    ``chain<i>`` maps an object to the smallest chain member containing it,
    or to the sentinel ``top`` when no member does.
    """
    for chain in chains:
        ordered = sorted(set(chain), key=popcount)
        if any(not is_subset(a, b) for a, b in zip(ordered, ordered[1:])):
            raise SpecError("witness is not a chain")
        if any(e not in lat.index for e in ordered):
            raise SpecError("chain member is not an extent")
    _check_covers(lat, chains)

    n = lat.context.n_objects
    names, columns, domains, scales = [], [], {}, {}
    for k, chain in enumerate(chains, start=1):
        name = f"chain{k}"
        ordered = sorted(set(chain), key=popcount)
        tokens = tuple(f"c{i}" for i in range(1, len(ordered) + 1)) + ("top",)
        column = []
        for g in range(n):
            pos = next((i for i, e in enumerate(ordered) if e >> g & 1), len(ordered))
            column.append(tokens[pos])
        names.append(name)
        columns.append(column)
        domains[name] = AttributeDomain(tokens, ordered=True)
        scales[name] = build_scale(ScaleKind.ORDINAL, tokens)
    rows = tuple(tuple(col[g] for col in columns) for g in range(n))
    mv = ManyValuedContext(lat.context.objects, tuple(names), rows)
    return Reconstruction(mv, PreScaling(domains), scales)
