"""Machine-readable analysis reports.

Every witness is written as lists of object names so that it can be fed
back into the library and checked; :func:`verify_report` does exactly that.
"""

from __future__ import annotations

import json
import time

from .context import FormalContext, all_extents, is_subset, meet_irreducible_extents
from .dimensions import DimensionReport, analyze, is_extent_ladder
from .dimensions.ferrers import DEFAULT_MAX_CELLS, is_ferrers
from .dimensions.ladders import DEFAULT_NODE_BUDGET

SCHEMA_VERSION = "1"


def _names(ctx: FormalContext, mask: int) -> list[str]:
    return list(ctx.object_names(mask))


def build_report(ctx: FormalContext, *, node_budget: int | None = DEFAULT_NODE_BUDGET,
                 max_cells: int = DEFAULT_MAX_CELLS, timing: bool = False) -> dict:
    start = time.perf_counter()
    rep = analyze(ctx, node_budget=node_budget, max_cells=max_cells)
    elapsed = time.perf_counter() - start
    out = report_dict(rep)
    if timing:
        out["timing_seconds"] = round(elapsed, 6)
    return out


def report_dict(rep: DimensionReport) -> dict:
    ctx = rep.lattice.context
    gate = rep.isd.gate
    isd = rep.isd
    od = rep.order_dimension
    ladders = []
    if isd.cover is not None:
        for ladder in isd.cover.ladders:
            ladders.append({
                "chain_a": [_names(ctx, e) for e in ladder.chain_a],
                "chain_b": [_names(ctx, e) for e in ladder.chain_b],
            })
    bound_witness = None
    if rep.bounds.witness is not None:
        bound_witness = [
            [_names(ctx, e) for e in ladder.chain_a] for ladder in rep.bounds.witness.ladders
        ]
    return {
        "schema_version": SCHEMA_VERSION,
        "context": {
            "objects": ctx.n_objects,
            "attributes": ctx.n_attributes,
            "incidences": ctx.n_incidences,
            "concepts": len(rep.lattice),
            "meet_irreducibles": [_names(ctx, e) for e in rep.meet_irreducibles],
        },
        "derivability": {
            "atomistic": gate.atomistic,
            "attribute_complements_closed": gate.attribute_complements_closed,
            "derivable_from_interordinal": gate.atomistic and gate.attribute_complements_closed,
        },
        "width": rep.width,
        "osd": {
            "value": rep.osd.dimension,
            "chains": [[_names(ctx, e) for e in chain] for chain in rep.osd.chains],
            "antichain": [_names(ctx, e) for e in rep.osd.antichain],
        },
        "isd": {
            "defined": isd.defined,
            "value": isd.dimension,
            "exact": isd.exact,
            "lower": isd.lower,
            "upper": isd.upper,
            "reason": isd.reason,
            "ladders": ladders,
            "search_nodes": isd.nodes,
        },
        "isd_bounds": {
            "lower": rep.bounds.lower,
            "upper": rep.bounds.upper,
            "witness_chains": bound_witness,
        },
        "order_dimension": {
            "value": od.dimension,
            "exact": od.exact,
            "lower": od.lower,
            "upper": od.upper,
            "reason": od.reason,
            "ferrers_relations": [
                sorted([ctx.objects[g], ctx.attributes[m]] for g, m in rel)
                for rel in od.relations
            ],
            "search_nodes": od.nodes,
        },
    }


def dumps(report: dict) -> str:
    return json.dumps(report, indent=2, ensure_ascii=False) + "\n"


def verify_report(ctx: FormalContext, report: dict) -> list[str]:
    """Re-check every witness in ``report`` against ``ctx``.

    Returns a list of problems; empty means the report is consistent.
    """
    problems = []
    lat = all_extents(ctx)
    mi = set(meet_irreducible_extents(lat))

    def mask(names):
        return ctx.object_mask(names)

    if report["context"]["concepts"] != len(lat):
        problems.append("concept count differs")

    chains = [[mask(e) for e in c] for c in report["osd"]["chains"]]
    for c in chains:
        if any(not is_subset(a, b) or a == b for a, b in zip(c, c[1:])):
            problems.append("osd witness is not a chain")
    members = set().union(*chains) if chains else set()
    if members != mi:
        problems.append("osd chains do not cover the meet-irreducibles exactly")
    if len(chains) != report["osd"]["value"]:
        problems.append("osd value differs from the number of chains")
    antichain = [mask(e) for e in report["osd"]["antichain"]]
    if len(antichain) != len(chains) or any(
        a != b and is_subset(a, b) for a in antichain for b in antichain
    ):
        problems.append("osd antichain certificate is invalid")

    isd = report["isd"]
    if isd["defined"]:
        covered = set()
        for ladder in isd["ladders"]:
            members = {mask(e) for e in ladder["chain_a"]} | {mask(e) for e in ladder["chain_b"]}
            check = is_extent_ladder(lat, members)
            if not check.ok:
                problems.append(f"ladder invalid: {check.violation}")
            covered |= members
        if not mi <= covered:
            problems.append("ladders do not cover all meet-irreducibles")
        if isd["exact"] and len(isd["ladders"]) != isd["value"]:
            problems.append("isd value differs from the number of ladders")

    non_inc = {(g, m) for g in range(ctx.n_objects) for m in range(ctx.n_attributes)
               if not ctx.incidence[g][m]}
    union = set()
    obj_index = {g: i for i, g in enumerate(ctx.objects)}
    att_index = {m: i for i, m in enumerate(ctx.attributes)}
    for rel in report["order_dimension"]["ferrers_relations"]:
        cells = {(obj_index[g], att_index[m]) for g, m in rel}
        if not cells <= non_inc:
            problems.append("Ferrers relation meets the incidence")
        rows = [sum(1 << m for g2, m in cells if g2 == g) for g in range(ctx.n_objects)]
        if not is_ferrers(rows):
            problems.append("relation is not Ferrers")
        union |= cells
    if union != non_inc:
        problems.append("Ferrers relations do not cover the non-incidence")
    return problems
