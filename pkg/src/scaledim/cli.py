"""Command line interface.

Exit codes: 0 success, 1 when a queried predicate is false or a dimension is
undefined, 2 for usage and input errors.  Results go to stdout (or ``-o``),
diagnostics to stderr.
"""

from __future__ import annotations

import argparse
import json
import sys
from importlib import resources
from pathlib import Path

from . import formats, reports
from .context import all_extents, meet_irreducible_extents
from .dimensions import (
    ferrers_order_dimension,
    interordinal_scaling_dimension,
    isd_bounds,
    isd_exists,
    ordinal_scaling_dimension,
    reconstruct_interordinal_mv,
    reconstruct_ordinal_mv,
)
from .dimensions.ferrers import DEFAULT_MAX_CELLS
from .dimensions.ladders import DEFAULT_NODE_BUDGET
from .errors import ScaledimError
from .measures import ScaleMeasure, is_full_scale_measure, is_scale_measure, is_view, make_view
from .scaling import ScaleKind, plain_scaling, scales_for

BUNDLED = ("drive.cxt", "diag3.cxt", "fig2.csv", "fig2-scaling.json")


class _Failure(Exception):
    """A queried predicate came out false; message goes to stderr, exit 1."""


def read_input(path: str) -> bytes:
    """Read ``path``; a missing path naming a bundled dataset reads that."""
    p = Path(path)
    if not p.exists() and p.name in BUNDLED and str(p) == p.name:
        return resources.files("scaledim.data").joinpath(p.name).read_bytes()
    return p.read_bytes()


def _load_cxt(path):
    return formats.parse_cxt(read_input(path))


def _emit(args, data: bytes | str):
    if isinstance(data, str):
        data = data.encode("utf-8")
    if args.output:
        Path(args.output).write_bytes(data)
    else:
        sys.stdout.buffer.write(data)
        sys.stdout.flush()


def _json(obj) -> str:
    return json.dumps(obj, indent=2, ensure_ascii=False) + "\n"


def _fmt(ctx, mask):
    return formats.format_set(ctx, mask)


def cmd_concepts(args):
    ctx = _load_cxt(args.context)
    lat = all_extents(ctx)
    if args.json:
        items = [{"extent": list(ctx.object_names(e)),
                  "intent": list(ctx.attribute_names(lat.intent_of(e)))} for e in lat]
        return _emit(args, _json(items))
    lines = [f"{_fmt(ctx, e)} : {formats.format_attrs(ctx, lat.intent_of(e))}" for e in lat]
    _emit(args, "\n".join(lines) + "\n")


def cmd_irreducibles(args):
    ctx = _load_cxt(args.context)
    mi = meet_irreducible_extents(all_extents(ctx))
    if args.json:
        return _emit(args, _json([list(ctx.object_names(e)) for e in mi]))
    _emit(args, "".join(_fmt(ctx, e) + "\n" for e in mi))


def cmd_osd(args):
    ctx = _load_cxt(args.context)
    res = ordinal_scaling_dimension(all_extents(ctx))
    chains = [[list(ctx.object_names(e)) for e in c] for c in res.chains]
    if args.json:
        return _emit(args, _json({"osd": res.dimension, "chains": chains}))
    out = [f"OSD = {res.dimension}"]
    if args.witness:
        out += ["  chain: " + " < ".join(_fmt(ctx, e) for e in c) for c in res.chains]
    _emit(args, "\n".join(out) + "\n")


def cmd_isd(args):
    ctx = _load_cxt(args.context)
    lat = all_extents(ctx)
    res = interordinal_scaling_dimension(lat, args.budget)
    if not res.defined:
        if args.json:
            _emit(args, _json({"defined": False, "reason": res.reason}))
        raise _Failure(f"ISD undefined: {res.reason}")
    ladders = [[list(ctx.object_names(e)) for e in l.chain_a] for l in res.cover.ladders]
    if args.json:
        return _emit(args, _json({"defined": True, "isd": res.dimension, "exact": res.exact,
                                  "lower": res.lower, "upper": res.upper,
                                  "ladders": ladders, "search_nodes": res.nodes}))
    head = f"ISD = {res.dimension}" if res.exact else \
        f"ISD in [{res.lower}, {res.upper}] (search budget exhausted)"
    out = [head]
    if args.witness:
        for l in res.cover.ladders:
            out.append("  ladder: " + " < ".join(_fmt(ctx, e) for e in l.chain_a)
                       + "  +  complements")
    _emit(args, "\n".join(out) + "\n")


def cmd_bounds(args):
    ctx = _load_cxt(args.context)
    b = isd_bounds(all_extents(ctx))
    if args.json:
        return _emit(args, _json({"width": b.width, "lower": b.lower, "upper": b.upper}))
    _emit(args, f"width = {b.width}\nISD bounds = ({b.lower}, {b.upper})\n")


def cmd_order_dim(args):
    ctx = _load_cxt(args.context)
    res = ferrers_order_dimension(ctx, args.max_cells, args.budget)
    rels = [sorted([ctx.objects[g], ctx.attributes[m]] for g, m in r) for r in res.relations]
    if args.json:
        return _emit(args, _json({"order_dimension": res.dimension, "exact": res.exact,
                                  "lower": res.lower, "upper": res.upper,
                                  "reason": res.reason, "ferrers_relations": rels}))
    out = [f"order dimension = {res.dimension}" if res.exact else
           f"order dimension in [{res.lower}, {res.upper}] ({res.reason})"]
    if args.witness:
        out += ["  ferrers: " + " ".join(f"({g},{m})" for g, m in r) for r in rels]
    _emit(args, "\n".join(out) + "\n")


def cmd_check_interordinal(args):
    ctx = _load_cxt(args.context)
    gate = isd_exists(all_extents(ctx))
    derivable = gate.atomistic and gate.attribute_complements_closed
    if args.json:
        _emit(args, _json({"atomistic": gate.atomistic,
                           "attribute_complements_closed": gate.attribute_complements_closed,
                           "derivable": derivable, "ladder_coverable": gate.exists}))
    else:
        _emit(args, f"atomistic: {gate.atomistic}\n"
                    f"attribute complements are extents: {gate.attribute_complements_closed}\n"
                    f"ladder coverable: {gate.exists}\n")
    if not derivable:
        raise _Failure("not derivable from interordinal scaling")


def cmd_derive(args):
    spec = read_input(args.scaling) if args.scaling else None
    data = formats.parse_mv(read_input(args.table), spec)
    kinds = ScaleKind(args.kind) if args.kind else data.kinds
    scales = scales_for(data.prescaling, data.mv, kinds, data.splits)
    _emit(args, formats.write_cxt(plain_scaling(data.mv, scales)))


def cmd_measure(args):
    source = _load_cxt(args.source)
    target = _load_cxt(args.target)
    mapping = json.loads(read_input(args.map))
    sm = ScaleMeasure.from_names(source, target, mapping)
    check = is_scale_measure(sm)
    full = is_full_scale_measure(sm) if check.ok and args.full else None
    if args.json:
        _emit(args, _json({
            "measure": check.ok,
            "counterexample": None if check.ok else list(target.object_names(check.counterexample)),
            "full": full,
        }))
    elif check.ok:
        _emit(args, "scale measure: yes\n" + (f"full: {'yes' if full else 'no'}\n" if args.full else ""))
    if not check.ok:
        raise _Failure(f"not a scale measure: preimage of {_fmt(target, check.counterexample)} "
                       "is not an extent")
    if args.full and not full:
        raise _Failure("scale measure is not full")


def cmd_view(args):
    base = _load_cxt(args.base)
    if args.check:
        ok = is_view(_load_cxt(args.check), base)
        _emit(args, _json({"view": ok}) if args.json else f"view: {'yes' if ok else 'no'}\n")
        if not ok:
            raise _Failure("candidate is not a view of the base context")
        return
    if not args.spec:
        raise ScaledimError("view needs a SPEC file or --check CANDIDATE")
    spec = json.loads(read_input(args.spec))
    _emit(args, formats.write_cxt(make_view(base, spec)))


def cmd_reconstruct(args):
    ctx = _load_cxt(args.context)
    lat = all_extents(ctx)
    if args.mode == "ordinal":
        rec = reconstruct_ordinal_mv(lat, ordinal_scaling_dimension(lat).chains)
        kind = ScaleKind.ORDINAL
    else:
        res = interordinal_scaling_dimension(lat, args.budget)
        if not res.defined:
            raise _Failure(f"ISD undefined: {res.reason}")
        rec = reconstruct_interordinal_mv(lat, res.cover)
        kind = ScaleKind.INTERORDINAL
    table, spec = formats.write_mv(rec.mv, rec.prescaling, {m: kind for m in rec.mv.attributes})
    _emit(args, table)
    spec_path = args.spec_out
    if spec_path is None and args.output:
        spec_path = str(Path(args.output).with_suffix(".scaling.json"))
    if spec_path:
        Path(spec_path).write_bytes(spec)
    else:
        sys.stderr.write(spec.decode("utf-8"))


def cmd_dot(args):
    ctx = _load_cxt(args.context)
    lat = all_extents(ctx)
    cover = None
    if args.ladders:
        res = interordinal_scaling_dimension(lat, args.budget)
        if res.defined:
            cover = res.cover
        else:
            print(f"note: no ladders to highlight ({res.reason})", file=sys.stderr)
    _emit(args, formats.export_dot(lat, cover))


def cmd_report(args):
    ctx = _load_cxt(args.context)
    rep = reports.build_report(ctx, node_budget=args.budget, max_cells=args.max_cells,
                               timing=args.timing)
    if args.json:
        return _emit(args, reports.dumps(rep))
    isd = rep["isd"]
    od = rep["order_dimension"]
    if not isd["defined"]:
        isd_text = f"undefined ({isd['reason']})"
    elif isd["exact"]:
        isd_text = str(isd["value"])
    else:
        isd_text = f"in [{isd['lower']}, {isd['upper']}]"
    od_text = str(od["value"]) if od["exact"] else f"in [{od['lower']}, {od['upper']}]"
    c = rep["context"]
    lines = [
        f"objects: {c['objects']}  attributes: {c['attributes']}  concepts: {c['concepts']}",
        f"meet-irreducibles: {len(c['meet_irreducibles'])}  width: {rep['width']}",
        f"OSD: {rep['osd']['value']}",
        f"ISD: {isd_text}",
        f"ISD bounds: ({rep['isd_bounds']['lower']}, {rep['isd_bounds']['upper']})",
        f"order dimension: {od_text}",
        f"atomistic: {rep['derivability']['atomistic']}  attribute complements closed: "
        f"{rep['derivability']['attribute_complements_closed']}",
    ]
    _emit(args, "\n".join(lines) + "\n")


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="machine-readable output")
    common.add_argument("--witness", action="store_true", help="print witnesses")
    common.add_argument("--budget", type=int, default=DEFAULT_NODE_BUDGET, metavar="N",
                        help="search node budget (default %(default)s)")
    common.add_argument("--max-cells", type=int, default=DEFAULT_MAX_CELLS, metavar="N",
                        help="largest |G|*|M| solved exactly for order dimension")
    common.add_argument("-o", "--output", metavar="FILE", help="write result to FILE")

    parser = argparse.ArgumentParser(prog="scaledim", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, func, help_, ctx_arg=True):
        p = sub.add_parser(name, parents=[common], help=help_)
        if ctx_arg:
            p.add_argument("context", help="Burmeister .cxt file")
        p.set_defaults(func=func)
        return p

    add("concepts", cmd_concepts, "list all concepts")
    add("irreducibles", cmd_irreducibles, "list meet-irreducible extents")
    add("osd", cmd_osd, "ordinal scaling dimension")
    add("isd", cmd_isd, "interordinal scaling dimension")
    add("bounds", cmd_bounds, "width bounds on the interordinal scaling dimension")
    add("order-dim", cmd_order_dim, "Ferrers / order dimension")
    add("check-interordinal", cmd_check_interordinal, "derivability from interordinal scaling")
    p = add("derive", cmd_derive, "derive a formal context from a many-valued table", False)
    p.add_argument("table", help="CSV table")
    p.add_argument("scaling", nargs="?", help="JSON scaling spec")
    p.add_argument("--kind", choices=[k.value for k in ScaleKind],
                   help="override every attribute's scale kind")
    p = add("measure", cmd_measure, "check a scale measure", False)
    p.add_argument("source")
    p.add_argument("target")
    p.add_argument("map", help="JSON object mapping source to target object names")
    p.add_argument("--full", action="store_true", help="also check fullness")
    p = add("view", cmd_view, "build or check a view", False)
    p.add_argument("base")
    p.add_argument("spec", nargs="?", help="JSON {column: [attributes]}")
    p.add_argument("--check", metavar="CANDIDATE", help="test whether CANDIDATE is a view")
    p = add("reconstruct", cmd_reconstruct, "small many-valued context with the same extents")
    p.add_argument("--mode", choices=["interordinal", "ordinal"], default="interordinal")
    p.add_argument("--spec-out", metavar="FILE", help="where to write the scaling JSON")
    p = add("dot", cmd_dot, "Hasse diagram in DOT")
    p.add_argument("--ladders", action="store_true", help="colour a minimum ladder cover")
    p = add("report", cmd_report, "full analysis")
    p.add_argument("--timing", action="store_true", help="include wall-clock time in JSON")
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        args.func(args)
    except _Failure as exc:
        print(exc, file=sys.stderr)
        return 1
    except (ScaledimError, OSError, ValueError, KeyError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    return 0


run_cli = main

if __name__ == "__main__":
    sys.exit(main())
