"""Burmeister ``.cxt`` contexts, CSV + JSON many-valued data, and DOT export."""

from __future__ import annotations

import csv
import io
import json
from collections.abc import Mapping
from typing import NamedTuple

from .context import ExtentLattice, FormalContext, popcount
from .errors import ConfigurationError, ParseError
from .scaling import AttributeDomain, ManyValuedContext, PreScaling, ScaleKind

# Graphviz X11 colour names, one per ladder in order
PALETTE = (
    "tomato", "steelblue", "gold", "mediumseagreen", "orchid",
    "darkorange", "turquoise", "slateblue", "yellowgreen", "hotpink",
)


def _text(data: bytes | str) -> str:
    if isinstance(data, bytes):
        try:
            data = data.decode("utf-8")
        except UnicodeDecodeError as exc:
            raise ParseError(f"not UTF-8: {exc}") from None
    return data.lstrip("﻿")


def parse_cxt(data: bytes | str) -> FormalContext:
    """Parse a Burmeister context file.

    Layout: ``B``, an optional name line, object count, attribute count, an
    optional blank line, the object names, the attribute names, then one row
    of ``X``/``.`` per object.
    """
    lines = _text(data).splitlines()
    pos = 0

    def take(what):
        nonlocal pos
        if pos >= len(lines):
            raise ParseError(f"unexpected end of file, expected {what}", pos + 1)
        pos += 1
        return lines[pos - 1].rstrip("\r")

    if take("header").strip() != "B":
        raise ParseError("header must be 'B'", 1)
    line = take("object count")
    if not line.strip().isdigit():
        line = take("object count")
    try:
        n = int(line.strip())
    except ValueError:
        raise ParseError(f"bad object count {line!r}", pos) from None
    line = take("attribute count")
    try:
        m = int(line.strip())
    except ValueError:
        raise ParseError(f"bad attribute count {line!r}", pos) from None
    if pos < len(lines) and lines[pos].strip() == "":
        pos += 1
    objects = [take("object name").strip() for _ in range(n)]
    attributes = [take("attribute name").strip() for _ in range(m)]
    rows = []
    for g in range(n):
        row = take(f"row for {objects[g]!r}").strip()
        if len(row) != m:
            raise ParseError(f"row has {len(row)} entries, expected {m}", pos)
        cells = []
        for ch in row:
            if ch in "Xx":
                cells.append(True)
            elif ch == ".":
                cells.append(False)
            else:
                raise ParseError(f"bad character {ch!r} in row", pos)
        rows.append(tuple(cells))
    for rest in range(pos, len(lines)):
        if lines[rest].strip():
            raise ParseError("trailing content after the last row", rest + 1)
    try:
        return FormalContext(tuple(objects), tuple(attributes), tuple(rows))
    except ValueError as exc:
        raise ParseError(str(exc)) from None


def write_cxt(ctx: FormalContext) -> bytes:
    out = ["B", "", str(ctx.n_objects), str(ctx.n_attributes), ""]
    out.extend(ctx.objects)
    out.extend(ctx.attributes)
    out.extend("".join("X" if x else "." for x in row) for row in ctx.incidence)
    return ("\n".join(out) + "\n").encode("utf-8")


class MVInput(NamedTuple):
    mv: ManyValuedContext
    prescaling: PreScaling
    kinds: dict[str, ScaleKind]
    splits: dict[str, int]


def parse_mv(csv_data: bytes | str, spec_data: bytes | str | None = None) -> MVInput:
    """Read a many-valued table and its scaling description.

    The CSV header names the attributes (its first cell labels the object
    column); empty cells are missing values.  The JSON maps attribute names
    to ``{"kind": ..., "order": [...]}`` (linear order), ``"domain"``
    (unordered) and, for biordinal scales, ``"split"``.
    """
    reader = csv.reader(io.StringIO(_text(csv_data)))
    try:
        header = next(reader)
    except StopIteration:
        raise ParseError("empty CSV", 1) from None
    attributes = [h.strip() for h in header[1:]]
    objects, values = [], []
    for lineno, row in enumerate(reader, start=2):
        if not any(cell.strip() for cell in row):
            continue
        if len(row) != len(header):
            raise ParseError(f"row has {len(row)} cells, expected {len(header)}", lineno)
        g = row[0].strip()
        if g in objects:
            raise ParseError(f"duplicate object {g!r}", lineno)
        objects.append(g)
        values.append(tuple(c.strip() or None for c in row[1:]))
    try:
        mv = ManyValuedContext(tuple(objects), tuple(attributes), tuple(values))
    except ValueError as exc:
        raise ParseError(str(exc)) from None

    spec = {}
    if spec_data is not None:
        try:
            spec = json.loads(_text(spec_data))
        except json.JSONDecodeError as exc:
            raise ParseError(f"scaling spec: {exc.msg}", exc.lineno) from None
        if not isinstance(spec, dict):
            raise ParseError("scaling spec must be a JSON object")
    unknown = sorted(set(spec) - set(attributes))
    if unknown:
        raise ConfigurationError(f"scaling spec names unknown attributes {unknown}")

    domains, kinds, splits = {}, {}, {}
    for m in attributes:
        entry = spec.get(m, {})
        try:
            kind = ScaleKind(entry.get("kind", "nominal"))
        except ValueError:
            raise ConfigurationError(f"{m}: unknown scale kind {entry.get('kind')!r}") from None
        if "order" in entry:
            domain = AttributeDomain(tuple(str(v) for v in entry["order"]), ordered=True)
        elif kind.needs_order:
            raise ConfigurationError(f"{m}: {kind.value} scale needs an 'order' list")
        elif "domain" in entry:
            domain = AttributeDomain(tuple(str(v) for v in entry["domain"]), ordered=False)
        else:
            seen = dict.fromkeys(v for v in mv.column(m) if v is not None)
            domain = AttributeDomain(tuple(seen), ordered=False)
        if "split" in entry:
            splits[m] = int(entry["split"])
        domains[m] = domain
        kinds[m] = kind
    prescaling = PreScaling(domains)
    prescaling.validate(mv)
    return MVInput(mv, prescaling, kinds, splits)


def write_mv(mv: ManyValuedContext, prescaling: PreScaling,
             kinds: Mapping[str, ScaleKind | str],
             splits: Mapping[str, int] | None = None) -> tuple[bytes, bytes]:
    """Serialise a many-valued context as CSV plus its scaling JSON."""
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(["object", *mv.attributes])
    for g, row in zip(mv.objects, mv.values):
        writer.writerow([g, *("" if v is None else v for v in row)])
    spec = {}
    for m in mv.attributes:
        dom = prescaling[m]
        spec[m] = {"kind": ScaleKind(kinds[m]).value,
                   "order" if dom.ordered else "domain": list(dom.values)}
        if splits and m in splits:
            spec[m]["split"] = splits[m]
    text = json.dumps(spec, indent=2, ensure_ascii=False) + "\n"
    return buf.getvalue().encode("utf-8"), text.encode("utf-8")


def _dot_quote(s: str) -> str:
    return '"' + s.replace("\\", "\\\\").replace('"', '\\"') + '"'


def export_dot(lat: ExtentLattice, highlight=None) -> bytes:
    """Hasse diagram of the extent lattice in Graphviz DOT.

    Nodes are ranked by extent size (smallest at the bottom).  When a
    ``LadderCover`` is given, each ladder's members are filled with its own
    palette colour; members of several ladders are drawn wedged.
    """
    ctx = lat.context
    colours: dict[int, list[str]] = {}
    if highlight is not None:
        for k, ladder in enumerate(highlight.ladders):
            colour = PALETTE[k % len(PALETTE)]
            for e in ladder.members:
                colours.setdefault(e, []).append(colour)

    out = ["digraph lattice {", "  rankdir=BT;", "  node [shape=box, fontsize=10];"]
    for i, e in enumerate(lat.extents):
        label = ",".join(ctx.object_names(e)) or "∅"
        attrs = [f"label={_dot_quote(label)}"]
        cs = colours.get(e)
        if cs:
            if len(cs) == 1:
                attrs.append(f'style=filled, fillcolor="{cs[0]}"')
            else:
                attrs.append(f'style=wedged, fillcolor="{":".join(cs)}"')
        out.append(f"  n{i} [{', '.join(attrs)}];")
    by_size: dict[int, list[int]] = {}
    for i, e in enumerate(lat.extents):
        by_size.setdefault(popcount(e), []).append(i)
    for size in sorted(by_size):
        nodes = " ".join(f"n{i};" for i in by_size[size])
        out.append(f"  {{ rank=same; {nodes} }}")
    for i, ups in enumerate(lat.upper_covers):
        for j in ups:
            out.append(f"  n{i} -> n{j};")
    out.append("}")
    return ("\n".join(out) + "\n").encode("utf-8")


def format_set(ctx: FormalContext, mask: int) -> str:
    return "{" + ", ".join(ctx.object_names(mask)) + "}"


def format_attrs(ctx: FormalContext, mask: int) -> str:
    return "{" + ", ".join(ctx.attribute_names(mask)) + "}"

