"""Many-valued contexts, pre-scalings, standard scales and plain scaling."""

from __future__ import annotations

from collections.abc import Mapping, Sequence
from dataclasses import dataclass, field
from enum import Enum

from .context import FormalContext, all_extents, full_mask
from .errors import ConfigurationError, PreconditionError, ScalingError, StructureError


class ScaleKind(str, Enum):
    NOMINAL = "nominal"
    ORDINAL = "ordinal"
    INTERORDINAL = "interordinal"
    BIORDINAL = "biordinal"
    DICHOTOMIC = "dichotomic"
    CONTRANOMINAL = "contranominal"

    @property
    def needs_order(self) -> bool:
        return self in (ScaleKind.ORDINAL, ScaleKind.INTERORDINAL, ScaleKind.BIORDINAL)


@dataclass(frozen=True)
class ManyValuedContext:
    """A partial table ``(G, M, W, I)``; ``None`` marks a missing value."""

    objects: tuple[str, ...]
    attributes: tuple[str, ...]
    values: tuple[tuple[str | None, ...], ...]

    def __post_init__(self):
        objects = tuple(str(g) for g in self.objects)
        attributes = tuple(str(m) for m in self.attributes)
        values = tuple(
            tuple(None if v is None else str(v) for v in row) for row in self.values
        )
        if len(set(objects)) != len(objects):
            raise StructureError("object names must be pairwise distinct")
        if len(set(attributes)) != len(attributes):
            raise StructureError("attribute names must be pairwise distinct")
        if len(values) != len(objects) or any(len(r) != len(attributes) for r in values):
            raise StructureError("value table does not match |G| x |M|")
        object.__setattr__(self, "objects", objects)
        object.__setattr__(self, "attributes", attributes)
        object.__setattr__(self, "values", values)

    @property
    def is_complete(self) -> bool:
        return all(v is not None for row in self.values for v in row)

    def column(self, attribute: str) -> tuple[str | None, ...]:
        j = self.attributes.index(attribute)
        return tuple(row[j] for row in self.values)

    def value(self, obj: str, attribute: str) -> str | None:
        return self.values[self.objects.index(obj)][self.attributes.index(attribute)]


@dataclass(frozen=True)
class AttributeDomain:
    """Value domain ``W(m)``; when ``ordered`` the list order is ``<=_m``."""

    values: tuple[str, ...]
    ordered: bool = False

    def __post_init__(self):
        values = tuple(str(v) for v in self.values)
        if len(set(values)) != len(values):
            raise ConfigurationError(f"duplicate tokens in value domain {values}")
        object.__setattr__(self, "values", values)


@dataclass(frozen=True)
class PreScaling:
    domains: Mapping[str, AttributeDomain] = field(default_factory=dict)

    def __getitem__(self, attribute: str) -> AttributeDomain:
        try:
            return self.domains[attribute]
        except KeyError:
            raise ConfigurationError(f"no value domain declared for {attribute!r}") from None

    def __contains__(self, attribute):
        return attribute in self.domains

    def validate(self, mv: ManyValuedContext) -> None:
        """Raise :class:`ScalingError` for the first value outside its domain."""
        for m in mv.attributes:
            allowed = set(self[m].values)
            for g, v in zip(mv.objects, mv.column(m)):
                if v is not None and v not in allowed:
                    raise ScalingError(
                        f"value {v!r} of ({g}, {m}) is not in the declared domain",
                        obj=g, attribute=m, value=v,
                    )

    @classmethod
    def ordered(cls, orders: Mapping[str, Sequence[str]]) -> PreScaling:
        return cls({m: AttributeDomain(tuple(vs), True) for m, vs in orders.items()})


@dataclass(frozen=True)
class Scale:
    """A scale context whose objects are (a superset of) the value domain."""

    context: FormalContext
    kind: ScaleKind | None = None

    @property
    def values(self) -> tuple[str, ...]:
        return self.context.objects

    def row(self, value: str) -> int:
        try:
            return self.context.row_masks[self.context.objects.index(value)]
        except ValueError:
            raise KeyError(value) from None


def build_scale(kind: ScaleKind | str, domain: Sequence[str], *, split: int | None = None,
                ordered: bool = True) -> Scale:
    """Construct a standard scale over ``domain``.

    ``ordered`` states whether the list order of ``domain`` is a genuine
    linear order.  ``split`` is the size of the lower block of a biordinal
    scale.
    """
    kind = ScaleKind(kind)
    values = tuple(str(v) for v in domain)
    n = len(values)
    if n == 0:
        raise ConfigurationError("value domain is empty")
    if len(set(values)) != n:
        raise ConfigurationError(f"duplicate tokens in value domain {values}")
    if kind.needs_order and not ordered:
        raise ConfigurationError(f"{kind.value} scale requires a linearly ordered domain")

    if kind is ScaleKind.NOMINAL:
        cols = [(f"={v}", 1 << i) for i, v in enumerate(values)]
    elif kind is ScaleKind.CONTRANOMINAL:
        cols = [(f"≠{v}", full_mask(n) & ~(1 << i)) for i, v in enumerate(values)]
    elif kind is ScaleKind.ORDINAL:
        cols = [(f"≤{v}", full_mask(i + 1)) for i, v in enumerate(values)]
    elif kind is ScaleKind.INTERORDINAL:
        cols = _interordinal_columns(values)
    elif kind is ScaleKind.DICHOTOMIC:
        if n != 2:
            raise ConfigurationError(f"dichotomic scale needs exactly 2 values, got {n}")
        cols = [(f"={values[0]}", 1), (f"={values[1]}", 2)]
    else:
        if split is None or not 0 < split < n:
            raise ConfigurationError(
                f"biordinal split must lie strictly inside the domain (0 < split < {n})"
            )
        lower = [(f"≤{values[i]}", full_mask(i + 1)) for i in range(split)]
        upper = [(f"≥{values[i]}", full_mask(n) & ~full_mask(i)) for i in range(split, n)]
        cols = lower + upper
    return Scale(FormalContext.from_columns(values, cols), kind)


def _interordinal_columns(values):
    n = len(values)
    top = full_mask(n)
    cols = []
    for i, v in enumerate(values):
        ext = full_mask(i + 1)
        if ext not in (0, top):
            cols.append((f"≤{v}", ext))
    for i, v in enumerate(values):
        ext = top & ~full_mask(i)
        if ext not in (0, top):
            cols.append((f"≥{v}", ext))
    return cols


def plain_scaling(mv: ManyValuedContext, scales: Mapping[str, Scale]) -> FormalContext:
    """Derive the formal context of ``mv`` under the given scales.

    Column ``m:n`` is crossed for ``g`` iff ``m(g)`` is present and the
    scale row of ``m(g)`` has attribute ``n``.  Missing values produce an
    empty row block.
    """
    attributes = []
    blocks = []
    for j, m in enumerate(mv.attributes):
        if m not in scales:
            raise ConfigurationError(f"no scale given for attribute {m!r}")
        sc = scales[m]
        attributes.extend(f"{m}:{n}" for n in sc.context.attributes)
        blocks.append((j, m, sc))
    rows = []
    for g, row in zip(mv.objects, mv.values):
        cells: list[bool] = []
        for j, m, sc in blocks:
            v = row[j]
            width = sc.context.n_attributes
            if v is None:
                cells.extend([False] * width)
                continue
            try:
                r = sc.row(v)
            except KeyError:
                raise ScalingError(
                    f"value {v!r} of ({g}, {m}) is not an object of its scale",
                    obj=g, attribute=m, value=v,
                ) from None
            cells.extend(bool(r >> k & 1) for k in range(width))
        rows.append(tuple(cells))
    return FormalContext(mv.objects, tuple(attributes), tuple(rows))


def scales_for(prescaling: PreScaling, mv: ManyValuedContext,
               kinds: ScaleKind | str | Mapping[str, ScaleKind | str],
               splits: Mapping[str, int] | None = None) -> dict[str, Scale]:
    """Build one standard scale per attribute from the pre-scaling."""
    splits = splits or {}
    out = {}
    for m in mv.attributes:
        dom = prescaling[m]
        kind = kinds[m] if isinstance(kinds, Mapping) else kinds
        out[m] = build_scale(kind, dom.values, split=splits.get(m), ordered=dom.ordered)
    return out


def interordinal_derive(mv: ManyValuedContext, prescaling: PreScaling) -> FormalContext:
    """``I(D)``: plain scaling with an interordinal scale per attribute."""
    prescaling.validate(mv)
    return plain_scaling(mv, scales_for(prescaling, mv, ScaleKind.INTERORDINAL))


def ordinal_derive(mv: ManyValuedContext, prescaling: PreScaling) -> FormalContext:
    """``O(D)``: plain scaling with an ordinal scale per attribute."""
    prescaling.validate(mv)
    return plain_scaling(mv, scales_for(prescaling, mv, ScaleKind.ORDINAL))


def scale_measure_map(mv: ManyValuedContext, attribute: str, scale: Scale) -> tuple[int, ...]:
    """The map ``g -> m(g)`` as indices into the scale's objects."""
    col = mv.column(attribute)
    index = {v: i for i, v in enumerate(scale.values)}
    out = []
    for g, v in zip(mv.objects, col):
        if v is None:
            raise PreconditionError(f"({g}, {attribute}) has no value")
        if v not in index:
            raise ScalingError(
                f"value {v!r} of ({g}, {attribute}) is not an object of its scale",
                obj=g, attribute=attribute, value=v,
            )
        out.append(index[v])
    return tuple(out)


def preimage(mapping: Sequence[int], target: int) -> int:
    """Objects whose image lies in the target bitmask."""
    return sum(1 << g for g, t in enumerate(mapping) if target >> t & 1)


def intersection_closure(family, top: int) -> set[int]:
    """Close a family of bitmasks under pairwise intersection, adding ``top``."""
    closed = {top}
    frontier = set(family) - closed
    closed |= frontier
    while frontier:
        new = set()
        for a in frontier:
            for b in list(closed):
                c = a & b
                if c not in closed:
                    new.add(c)
        closed |= new
        frontier = new
    return closed


def verify_preimage_lemma(mv: ManyValuedContext, scales: Mapping[str, Scale]) -> bool:
    """Check that the derived extents are exactly the intersections of
    preimages of scale extents.

    Both sides are computed independently: the left one by enumerating the
    derived context, the right one from the scales alone.
    """
    if not mv.is_complete:
        raise PreconditionError("the preimage characterisation needs a complete context")
    derived = all_extents(plain_scaling(mv, scales))
    pulled = set()
    for m in mv.attributes:
        sc = scales[m]
        sigma = scale_measure_map(mv, m, sc)
        for e in all_extents(sc.context).extents:
            pulled.add(preimage(sigma, e))
    top = full_mask(len(mv.objects))
    return set(derived.extents) == intersection_closure(pulled, top)
