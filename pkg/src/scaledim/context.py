"""Formal contexts, derivation operators and extent lattices.

Object and attribute subsets are plain ``int`` bitmasks: bit ``i`` set means
the ``i``-th object (or attribute) of the owning context is a member.  Python
ints are arbitrary precision, so there is no word-size limit.
"""

from __future__ import annotations

from collections.abc import Iterable, Mapping, Sequence
from dataclasses import dataclass
from functools import cached_property

from .errors import CapacityError, StructureError

DEFAULT_MAX_EXTENTS = 10**6


def bits(mask: int) -> Iterable[int]:
    """Yield the indices of set bits in ascending order."""
    i = 0
    while mask:
        if mask & 1:
            yield i
        mask >>= 1
        i += 1


def popcount(mask: int) -> int:
    return bin(mask).count("1")


def full_mask(n: int) -> int:
    return (1 << n) - 1


def is_subset(a: int, b: int) -> bool:
    return a & ~b == 0


def lectic_key(mask: int, n: int) -> tuple[bool, ...]:
    """Sort key realising the lectic order (object 0 most significant)."""
    return tuple(bool(mask >> i & 1) for i in range(n))


@dataclass(frozen=True)
class FormalContext:
    """A cross table ``(G, M, I)``.

    ``incidence[g][m]`` is true iff object ``g`` has attribute ``m``.
    """

    objects: tuple[str, ...]
    attributes: tuple[str, ...]
    incidence: tuple[tuple[bool, ...], ...]

    def __post_init__(self):
        objects = tuple(str(g) for g in self.objects)
        attributes = tuple(str(m) for m in self.attributes)
        incidence = tuple(tuple(bool(x) for x in row) for row in self.incidence)
        if len(set(objects)) != len(objects):
            raise StructureError("object names must be pairwise distinct")
        if len(set(attributes)) != len(attributes):
            raise StructureError("attribute names must be pairwise distinct")
        if len(incidence) != len(objects):
            raise StructureError(
                f"incidence has {len(incidence)} rows, expected {len(objects)}"
            )
        for g, row in zip(objects, incidence):
            if len(row) != len(attributes):
                raise StructureError(
                    f"row {g!r} has {len(row)} entries, expected {len(attributes)}"
                )
        object.__setattr__(self, "objects", objects)
        object.__setattr__(self, "attributes", attributes)
        object.__setattr__(self, "incidence", incidence)

    @classmethod
    def from_intents(
        cls,
        objects: Sequence[str],
        attributes: Sequence[str],
        intents: Mapping[str, Iterable[str]],
    ) -> FormalContext:
        """Build a context from ``{object: attributes it has}``."""
        rows = []
        for g in objects:
            has = set(intents.get(g, ()))
            unknown = has - set(attributes)
            if unknown:
                raise StructureError(f"unknown attributes for {g!r}: {sorted(unknown)}")
            rows.append(tuple(m in has for m in attributes))
        return cls(tuple(objects), tuple(attributes), tuple(rows))

    @classmethod
    def from_columns(
        cls, objects: Sequence[str], columns: Sequence[tuple[str, int]]
    ) -> FormalContext:
        """Build a context from ``(attribute name, extent bitmask)`` pairs."""
        n = len(objects)
        names = [name for name, _ in columns]
        rows = tuple(
            tuple(bool(ext >> g & 1) for _, ext in columns) for g in range(n)
        )
        return cls(tuple(objects), tuple(names), rows)

    @property
    def n_objects(self) -> int:
        return len(self.objects)

    @property
    def n_attributes(self) -> int:
        return len(self.attributes)

    @property
    def all_objects(self) -> int:
        return full_mask(len(self.objects))

    @property
    def all_attributes(self) -> int:
        return full_mask(len(self.attributes))

    @cached_property
    def row_masks(self) -> tuple[int, ...]:
        """Intent ``{g}'`` of every object as an attribute bitmask."""
        return tuple(
            sum(1 << j for j, x in enumerate(row) if x) for row in self.incidence
        )

    @cached_property
    def column_masks(self) -> tuple[int, ...]:
        """Extent ``{m}'`` of every attribute as an object bitmask."""
        cols = [0] * len(self.attributes)
        for i, row in enumerate(self.incidence):
            for j, x in enumerate(row):
                if x:
                    cols[j] |= 1 << i
        return tuple(cols)

    @property
    def n_incidences(self) -> int:
        return sum(popcount(r) for r in self.row_masks)

    @cached_property
    def _object_index(self) -> dict[str, int]:
        return {g: i for i, g in enumerate(self.objects)}

    @cached_property
    def _attribute_index(self) -> dict[str, int]:
        return {m: i for i, m in enumerate(self.attributes)}

    def object_mask(self, items: Iterable[str | int]) -> int:
        """Bitmask for a collection of object names or indices."""
        return _to_mask(items, self._object_index, len(self.objects), "object")

    def attribute_mask(self, items: Iterable[str | int]) -> int:
        return _to_mask(items, self._attribute_index, len(self.attributes), "attribute")

    def object_names(self, mask: int) -> tuple[str, ...]:
        return tuple(self.objects[i] for i in bits(mask))

    def attribute_names(self, mask: int) -> tuple[str, ...]:
        return tuple(self.attributes[i] for i in bits(mask))

    def transpose(self) -> FormalContext:
        rows = tuple(zip(*self.incidence)) if self.objects else ((),) * len(self.attributes)
        return FormalContext(self.attributes, self.objects, rows)

    def __str__(self):
        width = max((len(g) for g in self.objects), default=0)
        lines = [" " * width + " " + " ".join(self.attributes)]
        for g, row in zip(self.objects, self.incidence):
            cells = " ".join(
                ("X" if x else ".").ljust(len(m)) for x, m in zip(row, self.attributes)
            )
            lines.append(f"{g.ljust(width)} {cells}")
        return "\n".join(lines)


def _to_mask(items, index, n, what):
    mask = 0
    for item in items:
        if isinstance(item, int):
            if not 0 <= item < n:
                raise StructureError(f"{what} index {item} out of range")
            mask |= 1 << item
        else:
            try:
                mask |= 1 << index[item]
            except KeyError:
                raise StructureError(f"unknown {what} {item!r}") from None
    return mask


def _check_range(mask: int, n: int, what: str) -> None:
    if mask < 0 or mask >> n:
        raise StructureError(f"{what} set {mask:#x} indexes outside the context")


def intent(ctx: FormalContext, objects: int) -> int:
    """Attributes common to all given objects (``A'``)."""
    _check_range(objects, ctx.n_objects, "object")
    result = ctx.all_attributes
    for g in bits(objects):
        result &= ctx.row_masks[g]
    return result


def extent(ctx: FormalContext, attributes: int) -> int:
    """Objects having all given attributes (``B'``)."""
    _check_range(attributes, ctx.n_attributes, "attribute")
    result = ctx.all_objects
    for m in bits(attributes):
        result &= ctx.column_masks[m]
    return result


def prime(ctx: FormalContext, s: int, side: str = "objects") -> int:
    """Derivation operator.

    ``side`` names what ``s`` is a subset of: ``"objects"`` returns the
    common attributes, ``"attributes"`` returns the common objects.
    """
    if side == "objects":
        return intent(ctx, s)
    if side == "attributes":
        return extent(ctx, s)
    raise ValueError(f"side must be 'objects' or 'attributes', not {side!r}")


def closure(ctx: FormalContext, objects: int) -> int:
    """``A''`` for an object set ``A``."""
    return extent(ctx, intent(ctx, objects))


def _closure_unchecked(ctx: FormalContext, objects: int) -> int:
    rows, cols = ctx.row_masks, ctx.column_masks
    att = ctx.all_attributes
    for g in bits(objects):
        att &= rows[g]
    result = ctx.all_objects
    for m in bits(att):
        result &= cols[m]
    return result


@dataclass(frozen=True)
class ExtentLattice:
    """All extents of a context in lectic order, with the cover relation.

    ``upper_covers[i]`` lists indices (ascending) of the extents covering
    ``extents[i]`` in the inclusion order.
    """

    context: FormalContext
    extents: tuple[int, ...]
    upper_covers: tuple[tuple[int, ...], ...]

    def __len__(self):
        return len(self.extents)

    def __iter__(self):
        return iter(self.extents)

    def __contains__(self, mask):
        return mask in self.index

    @cached_property
    def index(self) -> dict[int, int]:
        return {e: i for i, e in enumerate(self.extents)}

    @cached_property
    def lower_covers(self) -> tuple[tuple[int, ...], ...]:
        lower: list[list[int]] = [[] for _ in self.extents]
        for i, ups in enumerate(self.upper_covers):
            for j in ups:
                lower[j].append(i)
        return tuple(tuple(x) for x in lower)

    @property
    def top(self) -> int:
        return self.context.all_objects

    def intent_of(self, ext: int) -> int:
        return intent(self.context, ext)

    def names(self, mask: int) -> tuple[str, ...]:
        return self.context.object_names(mask)


def iter_extents(ctx: FormalContext):
    """Yield every extent once, in lectic order (next-closure)."""
    n = ctx.n_objects
    current = _closure_unchecked(ctx, 0)
    while current is not None:
        yield current
        nxt = None
        a = current
        for i in range(n - 1, -1, -1):
            bit = 1 << i
            if a & bit:
                a &= ~bit
                continue
            b = _closure_unchecked(ctx, a | bit)
            if not (b & ~a) & (bit - 1):
                nxt = b
                break
        current = nxt


def all_extents(ctx: FormalContext, max_extents: int = DEFAULT_MAX_EXTENTS) -> ExtentLattice:
    """Enumerate ``Ext(ctx)`` and compute the Hasse diagram.

    Raises :class:`CapacityError` once more than ``max_extents`` extents are
    found.
    """
    extents = []
    for e in iter_extents(ctx):
        if len(extents) >= max_extents:
            raise CapacityError(
                f"more than {max_extents} extents; aborted", count=len(extents)
            )
        extents.append(e)
    index = {e: i for i, e in enumerate(extents)}
    n = ctx.n_objects
    covers = []
    for e in extents:
        candidates = set()
        for g in range(n):
            if not e >> g & 1:
                candidates.add(_closure_unchecked(ctx, e | 1 << g))
        minimal = [c for c in candidates if not any(d != c and is_subset(d, c) for d in candidates)]
        covers.append(tuple(sorted(index[c] for c in minimal)))
    return ExtentLattice(ctx, tuple(extents), tuple(covers))


def meet_irreducible_extents(lat: ExtentLattice) -> list[int]:
    """Extents with exactly one upper cover, in lectic order."""
    return [e for e, ups in zip(lat.extents, lat.upper_covers) if len(ups) == 1]


def is_atomistic(ctx: FormalContext) -> bool:
    """True iff no object intent is a proper subset of another."""
    rows = ctx.row_masks
    for i, a in enumerate(rows):
        for j, b in enumerate(rows):
            if i != j and a != b and is_subset(a, b):
                return False
    return True


def is_extent(lat: ExtentLattice, objects: int) -> bool:
    _check_range(objects, lat.context.n_objects, "object")
    return objects in lat.index


def complement_is_extent(lat: ExtentLattice, objects: int) -> bool:
    _check_range(objects, lat.context.n_objects, "object")
    return (lat.top & ~objects) in lat.index


def clarify(ctx: FormalContext) -> FormalContext:
    """Merge objects with equal intents and attributes with equal extents.

    The first occurrence keeps its name; order is otherwise preserved.
    """
    seen_rows: set[int] = set()
    keep_objects = []
    for i, r in enumerate(ctx.row_masks):
        if r not in seen_rows:
            seen_rows.add(r)
            keep_objects.append(i)
    seen_cols: set[int] = set()
    keep_attrs = []
    for j, c in enumerate(ctx.column_masks):
        if c not in seen_cols:
            seen_cols.add(c)
            keep_attrs.append(j)
    return FormalContext(
        tuple(ctx.objects[i] for i in keep_objects),
        tuple(ctx.attributes[j] for j in keep_attrs),
        tuple(tuple(ctx.incidence[i][j] for j in keep_attrs) for i in keep_objects),
    )
