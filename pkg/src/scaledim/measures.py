"""Scale measures, views and the canonical ``(G, A, in)`` representation."""

from __future__ import annotations

from collections.abc import Iterable, Mapping, Sequence
from dataclasses import dataclass
from typing import NamedTuple

from .context import FormalContext, all_extents, closure, extent
from .errors import PreconditionError, SpecError, StructureError
from .scaling import preimage


@dataclass(frozen=True)
class ScaleMeasure:
    """A total map from the objects of ``source`` to the objects of ``target``.

    ``mapping[g]`` is the target object index assigned to source object ``g``.
    """

    source: FormalContext
    target: FormalContext
    mapping: tuple[int, ...]

    def __post_init__(self):
        mapping = tuple(int(t) for t in self.mapping)
        if len(mapping) != self.source.n_objects:
            raise StructureError("measure must be total on the source objects")
        for t in mapping:
            if not 0 <= t < self.target.n_objects:
                raise StructureError(f"target index {t} out of range")
        object.__setattr__(self, "mapping", mapping)

    @classmethod
    def from_names(cls, source, target, names: Mapping[str, str]) -> ScaleMeasure:
        missing = [g for g in source.objects if g not in names]
        if missing:
            raise StructureError(f"measure undefined on {missing}")
        index = {h: i for i, h in enumerate(target.objects)}
        try:
            mapping = tuple(index[names[g]] for g in source.objects)
        except KeyError as exc:
            raise StructureError(f"unknown target object {exc.args[0]!r}") from None
        return cls(source, target, mapping)

    @classmethod
    def identity(cls, source, target) -> ScaleMeasure:
        if source.objects != target.objects:
            raise StructureError("identity needs identical object lists")
        return cls(source, target, tuple(range(source.n_objects)))

    def pull_back(self, target_set: int) -> int:
        return preimage(self.mapping, target_set)


class MeasureCheck(NamedTuple):
    ok: bool
    counterexample: int | None = None


def is_scale_measure(sm: ScaleMeasure) -> MeasureCheck:
    """Every target extent must pull back to a source extent.

    On failure the lectically first violating target extent is returned.
    """
    for e in all_extents(sm.target).extents:
        pre = sm.pull_back(e)
        if closure(sm.source, pre) != pre:
            return MeasureCheck(False, e)
    return MeasureCheck(True)


def is_full_scale_measure(sm: ScaleMeasure) -> bool:
    """True iff every source extent is the preimage of some target extent.

    Materialises both extent sets, so the cost is exponential in the worst
    case.
    """
    if not is_scale_measure(sm).ok:
        raise PreconditionError("map is not a scale measure")
    pulled = {sm.pull_back(e) for e in all_extents(sm.target).extents}
    return pulled == set(all_extents(sm.source).extents)


def make_view(base: FormalContext, spec: Mapping[str, Iterable[str | int]]) -> FormalContext:
    """Context on ``base``'s objects with one column ``A_n'`` per entry."""
    columns = []
    for name, attrs in spec.items():
        try:
            mask = base.attribute_mask(attrs)
        except StructureError as exc:
            raise SpecError(f"view attribute {name!r}: {exc}") from None
        columns.append((name, extent(base, mask)))
    return FormalContext.from_columns(base.objects, columns)


def is_view(candidate: FormalContext, base: FormalContext) -> bool:
    """True iff the identity is a ``candidate``-measure of ``base``.

    Extents of ``candidate`` are intersections of its columns and extents of
    ``base`` are closed under intersection, so testing the columns suffices.
    """
    if candidate.objects != base.objects:
        raise StructureError("candidate and base must share the object list")
    return all(closure(base, col) == col for col in candidate.column_masks)


def extent_label(ctx: FormalContext, mask: int) -> str:
    return "{" + ",".join(ctx.object_names(mask)) + "}"


def canonical_view(base: FormalContext, family: Sequence[int]) -> FormalContext:
    """The context ``(G, family, in)`` for a family of extents of ``base``."""
    columns = []
    seen = set()
    for e in family:
        if closure(base, e) != e:
            raise SpecError(f"{extent_label(base, e)} is not an extent")
        if e in seen:
            continue
        seen.add(e)
        columns.append((extent_label(base, e), e))
    return FormalContext.from_columns(base.objects, columns)
