"""All dimension results for one context, gathered in a single record."""

from __future__ import annotations

from dataclasses import dataclass

from ..context import ExtentLattice, FormalContext, all_extents, meet_irreducible_extents
from .ferrers import DEFAULT_MAX_CELLS, FerrersResult, ferrers_order_dimension
from .ladders import (
    DEFAULT_NODE_BUDGET,
    InterordinalDimension,
    IsdBounds,
    OrdinalDimension,
    interordinal_scaling_dimension,
    isd_bounds,
    ordinal_scaling_dimension,
)


@dataclass(frozen=True)
class DimensionReport:
    lattice: ExtentLattice
    meet_irreducibles: tuple[int, ...]
    osd: OrdinalDimension
    isd: InterordinalDimension
    bounds: IsdBounds
    order_dimension: FerrersResult

    @property
    def width(self) -> int:
        return self.bounds.width

    def consistent(self) -> bool:
        """Check the inequalities that must hold between exact results."""
        ok = True
        if self.order_dimension.exact:
            ok &= self.order_dimension.lower <= self.osd.dimension
        if self.isd.defined and self.isd.exact:
            ok &= self.bounds.lower <= self.isd.dimension <= self.bounds.upper
        return ok


def analyze(ctx: FormalContext, *, node_budget: int | None = DEFAULT_NODE_BUDGET,
            max_cells: int = DEFAULT_MAX_CELLS) -> DimensionReport:
    lat = all_extents(ctx)
    return DimensionReport(
        lattice=lat,
        meet_irreducibles=tuple(meet_irreducible_extents(lat)),
        osd=ordinal_scaling_dimension(lat),
        isd=interordinal_scaling_dimension(lat, node_budget),
        bounds=isd_bounds(lat),
        order_dimension=ferrers_order_dimension(ctx, max_cells, node_budget),
    )
