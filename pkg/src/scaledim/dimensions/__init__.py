from .cover import CoverResult, min_set_cover
from .ferrers import FerrersResult, ferrers_order_dimension, is_ferrers, maximal_ferrers_relations
from .ladders import (
    ExtentLadder,
    InterordinalDimension,
    IsdBounds,
    IsdGate,
    LadderCheck,
    LadderCover,
    OrdinalDimension,
    candidate_ladders,
    interordinal_scaling_dimension,
    is_extent_ladder,
    isd_bounds,
    isd_exists,
    ordinal_scaling_dimension,
)
from .reconstruct import Reconstruction, reconstruct_interordinal_mv, reconstruct_ordinal_mv
from .report import DimensionReport, analyze
from .width import Width, poset_width

__all__ = [
    "CoverResult", "DimensionReport", "ExtentLadder", "FerrersResult",
    "InterordinalDimension", "IsdBounds", "IsdGate", "LadderCheck", "LadderCover",
    "OrdinalDimension", "Reconstruction", "Width", "analyze", "candidate_ladders",
    "ferrers_order_dimension", "interordinal_scaling_dimension", "is_extent_ladder",
    "is_ferrers", "isd_bounds", "isd_exists", "maximal_ferrers_relations",
    "min_set_cover", "ordinal_scaling_dimension", "poset_width",
    "reconstruct_interordinal_mv", "reconstruct_ordinal_mv",
]
