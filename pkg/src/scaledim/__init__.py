"""Conceptual scaling toolkit: formal contexts, standard scales, scale
measures, and the ordinal / interordinal scaling dimensions."""

from .context import (
    ExtentLattice,
    FormalContext,
    all_extents,
    clarify,
    closure,
    complement_is_extent,
    is_atomistic,
    is_extent,
    meet_irreducible_extents,
    prime,
)
from .dimensions import (
    DimensionReport,
    ExtentLadder,
    LadderCover,
    analyze,
    ferrers_order_dimension,
    interordinal_scaling_dimension,
    is_extent_ladder,
    isd_bounds,
    isd_exists,
    ordinal_scaling_dimension,
    poset_width,
    reconstruct_interordinal_mv,
    reconstruct_ordinal_mv,
)
from .errors import ScaledimError
from .measures import (
    ScaleMeasure,
    canonical_view,
    is_full_scale_measure,
    is_scale_measure,
    is_view,
    make_view,
)
from .scaling import (
    AttributeDomain,
    ManyValuedContext,
    PreScaling,
    Scale,
    ScaleKind,
    build_scale,
    interordinal_derive,
    ordinal_derive,
    plain_scaling,
    scales_for,
    verify_preimage_lemma,
)

__version__ = "0.1.0"
