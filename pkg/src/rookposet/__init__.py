"""Rook placements below the diagonal: order, orbits, covers, verification."""

from .board import (
    Cell,
    ChainDecomposition,
    RankMatrix,
    RookPlacement,
    RootOrder,
    bruhat_leq,
    cell_leq,
    cell_lt,
    chains,
    compare_cells,
    diagonal_normalizer,
    empty_placement,
    from_json,
    inversions,
    involution_placement,
    kerov_involution,
    leq,
    permutation_of,
    placement,
    placement_from_rank_matrix,
    rank_matrix,
    to_json,
)
from .exactlin import (
    RandomSpec,
    Scope,
    SkewForm,
    check_polarization,
    coadjoint,
    kirillov_form,
    placement_form,
    rank_profile,
    sample_borel,
    squared_corner,
    tangent_dimension,
)
from .polarization import (
    MPData,
    OrbitDimensions,
    dimensions,
    mp_sets,
    polarization_complement,
    subalgebra_witness,
)
from .poset import (
    CoverMove,
    MoveKind,
    PosetIndex,
    VerificationReport,
    bell_number,
    brute_force_lower_covers,
    cover_moves,
    enumerate_placements,
    hasse_dot,
    maximal_element,
    order_property_suite,
    poset_index,
    raw_move,
    removable_rooks,
    verify_covers,
)

__all__ = [name for name in dir() if not name.startswith("_")]

__version__ = "0.1.0"
