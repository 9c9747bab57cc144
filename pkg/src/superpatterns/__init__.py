"""Superpatterns for 213-avoiding permutation classes and universal point
sets for planar graphs, with exact verification."""

from .geometry import ExactPoint, draw, orientation, segments_cross, stretchperm, universal_pointset
from .majorize import majorize, xi, zeta
from .perm import (
    Chessboard,
    Permutation,
    avoids,
    chessboard,
    chessboard_graph,
    contains,
    enumerate_class,
    from_chessboard,
    inverse,
    is_directed_plane_forest,
)
from .planegraph import (
    CanonicalOrder,
    PlaneGraph,
    build_ctree_labels,
    canonical_order,
    cperm,
    recanonize,
    triangulate,
)
from .search import confirm_staged_n6, is_superpattern, minimal_superpattern_length
from .strahler import (
    AugmentedPermutation,
    RootedTree,
    strahler_of_tree,
    strahler_upper_bound,
    tree_augment,
    tree_pattern_permutation,
)
from .superpat import (
    augment,
    embed_into_mu,
    embed_into_strahler_superpattern,
    mu,
    strahler_superpattern,
    superpattern_213_132,
    superpattern_213_3412,
    unimodal_superpattern,
)

__version__ = "0.1.0"
