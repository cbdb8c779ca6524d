"""Dilation-1 embeddings of rectangular grids into k-ary n-cubes."""

from .embedding import EmbeddingMap, GridSpec, check_fit, embed_grid, inflate_k, labelled_view
from .errors import (
    ColOverflow,
    DomainError,
    FitError,
    GridCubeError,
    RowOverflow,
    UnsupportedArityError,
    ValidationError,
)
from .graycode import (
    BitString,
    LabelPartition,
    bin_gray_decode,
    bin_gray_encode,
    kary_gray_rank_to_tuple,
    kary_gray_tuple_to_rank,
    label_of_coordinate,
    partition_label,
)
from .topology import CubeSpec, are_adjacent, cube_stats, neighbors, nodes, torus_distance
from .verify import EmbeddingReport, SearchStatus, is_isomorphic_embedding, oracle_search, verify

__all__ = [
    "BitString", "ColOverflow", "CubeSpec", "DomainError", "EmbeddingMap", "EmbeddingReport",
    "FitError", "GridCubeError", "GridSpec", "LabelPartition", "RowOverflow", "SearchStatus",
    "UnsupportedArityError", "ValidationError", "are_adjacent", "bin_gray_decode", "bin_gray_encode",
    "check_fit", "cube_stats", "embed_grid", "inflate_k", "is_isomorphic_embedding",
    "kary_gray_rank_to_tuple", "kary_gray_tuple_to_rank", "label_of_coordinate", "labelled_view",
    "neighbors", "nodes", "oracle_search", "partition_label", "torus_distance", "verify",
]
