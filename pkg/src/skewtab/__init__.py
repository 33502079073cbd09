"""Unmixed and sequentially Cohen-Macaulay classification of skew Ferrers
shapes and skew tableau ideals, with brute-force oracles for cross-checking."""

from .shapes import (Block, Component, Partition, SkewShape, anti_transpose_shape,
                     block_containing, blocks, conjugate, delete_rows_cols,
                     is_connected, normalize, render)
from .graphs import (BipartiteGraph, from_shape, is_union_complete_graphs,
                     is_unmixed_graph, is_vertex_decomposable,
                     minimal_vertex_covers)
from .ideals import (MonomialIdeal, WeightedGraph, associated_primes,
                     associated_radical, associated_radicals_weighted,
                     irreducible_decomposition, is_scm_weighted_oracle,
                     is_unmixed_ideal, weighted_edge_ideal)
from .classify import (PrimeShapePiece, ShapeFlags, UnmixedCertificate,
                       classify_shape, explain_scm, is_saturated, is_scm_ferrers,
                       is_scm_skew, is_unmixed_skew, unmixed_decomposition,
                       validate_certificate)
from .tableau import (SkewTableau, TableauError, classify_tableau,
                      explain_scm_tableau, is_scm_tableau, is_unmixed_tableau,
                      to_weighted_graph, validate)
from .harness import (CrossCheckReport, crosscheck, enumerate_fillings,
                      enumerate_skew_shapes)

__all__ = [name for name in dir() if not name.startswith("_")]
