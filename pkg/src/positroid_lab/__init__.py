"""Positroids, their indexing objects, and smoothness of positroid varieties."""

from .chordclass import (
    DecoratedPermutation, PairRelation, alignments, crossed_alignments,
    crossings, misalignments, parse_decorated, relation_matrix,
)
from .errors import GuardError, InvariantError, ParseError, PositroidError
from .permcore import Permutation, KSubset, bruhat_leq, gale_leq, perm
from .posbij import (
    BruhatInterval, GrassmannNecklace, Positroid, decorated_perm_from_interval,
    decorated_perm_from_necklace, grassmann_necklace, interval_from_decorated_perm,
    matroid_of_matrix, necklace_from_positroid, positroid_of,
)
from .smoothgeo import (
    CRITERIA, ConsistencyError, codimension, is_smooth, singular_fixed_points,
    smoothness_report, tangent_codim,
)

__version__ = "0.1.0"
