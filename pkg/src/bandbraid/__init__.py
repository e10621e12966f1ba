"""Positive braid words in band generators, relation search and sweep certificates."""

from .artin import artin_equal
from .core import (
    ArtinLetter,
    ArtinWord,
    BandGenerator,
    BandWord,
    ClosureInvariants,
    Permutation,
    band_to_artin,
    closure_invariants,
    compose,
    format_band_word,
    is_unknot_presentation,
    make_generator,
    parse_band_word,
    permutation,
    positive_artin_to_band,
)
from .errors import BraidError
from .graph import (
    OrbitReport,
    WordKey,
    canonical_key,
    conjugacy_orbit,
    equality_class,
    min_orbit_key,
    monoid_equal,
)
from .rewriting import Commute, Cycle, Triple, apply_move, cycle, neighbors, r1_commutes, r2_variants
from .sweep import (
    ADJACENT_FIRST,
    ANY,
    NEVER,
    Indeterminate,
    MutuallyBraided,
    NotMutuallyBraided,
    SweepCertificate,
    SweepPredicate,
    census,
    decide,
    orbit_decide_consistency,
    replay,
)

__version__ = "0.1.0"
