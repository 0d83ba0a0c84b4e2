"""Exact finite multiple zeta values, the shuffle product, and reciprocity relations."""

from .identities import (
    ReciprocityReport,
    asymptotic_gap,
    check_complementary,
    check_reciprocity,
    check_weighted_reciprocity,
    euler_depth2,
    partial_fraction_terms,
    r_direct,
    r_recurrence,
    r_shuffle,
    r_weighted_direct,
    r_weighted_recurrence,
)
from .series import PowerSeries, check_polylog_shuffle, polylog_series, r_via_series
from .words import (
    WordPolynomial,
    composition_to_word,
    depth1_shuffle,
    lemma1_rhs,
    shuffle_compositions,
    shuffle_enumerate,
    shuffle_recursive,
    word_to_composition,
)
from .zeta import WeightedComposition, z_eval, zeta_finite, zeta_table, zeta_weighted

__version__ = "0.1.0"
