"""Weierstrass semigroups at every point class of the Skabelund curve.

The curve is the cyclic cover of the Suzuki curve that is maximal over
F_{q^4}, with q0 = 2^s and q = 2*q0^2.  This package computes the
semigroup at each of the three point classes (rational, quartic,
generic), cross-verifies the closed-form descriptions against a general
shortest-path Apery engine, and reproduces the per-family gap counts.
"""

from .curve import (
    CurveParams,
    PoleOrderTable,
    make_params,
    phi,
    phi1,
    phi2,
    pole_order_table,
    quartic_apery,
    quartic_apery_stats,
    quartic_generators,
    quartic_multiplicity,
    rational_apery,
    rational_apery_stats,
    rational_generators,
)
from .errors import (
    DuplicateGap,
    DuplicateResidue,
    EmptyInput,
    NoWitness,
    NonCoprime,
    NonIntegerResult,
    NotClosed,
    OutOfDomain,
    Overflow,
    SkabelundError,
    SumMismatch,
    TableMismatch,
    UnsupportedCombination,
    UnsupportedS,
)
from .families import (
    FamilyId,
    FamilyParams,
    GapRecord,
    WitnessVector,
    binom_sum_check,
    count_family,
    enumerate_all,
    enumerate_family,
    enumerate_values,
    family_count_closed_form,
    family_value,
    gap_witness,
    generic_semigroup,
    iter_family_records,
    iter_family_values,
    witness_pole_cost,
    witness_valuation,
)
from .semigroup import (
    GapSet,
    GeneratorSet,
    SemigroupProfile,
    SemigroupStats,
    contains,
    gaps_of,
    is_symmetric,
    minimal_generators,
    normalize_generators,
    profile_from_generators,
    verify_cofinite_complement,
)

__version__ = "0.1.0"

__all__ = [
    "CurveParams", "PoleOrderTable", "make_params", "phi", "phi1", "phi2",
    "pole_order_table", "quartic_apery", "quartic_apery_stats",
    "quartic_generators", "quartic_multiplicity", "rational_apery",
    "rational_apery_stats", "rational_generators",
    "DuplicateGap", "DuplicateResidue", "EmptyInput", "NoWitness",
    "NonCoprime", "NonIntegerResult", "NotClosed", "OutOfDomain", "Overflow",
    "SkabelundError", "SumMismatch", "TableMismatch",
    "UnsupportedCombination", "UnsupportedS",
    "FamilyId", "FamilyParams", "GapRecord", "WitnessVector",
    "binom_sum_check", "count_family", "enumerate_all", "enumerate_family",
    "enumerate_values", "family_count_closed_form", "family_value",
    "gap_witness", "generic_semigroup", "iter_family_records",
    "iter_family_values",
    "witness_pole_cost", "witness_valuation",
    "GapSet", "GeneratorSet", "SemigroupProfile", "SemigroupStats",
    "contains", "gaps_of", "is_symmetric", "minimal_generators",
    "normalize_generators", "profile_from_generators",
    "verify_cofinite_complement",
]
