"""Defining ideals and minimal graded free resolutions of affine monomial
curves given by arithmetic sequences, cross-validated against an independent
Groebner-basis/syzygy oracle."""

from .ring import (
    QQ,
    EliminationOrder,
    Polynomial,
    PolyRing,
    PrimeField,
    Rationals,
    WeightedGrevlex,
    curve_ring,
    elimination_ring,
)
from .matrices import PolyMatrix
from .curve import (
    ArithmeticSequence,
    FirstTermTooSmall,
    GcdNotOne,
    GeneratorSet,
    NotMinimalGenerators,
    SequenceError,
    expected_generator_count,
    validate_sequence,
)
from .complexes import (
    ComplexError,
    ComplexReport,
    ConeLabel,
    GradedComplex,
    GradedFreeModule,
    InhomogeneousColumns,
    InhomogeneousMultiplier,
    NonMonomialEntry,
    WedgeLabel,
    WrongCase,
    mapping_cone,
    minor_complex,
    minor_complex_rank,
    resolution_b1,
    resolution_bn,
    verify_complex,
)
from .closedform import (
    BettiTable,
    alt_shift_table_b1,
    alt_shift_table_bn,
    betti_b1,
    betti_bn,
    compare_shift_tables,
    generator_degree_sum_parity,
    gor4_symmetry_point,
    shift_table_b1,
    shift_table_bn,
    shifts_gor4,
)
from .groebner import (
    Limits,
    ResourceLimitExceeded,
    groebner,
    ideal_member,
    module_groebner_basis,
    module_member,
    reduce_poly,
    syzygy_generators,
)
from .oracle import (
    ExactnessReport,
    betti_table_of,
    colon_check,
    colon_ideal,
    ideal_contains,
    ideal_equal,
    minimal_generators,
    minimal_resolution,
    toric_ideal,
    toric_ideal_of_weights,
    verify_exactness,
)

__version__ = "0.1.0"
