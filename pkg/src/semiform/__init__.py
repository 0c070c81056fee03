"""Semi-invariants of binary forms with exact rational linear algebra."""

from .errors import CapacityError, ContextError, TheoremViolation
from .poly import (
    BoxPartition,
    Polynomial,
    add,
    homogeneity,
    monomial_partition,
    mul,
    parse_polynomial,
    partition_monomial,
)
from .partitions import (
    count_p,
    delta,
    delta_table,
    enumerate_box_partitions,
    gaussian_coefficient,
    strict_unimodality_report,
)
from .operators import (
    SpaceSignature,
    apply_D,
    apply_Delta,
    cayley_check,
    hilbert_commutator_residual,
    operator_power,
    second_hilbert_residual,
    shear_expand,
    taylor_check,
)
from .diagrams import commutator_census, enumerate_semi_diagrams, oracle_weight_sum
from .invariants import (
    additivity_witness,
    basis_Q,
    is_semi_invariant,
    matrix_of,
    semi_invariant_basis,
    sylvester_report,
)

__version__ = "0.1.0"
