"""Exact character sums of symmetric groups.

Evaluates irreducible characters by the rim-hook recursion, the three-class
character sums and triple counts they feed, a brute-force permutation
oracle, and the numeric bound functions behind the limit theorems.
"""

from .characters import (
    CharacterEvaluator,
    character_column,
    character_table,
    dimension,
    fixed_point_hook_character,
    hook_character,
    interpolate_character_polynomial,
    mn_character,
    near_hook_dimensions,
    two_row_dimension,
    wedge_character,
)
from .errors import BudgetError, DegreeMismatchError, InfeasibleError, PreconditionError
from .frobenius import (
    CharSum,
    family_sum,
    min_dimension,
    ncycle_family_sum,
    regroup_residual,
    triple_count,
)
from .oracle import (
    RealizabilityVerdict,
    brute_triple_count,
    conjecture_scan,
    is_transitive,
    realizability,
)
from .partitions import (
    ClassMetrics,
    CycleClass,
    FamilySelector,
    Partition,
    check_condition_a,
    check_condition_b,
    class_metrics,
    enumerate_partitions,
    format_parts,
    make_condition_b_classes,
    parse_cycle_class,
    parse_family,
    parse_partition,
    partition_count,
)

__version__ = "0.1.0"
