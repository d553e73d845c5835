"""qinj: exact q-series dominance and colored-partition injections.

Expands reciprocal Pochhammer products as truncated integer series,
enumerates the colored partitions they count, applies the forward,
inverse, and dual injections between the two part families, and checks
the resulting coefficientwise inequalities, refinements, and
lecture-hall correspondences at desk scale.
"""

from .injection import (
    Diagnostics,
    inject,
    inject_dual,
    inject_main,
    invert,
    invert_dual,
    invert_main,
    mod_inverse,
)
from .partitions import (
    CODOMAIN,
    DOMAIN,
    DUAL,
    GEN,
    MAIN,
    EMPTY_PARTITION,
    Family,
    Params,
    Part,
    Partition,
    enumerate_flat_constrained,
    enumerate_partitions,
    flat_norm,
    flatten,
    norm,
    nu_decompose,
    part_list,
    product_spec,
    validate_partition,
)
from .series import (
    HOLDS,
    SKIPPED,
    VIOLATED,
    ProductSpec,
    Series,
    Verdict,
    coefficients_equal,
    dominance,
    expand_product,
    qbinom,
    series_add,
    series_mul,
    series_sub,
    stabilized_length,
)
from .verify import (
    CrossCheckError,
    InjectionRecord,
    LECTURE_HALL_VARIANTS,
    SearchReport,
    bg_expected_nonnegative,
    check_flat_refinement,
    flat_component_series,
    injection_table,
    lecture_hall_check,
    refinement_side_series,
    search_exceptions,
    sweep_ranges,
    verify_bg,
    verify_dual,
    verify_gen,
    verify_main,
    verify_refinement1,
    verify_refinement2,
    verify_refinement3,
)

__version__ = "0.1.0"
