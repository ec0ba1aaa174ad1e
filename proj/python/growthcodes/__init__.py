"""Recursive linear code families over prime fields."""

from ._core import (
    BudgetExceeded,
    CompositeModulus,
    DependentBasis,
    GrowthCodesError,
    LinearCode,
    ParseError,
    RangeViolation,
    UnknownFamily,
    check_bounded,
    construction_step,
    direct_sum,
    family_code,
    growth_table,
    is_prime,
    iterate,
    predict_params,
    repetition,
    rm_generator,
    rm_params,
    rm_third,
    run_cli,
    seed_code,
    seed_matrix,
    series_params,
    theorem_main_check,
)

__all__ = [name for name in dir() if not name.startswith("_")]
