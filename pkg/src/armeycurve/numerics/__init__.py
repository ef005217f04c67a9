"""Linear algebra, distribution functions and critical-value tables."""
from .distributions import (
    chi_square_cdf,
    chi_square_sf,
    normal_cdf,
    normal_sf,
    student_t_cdf,
    student_t_sf,
    t_two_sided_pvalue,
)
from .linalg import solve_least_squares
from .tables import (
    ADF_VARIANTS,
    CUSUM_CRITICAL,
    LEVELS,
    ZA_BREAK_TYPES,
    CriticalValueTable,
    lookup_critical,
)

__all__ = [
    "ADF_VARIANTS",
    "CUSUM_CRITICAL",
    "CriticalValueTable",
    "LEVELS",
    "ZA_BREAK_TYPES",
    "chi_square_cdf",
    "chi_square_sf",
    "lookup_critical",
    "normal_cdf",
    "normal_sf",
    "solve_least_squares",
    "student_t_cdf",
    "student_t_sf",
    "t_two_sided_pvalue",
]
