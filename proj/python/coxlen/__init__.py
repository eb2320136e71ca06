"""Reflection length in affine Weyl groups."""

from ._core import (
    BudgetExceeded,
    CoxlenError,
    DomainError,
    ParseError,
    RootSystem,
    UnsupportedError,
    brute_nullity,
    brute_reflection_length,
    classify_coroots,
    cycles,
    dimension_report,
    l_map,
    local_genfun,
    min_factorization,
    minimal_null_blocks,
    null_complex,
    nullity,
    reflection_length,
    relative_nullity,
    render_svg,
    spherical_genfun,
    translation_elliptic_split,
    window_length,
    window_normal_form,
)

__all__ = [
    "BudgetExceeded",
    "CoxlenError",
    "DomainError",
    "ParseError",
    "RootSystem",
    "UnsupportedError",
    "brute_nullity",
    "brute_reflection_length",
    "classify_coroots",
    "cycles",
    "dimension_report",
    "l_map",
    "local_genfun",
    "min_factorization",
    "minimal_null_blocks",
    "null_complex",
    "nullity",
    "reflection_length",
    "relative_nullity",
    "render_svg",
    "spherical_genfun",
    "translation_elliptic_split",
    "window_length",
    "window_normal_form",
]
