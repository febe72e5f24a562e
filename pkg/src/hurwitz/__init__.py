"""Exact arithmetic for mixed double Hurwitz numbers.

Walk counts in the symmetric group with a monotone prefix, their
character-sum evaluation, the connected numbers through the series
logarithm, content-product tau functions for the first 2-Toda bilinear
equation, and chamber-wise polynomial interpolation over the resonance
arrangement.  Everything is computed over exact rationals.
"""

from .characters import CharacterTable, character, character_table, sign_of_class
from .chambers import (
    ChamberPoint,
    PolynomialFit,
    evaluate_fit,
    fit_chamber_polynomial,
    same_chamber,
    sample_chamber,
    wall_signs,
)
from .engine import (
    HurwitzValue,
    OnWallError,
    genus_classical,
    h_char,
    h_connected,
    hurwitz_value,
    is_on_wall,
    parity_vanishes,
    reconstruct_w_from_h,
    s_transform,
    w_char,
)
from .partitions import (
    Partition,
    class_size,
    conjugate,
    contents,
    dimension,
    pad_with_ones,
    partitions_of,
    union,
    z_order,
)
from .regular_functions import (
    RegularFunction,
    eval_er,
    eval_hk,
    eval_hook,
    eval_regular,
    sum_contents,
)
from .series import TruncatedSeries
from .toda import build_tau, shift_substitution_check, toda_first_equation_check
from .walks import (
    AlgebraVector,
    class_sum,
    count_walks,
    count_walks_direct,
    jm_element,
    verify_central_character,
    verify_jm_levels,
)

__version__ = "0.1.0"

__all__ = [
    "AlgebraVector",
    "ChamberPoint",
    "CharacterTable",
    "HurwitzValue",
    "OnWallError",
    "Partition",
    "PolynomialFit",
    "RegularFunction",
    "TruncatedSeries",
    "build_tau",
    "character",
    "character_table",
    "class_size",
    "class_sum",
    "conjugate",
    "contents",
    "count_walks",
    "count_walks_direct",
    "dimension",
    "eval_er",
    "eval_hk",
    "eval_hook",
    "eval_regular",
    "evaluate_fit",
    "fit_chamber_polynomial",
    "genus_classical",
    "h_char",
    "h_connected",
    "hurwitz_value",
    "is_on_wall",
    "jm_element",
    "pad_with_ones",
    "parity_vanishes",
    "partitions_of",
    "reconstruct_w_from_h",
    "s_transform",
    "same_chamber",
    "sample_chamber",
    "sign_of_class",
    "sum_contents",
    "toda_first_equation_check",
    "shift_substitution_check",
    "union",
    "verify_central_character",
    "verify_jm_levels",
    "w_char",
    "wall_signs",
    "z_order",
]
