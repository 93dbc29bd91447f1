"""Persistence barcodes, bottleneck distances and Dehn-twist word obstructions."""

from .barcode import (
    INF,
    Bar,
    Barcode,
    ShiftClass,
    canonical_form,
    format_barcode,
    parse_barcode,
    shift,
    sigma_inf,
    validate,
)
from .bottleneck import bottleneck_distance, brute_force_distance, candidate_deltas, compatible, delta_matching_exists
from .persistence import FilteredComplex, Generator, barcode_of_complex, homology_rank, perturb_actions, validate_complex
from .shift_space import BarcodePath, cauchy_check, check_path, grid_oracle_shift_distance, same_component, shift_distance
from .twist_word import RankHypotheses, TwistWord, derive_obstruction, parse_and_reduce, verify_certificate

__all__ = [
    "INF", "Bar", "Barcode", "ShiftClass", "canonical_form", "format_barcode", "parse_barcode",
    "shift", "sigma_inf", "validate",
    "bottleneck_distance", "brute_force_distance", "candidate_deltas", "compatible",
    "delta_matching_exists",
    "FilteredComplex", "Generator", "barcode_of_complex", "homology_rank", "perturb_actions",
    "validate_complex",
    "BarcodePath", "cauchy_check", "check_path", "grid_oracle_shift_distance", "same_component",
    "shift_distance",
    "RankHypotheses", "TwistWord", "derive_obstruction", "parse_and_reduce", "verify_certificate",
]
