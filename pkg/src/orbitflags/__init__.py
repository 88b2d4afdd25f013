"""Cyclic orbit flag codes on finite fields: construction, parameters and decoding."""

from orbitflags.decoder import (
    DecodeOutcome,
    DecodingError,
    StutteringFlag,
    channel_sim,
    decode,
    erase,
    find_correctable_shot,
)
from orbitflags.flagcodes import (
    CodeReport,
    ConstructionError,
    FlagCode,
    basic_construction,
    code_report,
    galois_construction,
    orbit_flag_code,
    weaved_construction,
)
from orbitflags.flags import Flag, flag_distance, make_flag
from orbitflags.gfield import FieldCtx, FieldElement, build_field
from orbitflags.potential_distances import potential_values
from orbitflags.subspaces import Subspace, subfield

__all__ = [
    "CodeReport",
    "ConstructionError",
    "DecodeOutcome",
    "DecodingError",
    "FieldCtx",
    "FieldElement",
    "Flag",
    "FlagCode",
    "StutteringFlag",
    "Subspace",
    "basic_construction",
    "build_field",
    "channel_sim",
    "code_report",
    "decode",
    "erase",
    "find_correctable_shot",
    "flag_distance",
    "galois_construction",
    "make_flag",
    "orbit_flag_code",
    "potential_values",
    "subfield",
    "weaved_construction",
]
