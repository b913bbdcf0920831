"""Nonadaptive group testing codes.

Construct pooling designs (superimposed and separating codes), verify their
defining combinatorial properties, simulate the disjunct, superset and
inhibitor test models, and decode result vectors back to the hidden
structure.

Bit vectors cross the boundary as strings of '0'/'1' characters; sample
indices are 0-based lists (the text file formats and the CLI stay 1-based).
"""

from gtcodes._core import (
    BinaryCode,
    DimensionError,
    DomainError,
    FormatError,
    MdsParams,
    QaryCode,
    TooLargeError,
    VerifyReport,
    builtin,
    concatenate,
    decode_disjunct,
    decode_inhibitor,
    decode_superset,
    dedupe_rows,
    enumerate_complexes,
    enumerate_defective_sets,
    enumerate_pi,
    identity_code,
    is_inhibitory_code,
    is_mds,
    is_separating,
    is_superimposed,
    is_superimposed_sl,
    mds_implies_separating,
    min_distance,
    oracle_disjunct_design,
    oracle_inhibitory_design,
    oracle_superset_design,
    reed_solomon,
    restrict_columns,
    result_disjunct,
    result_inhibitor,
    result_superset,
    rs_concatenation,
    set_max_threads,
    spot_check_sl,
    take_rows,
    trivial_code,
    __version__,
)

__all__ = [
    "BinaryCode",
    "DimensionError",
    "DomainError",
    "FormatError",
    "MdsParams",
    "QaryCode",
    "TooLargeError",
    "VerifyReport",
    "builtin",
    "concatenate",
    "decode_disjunct",
    "decode_inhibitor",
    "decode_superset",
    "dedupe_rows",
    "enumerate_complexes",
    "enumerate_defective_sets",
    "enumerate_pi",
    "identity_code",
    "is_inhibitory_code",
    "is_mds",
    "is_separating",
    "is_superimposed",
    "is_superimposed_sl",
    "mds_implies_separating",
    "min_distance",
    "oracle_disjunct_design",
    "oracle_inhibitory_design",
    "oracle_superset_design",
    "reed_solomon",
    "restrict_columns",
    "result_disjunct",
    "result_inhibitor",
    "result_superset",
    "rs_concatenation",
    "set_max_threads",
    "spot_check_sl",
    "take_rows",
    "trivial_code",
]
