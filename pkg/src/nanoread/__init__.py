"""Sliding-window read channel: transform, deletion code, reconstruction."""

from .balls import (
    confusable,
    deletion_ball,
    restricted_ball,
    rho_geq,
    runs,
    sticky_ball,
    sticky_read_images,
)
from .bounds import (
    BoundReport,
    bound_report,
    expected_runs,
    redundancy_lower_bound,
    tail_count,
    weighted_sum,
)
from .code import (
    CodeParams,
    DecodeFailure,
    DecodeOutcome,
    best_residue,
    decode,
    encode,
    enumerate_code,
    immediate_correct,
    is_member,
    syndrome,
    vt_insert,
)
from .core import (
    LengthMismatchError,
    hamming_distance,
    is_valid_read_vector,
    read_vector,
    recover_from_mod2,
    weight,
)
from .reconstruct import disagreement_span, reconstruct_two

__version__ = "0.1.0"

__all__ = [
    "BoundReport",
    "CodeParams",
    "DecodeFailure",
    "DecodeOutcome",
    "LengthMismatchError",
    "best_residue",
    "bound_report",
    "confusable",
    "decode",
    "deletion_ball",
    "disagreement_span",
    "encode",
    "enumerate_code",
    "expected_runs",
    "hamming_distance",
    "immediate_correct",
    "is_member",
    "is_valid_read_vector",
    "read_vector",
    "reconstruct_two",
    "recover_from_mod2",
    "redundancy_lower_bound",
    "restricted_ball",
    "rho_geq",
    "runs",
    "sticky_ball",
    "sticky_read_images",
    "syndrome",
    "tail_count",
    "vt_insert",
    "weight",
    "weighted_sum",
]
