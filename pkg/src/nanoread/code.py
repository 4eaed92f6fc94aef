"""Single-deletion read code: checksum membership, encoding, decoding.

Codewords are binary words whose read-vector mod-2 prefix satisfies a
weighted checksum fixed modulo n+1.  A single deletion anywhere in the
read vector is corrected either immediately (a gap of 2 between
adjacent entries pins the error position) or by classical
insertion-correcting decoding of the truncated mod-2 prefix.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .balls import deletion_ball
from .core import Word, is_valid_read_vector, read_vector, recover_from_mod2

MAX_ENUM_N = 24


class DecodeFailure(Exception):
    """No codeword is consistent with the received sequence."""


class MalformedInputError(ValueError):
    """Input cannot arise from a single deletion on any read vector."""


class ResourceLimitError(RuntimeError):
    """Requested enumeration exceeds the guarded problem size."""


@dataclass(frozen=True)
class CodeParams:
    n: int
    window: int
    residue: int

    def __post_init__(self) -> None:
        if not 1 <= self.window <= self.n:
            raise ValueError("need n >= window >= 1")
        if not 0 <= self.residue <= self.n:
            raise ValueError("residue must lie in {0, ..., n}")


@dataclass(frozen=True)
class DecodeOutcome:
    word: Word
    path: str  # "no-deletion", "immediate" or "vt"


def syndrome(x: Sequence[int], n: int, window: int) -> int:
    """Weighted checksum of the read vector's mod-2 prefix, mod n+1."""
    if len(x) != n:
        raise ValueError(f"word length {len(x)} != n = {n}")
    rv = read_vector(x, window)
    return sum(i * (rv[i - 1] % 2) for i in range(1, n + 1)) % (n + 1)


def is_member(x: Sequence[int], params: CodeParams) -> bool:
    return syndrome(x, params.n, params.window) == params.residue


def _all_words(n: int):
    if n > MAX_ENUM_N:
        raise ResourceLimitError(f"enumeration guarded at n <= {MAX_ENUM_N}")
    for v in range(1 << n):
        yield tuple((v >> (n - 1 - i)) & 1 for i in range(n))


def enumerate_code(params: CodeParams) -> list[Word]:
    """All codewords in lexicographic order."""
    return [x for x in _all_words(params.n) if is_member(x, params)]


def residue_sizes(n: int, window: int) -> list[int]:
    """Codeword count of every residue class; the classes partition 2^n."""
    counts = [0] * (n + 1)
    for x in _all_words(n):
        counts[syndrome(x, n, window)] += 1
    return counts


def best_residue(n: int, window: int) -> tuple[int, int]:
    """Residue with the largest code, ties broken by smallest residue."""
    counts = residue_sizes(n, window)
    size = max(counts)
    return counts.index(size), size


def encode(message_index: int, params: CodeParams) -> Word:
    """Codeword at the given lexicographic rank."""
    codewords = enumerate_code(params)
    if not 0 <= message_index < len(codewords):
        raise ValueError(
            f"message index {message_index} out of range [0, {len(codewords)})"
        )
    return codewords[message_index]


def immediate_correct(candidate: Sequence[int]) -> tuple[int, ...] | None:
    """Repair a deletion that left a gap of 2 between adjacent entries.

    Returns the repaired read vector, or None when every adjacent
    difference is at most 1 (the gap-free case needs checksum decoding).
    """
    candidate = tuple(candidate)
    for i in range(len(candidate) - 1):
        d = candidate[i + 1] - candidate[i]
        if abs(d) > 2:
            raise MalformedInputError(
                f"adjacent gap of {d} at position {i + 1} cannot arise "
                "from a single deletion"
            )
        if abs(d) == 2:
            mid = candidate[i] + (1 if d > 0 else -1)
            return candidate[: i + 1] + (mid,) + candidate[i + 1 :]
    return None


def vt_insert(received: Sequence[int], residue: int, n: int) -> tuple[int, ...]:
    """Recover the length-n bit sequence with checksum residue mod n+1.

    Tries every insertion position and symbol; the checksum constraint
    leaves exactly one candidate when the input really arose from a
    single deletion.
    """
    received = tuple(received)
    if len(received) != n - 1:
        raise ValueError(f"received length {len(received)} != n - 1 = {n - 1}")
    survivors = set()
    for i in range(n):
        for b in (0, 1):
            cand = received[:i] + (b,) + received[i:]
            if sum(j * cand[j - 1] for j in range(1, n + 1)) % (n + 1) == residue:
                survivors.add(cand)
    if not survivors:
        raise DecodeFailure("no insertion meets the checksum")
    if len(survivors) > 1:
        raise DecodeFailure(f"ambiguous checksum decoding: {sorted(survivors)}")
    return survivors.pop()


def decode(candidate: Sequence[int], params: CodeParams) -> DecodeOutcome:
    """Recover the transmitted codeword from an intact or once-deleted read.

    Full-length inputs are validated and inverted directly.  Shortened
    inputs first try gap repair; failing that, the first n-1 entries mod
    2 are decoded against the checksum and the word is rebuilt from the
    recovered prefix.
    """
    candidate = tuple(candidate)
    n, window = params.n, params.window
    full = n + window - 1

    if len(candidate) == full:
        if not is_valid_read_vector(candidate, window, n):
            raise DecodeFailure("full-length input is not a legitimate read vector")
        x = recover_from_mod2([s % 2 for s in candidate[:n]], window)
        return DecodeOutcome(word=x, path="no-deletion")

    if len(candidate) != full - 1:
        raise ValueError(
            f"candidate length {len(candidate)} must be {full} or {full - 1}"
        )

    repaired = immediate_correct(candidate)
    if repaired is not None:
        if not is_valid_read_vector(repaired, window, n):
            raise DecodeFailure("gap repair did not yield a legitimate read vector")
        x = recover_from_mod2([s % 2 for s in repaired[:n]], window)
        return DecodeOutcome(word=x, path="immediate")

    prefix = vt_insert([s % 2 for s in candidate[: n - 1]], params.residue, n)
    x = recover_from_mod2(prefix, window)
    if candidate not in deletion_ball(read_vector(x, window)):
        raise DecodeFailure("recovered word is inconsistent with the received read")
    return DecodeOutcome(word=x, path="vt")
