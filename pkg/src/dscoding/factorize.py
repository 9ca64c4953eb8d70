"""Greedy factorization of arbitrary binary words into balanced factors.

Balanced words form a factor-closed language, so the greedy factorization
(always take the longest balanced prefix of what remains) is minimal in the
number of factors. The scanner restarts in place at the letter that broke
balance, so a whole encode is one left-to-right pass with constant working
state per position.
"""

from __future__ import annotations

from array import array
from itertools import chain
from typing import Iterator, List, NamedTuple

from . import _backend
from .dscore import DsCode, as_word

Coding = List[DsCode]


class CodingStats(NamedTuple):
    factor_count: int
    total_length: int
    min_length: int | None
    max_length: int | None
    mean_length: float | None


def greedy_encode(w) -> Coding:
    """Minimal factorization of `w` into balanced factors, one DsCode each.

    The empty word encodes to an empty list.
    """
    flat = memoryview(_backend.scan_codes(as_word(w))).cast("q")
    return [DsCode(*flat[k:k + 4]) for k in range(0, len(flat), 4)]


def iter_codes(w) -> Iterator[DsCode]:
    """Factors of `w` in order, as DsCode tuples."""
    yield from greedy_encode(w)


def decode_all(codes) -> bytes:
    """Concatenation of the decoded factors, the inverse of greedy_encode."""
    return _backend.decode_codes(array("q", chain.from_iterable(codes)))


def stats(codes) -> CodingStats:
    """Factor count, total length and length aggregates of a coding."""
    lengths = [c[0] for c in codes]
    if not lengths:
        return CodingStats(0, 0, None, None, None)
    total = sum(lengths)
    return CodingStats(len(lengths), total, min(lengths), max(lengths),
                       total / len(lengths))
