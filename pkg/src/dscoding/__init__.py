"""Coding of binary words as lists of (n, p, h, s) tuples.

Each tuple is the Dorst-Smeulders coding of one balanced (Sturmian) factor
in the greedy minimal factorization of the input: its length, minimal
period, root height and rotation shift. Encoding is a single online pass;
decoding is pure integer arithmetic.
"""

from ._backend import backend_name
from .dscore import (BinaryWord, DsCode, ExtendOutcome, Letter, can_extend,
                     decode_code, extend, init_code, letter_at,
                     longest_sturmian_prefix, mod_inverse, validate_code)
from .factorize import (Coding, CodingStats, decode_all, greedy_encode,
                        iter_codes, stats)

__version__ = "0.1.0"

__all__ = [
    "BinaryWord",
    "Coding",
    "CodingStats",
    "DsCode",
    "ExtendOutcome",
    "Letter",
    "backend_name",
    "can_extend",
    "decode_all",
    "decode_code",
    "extend",
    "greedy_encode",
    "init_code",
    "iter_codes",
    "letter_at",
    "longest_sturmian_prefix",
    "mod_inverse",
    "stats",
    "validate_code",
]
