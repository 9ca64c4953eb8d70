"""Shared helpers and golden data for the test suite."""

from dscoding.dscore import DsCode


def W(s: str) -> bytes:
    """Word literal: '0101' -> b'\\x00\\x01\\x00\\x01'."""
    return bytes(int(c) for c in s)


def A(w: bytes) -> str:
    """ASCII rendering of a word."""
    return "".join("01"[b] for b in w)


def words_up_to(max_len: int, min_len: int = 1):
    """Every binary word with min_len <= length <= max_len."""
    for n in range(min_len, max_len + 1):
        for bits in range(1 << n):
            yield bytes(bits >> (n - 1 - k) & 1 for k in range(n))


def random_words(count: int, max_len: int, seed: int):
    """Reproducible random test words."""
    import random
    rng = random.Random(seed)
    table = bytes.maketrans(bytes(range(256)), bytes(b & 1 for b in range(256)))
    for _ in range(count):
        yield rng.randbytes(rng.randrange(max_len + 1)).translate(table)


# 40-letter golden word and its published coding
WORD40 = W("0101001101010000010010010101001001000101")
CODING40 = [
    DsCode(7, 5, 2, 4),
    DsCode(7, 7, 3, 5),
    DsCode(11, 10, 3, 0),
    DsCode(11, 11, 4, 3),
    DsCode(4, 2, 1, 0),
]
FACTORS40 = ["0101001", "1010100", "00010010010", "10100100100", "0101"]
