"""Brute-force references and generators used to verify the fast path.

Everything here favors directness over speed: balance is checked straight
from the definition, minimal factorization length by dynamic programming,
and the generators follow the textbook constructions. None of it shares
arithmetic with the scanner in `dscore`, which is the point.
"""

from __future__ import annotations

from math import gcd
from typing import Callable, Iterator, List, NamedTuple

from .dscore import as_word, mod_inverse, validate_code
from .errors import BoundExceeded, InvalidSlope, NotChristoffel

PeriodArray = List[int]

_MASK64 = (1 << 64) - 1
_ASCII_TO_BIT = bytes.maketrans(b"01", b"\x00\x01")


class PalindromeSplit(NamedTuple):
    alpha: bytes
    beta: bytes


def is_balanced_bruteforce(w) -> bool:
    """Balance straight from the definition.

    For every factor length, the 1-counts over all windows of that length
    must span at most 1. Quadratic via prefix sums; fine at oracle scale.
    """
    w = bytes(w)
    n = len(w)
    pref = [0] * (n + 1)
    for i, b in enumerate(w):
        pref[i + 1] = pref[i] + b
    for length in range(1, n + 1):
        lo = hi = pref[length]
        for i in range(1, n - length + 1):
            c = pref[i + length] - pref[i]
            if c < lo:
                lo = c
            elif c > hi:
                hi = c
            if hi - lo > 1:
                return False
    return True


def longest_balanced_prefix_naive(w) -> int:
    """Length of the longest balanced prefix, one brute-force check per prefix.

    Balance is factor-closed, so the first unbalanced prefix ends the scan.
    """
    w = bytes(w)
    best = 0
    for length in range(1, len(w) + 1):
        if not is_balanced_bruteforce(w[:length]):
            break
        best = length
    return best


def period_array(w) -> PeriodArray:
    """Minimal period of every prefix: entry i-1 is i minus the longest
    border of the length-i prefix (failure-function construction)."""
    w = bytes(w)
    n = len(w)
    border = [0] * n
    k = 0
    for i in range(1, n):
        while k and w[i] != w[k]:
            k = border[k - 1]
        if w[i] == w[k]:
            k += 1
        border[i] = k
    return [i + 1 - border[i] for i in range(n)]


def balanced_via_period_array(w) -> bool:
    """Period-array divisibility test for balance.

    Group the period array into maximal runs p1^k1 ... pm^km with
    p1 < ... < pm; the word is balanced iff every interior run satisfies
    p_j | k_j or p_j | (k_j + p_{j-1}). Cross-checked exhaustively against
    the brute-force test, which stays authoritative.
    """
    runs: list[list[int]] = []
    for v in period_array(w):
        if runs and runs[-1][0] == v:
            runs[-1][1] += 1
        else:
            runs.append([v, 1])
    for j in range(1, len(runs) - 1):
        pj, kj = runs[j]
        if kj % pj and (kj + runs[j - 1][0]) % pj:
            return False
    return True


def christoffel(h: int, p: int) -> bytes:
    """Lower Christoffel word with h ones among p letters.

    The i-th letter is floor(ih/p) - floor((i-1)h/p). Lyndon for p > 1.
    """
    if p < 1 or h < 0 or h > p or gcd(h, p) != 1:
        raise InvalidSlope(
            f"need p >= 1, 0 <= h <= p and gcd(h, p) = 1; got h={h} p={p}")
    return bytes(i * h // p - (i - 1) * h // p for i in range(1, p + 1))


def decode_by_rotation(code) -> bytes:
    """Decode by rotating the Christoffel root right s times and repeating.

    The counterpart of the arithmetic decoder; both must produce identical
    words for every valid code.
    """
    n, p, h, s = validate_code(code)
    u = christoffel(h, p)
    root = u[p - s:] + u[:p - s] if s else u
    return (root * ((n + p - 1) // p))[:n]


def palindromic_split(u) -> PalindromeSplit:
    """The unique split of a Christoffel word into two palindromes.

    |alpha| is the inverse of the 0-count modulo the length; membership is
    checked by regenerating the Christoffel word of the candidate's own
    height and length and comparing.
    """
    u = as_word(u)
    p = len(u)
    if p < 2:
        raise NotChristoffel(f"need length >= 2, got {p}")
    h = sum(u)
    if gcd(h, p) != 1 or christoffel(h, p) != u:
        raise NotChristoffel("not a lower Christoffel word")
    cut = mod_inverse(p - h, p)
    return PalindromeSplit(u[:cut], u[cut:])


def fibonacci_word(k: int) -> bytes:
    """The k-th Fibonacci word: f1 = 1, f2 = 0, f(k) = f(k-1) f(k-2)."""
    if k < 1:
        raise ValueError(f"index must be >= 1, got {k}")
    a, b = b"\x01", b"\x00"
    if k == 1:
        return a
    for _ in range(k - 2):
        a, b = b, b + a
    return b


def minimal_factorization_length_dp(w, balanced: Callable[[bytes], bool] | None = None) -> int:
    """Fewest balanced factors whose concatenation is `w` (0 for the empty word).

    Dynamic programming over all substrings with the brute-force balance
    test; `balanced` may inject a cached copy of that same predicate.
    """
    if balanced is None:
        balanced = is_balanced_bruteforce
    w = bytes(w)
    n = len(w)
    best = [0] + [n + 1] * n
    for j in range(1, n + 1):
        b = n + 1
        for i in range(j):
            if best[i] + 1 < b and balanced(w[i:j]):
                b = best[i] + 1
        best[j] = b
    return best[n]


def words_of_length(n: int) -> Iterator[bytes]:
    """Every binary word of length n, in lexicographic order."""
    for bits in range(1 << n):
        yield bytes(bits >> (n - 1 - k) & 1 for k in range(n))


def count_balanced(n: int, bound: int = 16) -> int:
    """Number of balanced words of length n, by exhaustive scan."""
    if n > bound:
        raise BoundExceeded(f"n={n} exceeds the exhaustive bound {bound}")
    return sum(1 for w in words_of_length(n) if is_balanced_bruteforce(w))


def random_word(n: int, seed: int) -> bytes:
    """Deterministic pseudo-random word of length n.

    Letters are the bits of successive splitmix64 outputs, most significant
    bit first, so a given (n, seed) pair reproduces the same word on every
    platform and release.
    """
    if n < 0:
        raise ValueError(f"length must be >= 0, got {n}")
    x = seed & _MASK64
    chunks = []
    for _ in range((n + 63) // 64):
        x = (x + 0x9E3779B97F4A7C15) & _MASK64
        z = x
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK64
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK64
        z ^= z >> 31
        chunks.append(f"{z:064b}")
    return "".join(chunks)[:n].encode("ascii").translate(_ASCII_TO_BIT)
