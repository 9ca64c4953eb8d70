"""Coding algebra for balanced (Sturmian) binary words.

A word is `bytes` whose values are 0/1 (ASCII conversion lives in `dsio`).
Every balanced word is identified by the 4-tuple DsCode(n, p, h, s): its
length, its minimal period, the number of 1s in the fractional root (the
prefix of length p), and the rotation distance s from the root to its
Christoffel conjugate. Rotating the root left by s gives the lower
Christoffel word of slope h/p; equivalently the root is that word
right-rotated s times.

Positions are 1-based in every formula here. The i-th letter of the coded
word is floor((i-s)h/p) - floor((i-s-1)h/p), with floor toward minus
infinity since i-s-1 may be negative.
"""

from __future__ import annotations

import enum
from array import array
from math import gcd
from typing import NamedTuple

from . import _backend
from .errors import (CannotExtend, EmptyInput, InvalidCode, NotInvertible,
                     OutOfRange, Unary)

Letter = int
BinaryWord = bytes


class DsCode(NamedTuple):
    """Length, minimal period, root height and shift of a balanced word."""

    n: int
    p: int
    h: int
    s: int


class ExtendOutcome(enum.Enum):
    """How a one-letter extension relates to the current coding."""

    SAME_PERIOD = "same_period"   # the extension keeps period p
    ROOT_GROWS = "root_grows"     # still balanced, minimal period grows
    UNBALANCED = "unbalanced"     # the extension leaves the language


def as_word(w) -> bytes:
    """Coerce to a 0/1-valued bytes word, validating every letter."""
    w = bytes(w)
    if w.translate(None, b"\x00\x01"):
        for i, b in enumerate(w):
            if b > 1:
                raise ValueError(
                    f"word bytes must be 0 or 1, found {b} at index {i}")
    return w


def mod_inverse(a: int, m: int) -> int:
    """Inverse of a modulo m in [0, m), by the extended Euclidean algorithm.

    For m = 1 the inverse is 0. Raises NotInvertible when gcd(a, m) != 1.
    """
    if m < 1:
        raise ValueError(f"modulus must be >= 1, got {m}")
    if m == 1:
        return 0
    a %= m
    old_r, r = a, m
    old_t, t = 1, 0
    while r:
        q = old_r // r
        old_r, r = r, old_r - q * r
        old_t, t = t, old_t - q * t
    if old_r != 1:
        raise NotInvertible(f"{a} has no inverse modulo {m} (gcd {old_r})")
    return old_t % m


def validate_code(code) -> DsCode:
    """Check the structural invariants and return the code as a DsCode.

    Checks 1 <= p <= n, 0 <= s < p, and the height rule: h in {0, 1} when
    p = 1, else 1 <= h < p with gcd(h, p) = 1. That the decoded word has
    minimal period exactly p is a property of encoder output, verified by
    the test suite rather than re-derived here (it would cost a decode).
    """
    try:
        n, p, h, s = code
    except (TypeError, ValueError):
        raise InvalidCode("a code is four integers (n, p, h, s)") from None
    if n < 1:
        raise InvalidCode(f"n must be >= 1, got {n}")
    if not 1 <= p <= n:
        raise InvalidCode(f"need 1 <= p <= n, got p={p} n={n}")
    if not 0 <= s < p:
        raise InvalidCode(f"need 0 <= s < p, got s={s} p={p}")
    if p == 1:
        if h not in (0, 1):
            raise InvalidCode(f"p = 1 needs h in {{0, 1}}, got h={h}")
    else:
        if not 1 <= h < p:
            raise InvalidCode(f"need 1 <= h < p, got h={h} p={p}")
        if gcd(h, p) != 1:
            raise InvalidCode(f"h and p must be coprime, got h={h} p={p}")
    return DsCode(n, p, h, s)


def letter_at(code, i: int) -> Letter:
    """The i-th letter (1-based) of the word coded by `code`.

    Floor division must round toward minus infinity here: for i <= s the
    numerators are negative.
    """
    n, p, h, s = code
    if not 1 <= i <= n:
        raise OutOfRange(f"position {i} outside 1..{n}")
    return (i - s) * h // p - (i - s - 1) * h // p


def decode_code(code) -> BinaryWord:
    """The unique word of length n coded by `code`."""
    c = validate_code(code)
    return _backend.decode_codes(array("q", c))


def can_extend(code, a: Letter) -> ExtendOutcome:
    """Classify appending letter `a` to the word coded by `code`.

    The extension keeps period p exactly when `a` continues the periodic
    pattern. Otherwise the word must be right special for the extension to
    stay balanced, which the arithmetic test r = (-h(n+1-s)) mod p decides:
    the root grows iff r equals `a`. A unary word (p = 1) extends both ways.
    """
    n, p, h, s = validate_code(code)
    if a not in (0, 1):
        raise ValueError(f"letter must be 0 or 1, got {a!r}")
    if a == letter_at(code, n + 1 - p):
        return ExtendOutcome.SAME_PERIOD
    if p == 1:
        return ExtendOutcome.ROOT_GROWS
    r = (-h * (n + 1 - s)) % p
    if r > 1:
        return ExtendOutcome.UNBALANCED
    assert r == a, "arithmetic test out of step with the mismatching letter"
    return ExtendOutcome.ROOT_GROWS


def extend(code, a: Letter) -> DsCode:
    """Coding of w·a given the coding of w; raises CannotExtend if unbalanced.

    When the period survives only n changes. When the root grows, all of
    (p, h, s) are recomputed from the old values:

        p' = n+1 - ((n+1 - (-1)^a h~) mod p)
        h' = floor((n+1 - (-1)^a h~)/p) h + (-1)^a floor(h h~ / p)
        s' = a s + (1-a)(n+1-p)

    with h~ the inverse of h modulo p. A unary run (p = 1) grows into the
    length-(n+1) Christoffel root directly; the formulas above need p > 1.
    """
    outcome = can_extend(code, a)
    n, p, h, s = code
    if outcome is ExtendOutcome.UNBALANCED:
        raise CannotExtend(
            f"appending {a} to the word coded {tuple(code)} is unbalanced")
    if outcome is ExtendOutcome.SAME_PERIOD:
        return DsCode(n + 1, p, h, s)
    if p == 1:
        q = n + 1
        return DsCode(q, q, (-1) ** h % q, (-h) % q)
    hbar = mod_inverse(h, p)
    sign = 1 if a == 0 else -1
    t = n + 1 - sign * hbar
    p2 = n + 1 - t % p
    h2 = (t // p) * h + sign * (h * hbar // p)
    s2 = s if a else n + 1 - p
    return DsCode(n + 1, p2, h2, s2)


def init_code(w) -> DsCode:
    """Coding of the shortest prefix of `w` that contains both letters.

    That prefix is q-1 copies of the first letter followed by the other
    one; its coding is (q, q, (-1)^w1 mod q, (-w1) mod q).
    """
    w = as_word(w)
    first = w[0] if w else 0
    for idx in range(1, len(w)):
        if w[idx] != first:
            q = idx + 1
            return DsCode(q, q, (-1) ** first % q, (-first) % q)
    raise Unary("word is empty or a power of a single letter")


def longest_sturmian_prefix(w) -> DsCode:
    """Coding of the longest balanced prefix of `w`, in one pass.

    A word of a single repeated letter codes as (n, 1, letter, 0); anything
    else starts from `init_code` and grows one letter at a time until the
    arithmetic test rejects.
    """
    w = as_word(w)
    if not w:
        raise EmptyInput("the empty word has no coding")
    return DsCode(*_backend.scan_prefix(w))
