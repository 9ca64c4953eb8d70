"""Pure-Python scan/decode kernels.

Fallback for the compiled extension, selected by `_backend` when the
extension is unavailable or when DSCODING_BACKEND=python forces it.
Interface and results match `_kernel` exactly; only the speed differs.

Words are bytes with values 0/1. Codings travel as flat buffers of native
int64 quadruples (n, p, h, s), one per factor.
"""

from array import array
from math import gcd

from .errors import InvalidCode

name = "python"


def _check_letters(w: bytes) -> None:
    if w.translate(None, b"\x00\x01"):
        for i, b in enumerate(w):
            if b > 1:
                raise ValueError(
                    f"word bytes must be 0 or 1, found {b} at index {i}")


def _modinv(a: int, m: int) -> int:
    # extended Euclid; callers guarantee 0 < a < m and gcd(a, m) == 1
    old_r, r = a, m
    old_t, t = 1, 0
    while r:
        q = old_r // r
        old_r, r = r, old_r - q * r
        old_t, t = t, old_t - q * t
    return old_t % m


def iter_scan(w: bytes):
    """Yield one (n, p, h, s) quadruple per greedy balanced factor.

    Single left-to-right pass; the working state is the current tuple plus
    two cursors, independent of the input length. The caller must have
    validated that `w` contains only 0/1 bytes.
    """
    N = len(w)
    i = 0
    while i < N:
        start = i
        a0 = w[start]
        i += 1
        while i < N and w[i] == a0:
            i += 1
        if i == N:
            yield (N - start, 1, a0, 0)
            return
        q = i - start + 1
        n = q
        p = q
        if a0:
            h = q - 1
            s = q - 1
        else:
            h = 1
            s = 0
        i += 1
        while i < N:
            a = w[i]
            if a == w[i - p]:
                n += 1
                i += 1
                continue
            hbar = _modinv(h, p)
            if (n + 1 - s) % p == 0:
                assert a == 0, "arithmetic branch out of step with the letter"
                t = n + 1 - hbar
                h = (t // p) * h + (h * hbar) // p
                s = n + 1 - p
                p = n + 1 - t % p
            elif (n + 1 - s + hbar) % p == 0:
                assert a == 1, "arithmetic branch out of step with the letter"
                t = n + 1 + hbar
                h = (t // p) * h - (h * hbar) // p
                p = n + 1 - t % p
            else:
                break
            n += 1
            i += 1
        yield (n, p, h, s)


def scan_codes(w) -> bytes:
    """Greedy coding of `w` as a flat buffer of int64 quadruples."""
    w = bytes(w)
    _check_letters(w)
    out = array("q")
    for quad in iter_scan(w):
        out.extend(quad)
    return out.tobytes()


def scan_prefix(w) -> tuple:
    """Coding of the longest balanced prefix of nonempty `w`."""
    w = bytes(w)
    if not w:
        raise ValueError("scan_prefix requires a nonempty word")
    _check_letters(w)
    return next(iter_scan(w))


def _validate_quad(n: int, p: int, h: int, s: int, idx: int) -> None:
    if n < 1:
        raise InvalidCode(f"factor {idx}: n must be >= 1, got {n}")
    if not 1 <= p <= n:
        raise InvalidCode(f"factor {idx}: need 1 <= p <= n, got p={p} n={n}")
    if not 0 <= s < p:
        raise InvalidCode(f"factor {idx}: need 0 <= s < p, got s={s} p={p}")
    if p == 1:
        if h not in (0, 1):
            raise InvalidCode(f"factor {idx}: p = 1 needs h in {{0, 1}}, got {h}")
    else:
        if not 1 <= h < p:
            raise InvalidCode(f"factor {idx}: need 1 <= h < p, got h={h} p={p}")
        if gcd(h, p) != 1:
            raise InvalidCode(f"factor {idx}: h and p must be coprime, got h={h} p={p}")


def decode_codes(flat) -> bytes:
    """Decode a flat buffer of int64 quadruples into one 0/1 word."""
    mv = memoryview(flat)
    if mv.format != "q":
        mv = mv.cast("q")
    if len(mv) % 4:
        raise InvalidCode("flat code buffer length must be a multiple of 4")
    pieces = []
    for k in range(0, len(mv), 4):
        n, p, h, s = mv[k], mv[k + 1], mv[k + 2], mv[k + 3]
        _validate_quad(n, p, h, s, k // 4)
        if p == 1:
            pieces.append(bytes([h]) * n)
            continue
        # one period of the word, then tile: the letter at offset j is
        # floor((j+1-s)h/p) - floor((j-s)h/p), tracked incrementally
        per = bytearray(p)
        acc = (p - s) % p * h % p
        for j in range(p):
            acc += h
            if acc >= p:
                acc -= p
                per[j] = 1
        pieces.append((bytes(per) * ((n + p - 1) // p))[:n])
    return b"".join(pieces)
