"""Bit-exact word and coding serialization.

Words travel either as ASCII '0'/'1' text (whitespace skipped) or packed
MSB-first into raw bytes. Codings travel either as a line-oriented text
format or as a canonical unsigned-LEB128 binary format; both start with the
magic DSC1.

Text format:  line 1 is exactly "DSC1 text", line 2 the factor count in
decimal, then one "n p h s" line per factor, trailing newline.

Binary format:  the four magic bytes 44 53 43 31, then the factor count,
then n, p, h, s per factor, every integer unsigned LEB128 (7 data bits per
byte, little-endian groups, high bit = continuation). Overlong encodings
are rejected, which makes the format canonical: any accepted stream
re-serializes to itself.
"""

from __future__ import annotations

from typing import List, NamedTuple

from .dscore import DsCode, as_word, validate_code
from .errors import (BadCharacter, BadCount, BadHeader, BadMagic, BadTuple,
                     InvalidCode, InvariantViolation, MalformedBlock,
                     OverlongEncoding, TrailingData, TruncatedStream)

TEXT_HEADER = "DSC1 text"
MAGIC = b"DSC1"

_WS = b" \t\r\n"
_ASCII_TO_BIT = bytes.maketrans(b"01", b"\x00\x01")
_BIT_TO_ASCII = bytes.maketrans(b"\x00\x01", b"01")


class RawBitBlock(NamedTuple):
    payload: bytes
    bit_length: int


def parse_ascii_word(text) -> bytes:
    """'0'/'1' characters to a word; space, tab, CR and LF are skipped.

    Any other byte raises BadCharacter with its 1-based position (counted
    over the whole stream, whitespace included).
    """
    data = text.encode("utf-8") if isinstance(text, str) else bytes(text)
    stripped = data.translate(None, _WS)
    if stripped.translate(None, b"01"):
        pos = next(i for i, b in enumerate(data, 1)
                   if b not in b"01" and b not in _WS)
        raise BadCharacter(pos)
    return stripped.translate(_ASCII_TO_BIT)


def format_ascii_word(w) -> str:
    """Inverse of parse_ascii_word, without any whitespace."""
    return as_word(w).translate(_BIT_TO_ASCII).decode("ascii")


def pack_bits(w) -> RawBitBlock:
    """Pack a word MSB-first into bytes; unused trailing bits are zero."""
    w = as_word(w)
    n = len(w)
    if n == 0:
        return RawBitBlock(b"", 0)
    nbytes = (n + 7) // 8
    value = int(w.translate(_BIT_TO_ASCII), 2) << (8 * nbytes - n)
    return RawBitBlock(value.to_bytes(nbytes, "big"), n)


def unpack_bits(block) -> bytes:
    """Inverse of pack_bits; rejects inconsistent lengths and dirty padding."""
    payload, nbits = block
    payload = bytes(payload)
    if nbits < 0 or len(payload) != (nbits + 7) // 8:
        raise MalformedBlock(
            f"bit_length {nbits} inconsistent with {len(payload)} payload bytes")
    if nbits == 0:
        return b""
    value = int.from_bytes(payload, "big")
    pad = 8 * len(payload) - nbits
    if value & ((1 << pad) - 1):
        raise MalformedBlock("nonzero padding bits after the declared bit length")
    value >>= pad
    return format(value, f"0{nbits}b").encode("ascii").translate(_ASCII_TO_BIT)


# -- text coding format ------------------------------------------------------

def serialize_codes_text(coding) -> str:
    lines = [TEXT_HEADER, str(len(coding))]
    lines.extend(f"{c[0]} {c[1]} {c[2]} {c[3]}" for c in coding)
    return "\n".join(lines) + "\n"


def parse_codes_text(text) -> List[DsCode]:
    """Exact inverse of serialize_codes_text; re-validates every code."""
    if isinstance(text, (bytes, bytearray, memoryview)):
        text = bytes(text).decode("latin-1")
    lines = text.split("\n")
    if not lines or lines[0] != TEXT_HEADER:
        raise BadHeader(f"expected first line {TEXT_HEADER!r}")
    if len(lines) < 2 or not (lines[1].isascii() and lines[1].isdigit()):
        raise BadCount("factor count line must be a nonnegative integer")
    count = int(lines[1])
    codes = []
    for idx in range(count):
        lineno = 3 + idx
        if 2 + idx >= len(lines):
            raise BadTuple(lineno, "missing tuple line")
        parts = lines[2 + idx].split()
        if len(parts) != 4 or not all(p.isascii() and p.isdigit() for p in parts):
            raise BadTuple(lineno,
                           f"expected four integers, got {lines[2 + idx]!r}")
        try:
            codes.append(validate_code(tuple(map(int, parts))))
        except InvalidCode as exc:
            raise InvariantViolation(str(exc), line=lineno) from None
    if any(rest.strip() for rest in lines[2 + count:]):
        raise BadTuple(3 + count, "unexpected data after the last tuple")
    return codes


# -- binary coding format ----------------------------------------------------

def _uleb_append(out: bytearray, value: int) -> None:
    while value >= 0x80:
        out.append(value & 0x7F | 0x80)
        value >>= 7
    out.append(value)


def _uleb_read(data: bytes, pos: int) -> tuple[int, int]:
    result = 0
    shift = 0
    start = pos
    while True:
        if pos >= len(data):
            raise TruncatedStream(f"value starting at byte {start} is cut off")
        b = data[pos]
        pos += 1
        result |= (b & 0x7F) << shift
        if b < 0x80:
            if b == 0 and pos - start > 1:
                raise OverlongEncoding(
                    f"value starting at byte {start} has a redundant "
                    "trailing zero group")
            return result, pos
        shift += 7


def serialize_codes_binary(coding) -> bytes:
    out = bytearray(MAGIC)
    _uleb_append(out, len(coding))
    for c in coding:
        _uleb_append(out, c[0])
        _uleb_append(out, c[1])
        _uleb_append(out, c[2])
        _uleb_append(out, c[3])
    return bytes(out)


def parse_codes_binary(data) -> List[DsCode]:
    """Exact inverse of serialize_codes_binary; re-validates every code."""
    data = bytes(data)
    if data[:4] != MAGIC:
        raise BadMagic("missing DSC1 magic")
    count, pos = _uleb_read(data, 4)
    codes = []
    for idx in range(count):
        quad = []
        for _ in range(4):
            value, pos = _uleb_read(data, pos)
            quad.append(value)
        try:
            codes.append(validate_code(tuple(quad)))
        except InvalidCode as exc:
            raise InvariantViolation(f"factor {idx + 1}: {exc}") from None
    if pos != len(data):
        raise TrailingData(f"{len(data) - pos} unconsumed bytes after the coding")
    return codes


def parse_codes_auto(data) -> List[DsCode]:
    """Dispatch on the leading bytes: text header vs binary magic."""
    data = bytes(data)
    if data.startswith(TEXT_HEADER.encode("ascii")):
        return parse_codes_text(data)
    return parse_codes_binary(data)
