"""Parity between the compiled kernel and the pure-Python fallback."""

import pytest

from dscoding import _pykernel
from dscoding.errors import InvalidCode
from helpers import W, WORD40, random_words

_ckernel = pytest.importorskip(
    "dscoding._kernel", reason="compiled kernel not built")


def test_names():
    assert _pykernel.name == "python"
    assert _ckernel.name == "c"


def test_scan_parity_random():
    for w in random_words(200, 600, seed=5):
        assert _ckernel.scan_codes(w) == _pykernel.scan_codes(w)
        if w:
            assert _ckernel.scan_prefix(w) == _pykernel.scan_prefix(w)


def test_decode_parity_random():
    for w in random_words(120, 600, seed=6):
        flat = _pykernel.scan_codes(w)
        assert _ckernel.decode_codes(flat) == _pykernel.decode_codes(flat) == w


def test_scan_parity_structured():
    words = [b"", b"\x00" * 1000, b"\x01" * 1000, W("01") * 500,
             WORD40 * 25, W("0010010100101") * 77]
    for w in words:
        assert _ckernel.scan_codes(w) == _pykernel.scan_codes(w)


def test_letter_validation_parity():
    bad = b"\x00\x01\x02\x00"
    with pytest.raises(ValueError):
        _ckernel.scan_codes(bad)
    with pytest.raises(ValueError):
        _pykernel.scan_codes(bad)


def test_decode_validation_parity():
    import array
    bad = array.array("q", [4, 5, 1, 0])
    with pytest.raises(InvalidCode):
        _ckernel.decode_codes(bad)
    with pytest.raises(InvalidCode):
        _pykernel.decode_codes(bad)
    odd = array.array("q", [4, 2, 1])
    with pytest.raises(InvalidCode):
        _ckernel.decode_codes(odd)
    with pytest.raises(InvalidCode):
        _pykernel.decode_codes(odd)


def test_decode_length_overflow_guard():
    import array
    huge = array.array("q", [2**62, 1, 0, 0] * 2)
    with pytest.raises(MemoryError):
        _ckernel.decode_codes(huge)


def test_backend_env_override():
    import os
    import subprocess
    import sys
    out = subprocess.run(
        [sys.executable, "-c", "import dscoding; print(dscoding.backend_name)"],
        env={**os.environ, "DSCODING_BACKEND": "python"},
        capture_output=True, text=True)
    assert out.stdout.strip() == "python"
