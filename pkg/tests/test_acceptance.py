"""Acceptance gate: one test per criterion, every tolerance exact.

Run with `pytest tests/test_acceptance.py -v -s` to see one pass line per
criterion. The whole module takes a few minutes: several criteria sweep
every binary word up to length 16 against brute-force oracles, and the
round-trip criterion pushes a hundred million letters through the codec.
"""

import math
import random
import time
import tracemalloc

import pytest

import dscoding
from dscoding import _backend, _pykernel, dscore, dsio, factorize, oracle, selftest
from helpers import CODING40, WORD40, words_up_to

BIG_LEN = 10**6
BIG_SEEDS = range(1, 101)
_TO01 = bytes.maketrans(bytes(range(256)), bytes(b & 1 for b in range(256)))


def big_random_word(seed: int, length: int = BIG_LEN) -> bytes:
    return random.Random(seed).randbytes(length).translate(_TO01)


@pytest.fixture(scope="module")
def balanced():
    return selftest.cached_balance()


def _run(name: str, max_len: int, balanced) -> selftest.SuiteResult:
    result = selftest.run_suite(name, max_len, balanced)
    if not result.passed:
        pytest.fail(f"{name} counterexample: "
                    f"{dsio.format_ascii_word(result.counterexample)}")
    return result


def test_c01_golden_example():
    coding = factorize.greedy_encode(WORD40)
    assert coding == CODING40
    assert factorize.decode_all(coding) == WORD40
    print("criterion 1: PASS — 40-letter golden word encodes and decodes exactly")


def test_c02_prefix_oracle_equivalence(balanced):
    result = _run("prefix-oracle", 14, balanced)
    print(f"criterion 2: PASS — scanner matches brute force on "
          f"{result.checked} words (lengths 1..14)")


def test_c03_extension_equivalence(balanced):
    result = _run("extension", 14, balanced)
    print(f"criterion 3: PASS — can_extend/extend match the oracle on "
          f"{result.checked} balanced-word extensions")


def test_c04_greedy_minimality(balanced):
    result = _run("greedy-minimal", 16, balanced)
    print(f"criterion 4: PASS — greedy factor count equals DP minimum on "
          f"{result.checked} words (lengths 1..16)")


def test_c05_round_trip(balanced):
    assert factorize.decode_all(factorize.greedy_encode(b"")) == b""
    result = _run("round-trip", 16, balanced)
    for seed in BIG_SEEDS:
        w = big_random_word(seed)
        assert factorize.decode_all(factorize.greedy_encode(w)) == w, seed
    print(f"criterion 5: PASS — identity on {result.checked} small words and "
          f"{len(BIG_SEEDS)} random words of {BIG_LEN} letters")


def test_c06_palindromic_split():
    pairs = 0
    for p in range(2, 201):
        for h in range(1, p):
            if math.gcd(h, p) != 1:
                continue
            u = oracle.christoffel(h, p)
            alpha, beta = oracle.palindromic_split(u)
            assert alpha + beta == u
            assert alpha == alpha[::-1] and beta == beta[::-1]
            assert len(alpha) * (p - h) % p == 1
            assert len(beta) * h % p == 1
            pairs += 1
    print(f"criterion 6: PASS — palindromic split congruences hold for "
          f"{pairs} coprime (h, p) pairs, p <= 200")


def test_c07_period_array_cross_check(balanced):
    result = _run("period-array", 16, balanced)
    print(f"criterion 7: PASS — period-array test matches brute force on "
          f"{result.checked} words (lengths 1..16)")


def test_c08_performance():
    if dscoding.backend_name != "c":
        pytest.fail("compiled kernel unavailable; the throughput criterion "
                    "is stated for the compiled encoder")
    w7 = big_random_word(2026, 10**7)
    w6 = w7[:10**6]

    def best_of(runs, work):
        best = math.inf
        for _ in range(runs):
            t0 = time.process_time()
            work()
            best = min(best, time.process_time() - t0)
        return best

    t7 = best_of(3, lambda: _backend.scan_codes(w7))
    assert t7 < 1.0, f"encoding 1e7 letters took {t7:.3f}s CPU"

    t6 = best_of(3, lambda: _backend.scan_codes(w6))
    doublings = math.log2(10)
    limit = 2.5 ** doublings
    assert t7 / t6 <= limit, f"1e6->1e7 grew {t7 / t6:.1f}x (limit {limit:.1f}x)"

    # constant auxiliary memory: stream the pure scanner, holding only the
    # current tuple; the input buffer is allocated before tracing starts
    def peak_aux(n):
        w = w7[:n]
        tracemalloc.start()
        before, _ = tracemalloc.get_traced_memory()
        count = 0
        for _ in _pykernel.iter_scan(w):
            count += 1
        _, peak = tracemalloc.get_traced_memory()
        tracemalloc.stop()
        assert count > 0
        return peak - before

    aux1 = peak_aux(10**5)
    aux2 = peak_aux(2 * 10**5)
    assert aux1 < 65536 and aux2 < 65536, (aux1, aux2)
    assert abs(aux2 - aux1) < 8192, (aux1, aux2)
    print(f"criterion 8: PASS — 1e7 letters in {t7:.3f}s CPU, decade growth "
          f"{t7 / t6:.1f}x (limit {limit:.1f}x), streaming peak aux "
          f"{aux1}B/{aux2}B at 1e5/2e5 letters")


def test_c09_decoding_paths_agree():
    codes = 0
    for p in range(1, 33):
        heights = (0, 1) if p == 1 else [h for h in range(1, p)
                                         if math.gcd(h, p) == 1]
        for h in heights:
            for s in range(p) if p > 1 else (0,):
                for n in range(p, 65):
                    code = dscore.DsCode(n, p, h, s)
                    by_formula = bytes(dscore.letter_at(code, i)
                                       for i in range(1, n + 1))
                    by_rotation = oracle.decode_by_rotation(code)
                    assert by_formula == by_rotation == dscore.decode_code(code), code
                    codes += 1
    print(f"criterion 9: PASS — floor-formula and rotate-and-repeat decoders "
          f"agree on {codes} codes (n <= 64, p <= 32)")


def test_c10_serialization_round_trip():
    def both_ways(coding):
        text = dsio.serialize_codes_text(coding)
        assert dsio.parse_codes_text(text) == coding
        blob = dsio.serialize_codes_binary(coding)
        assert dsio.parse_codes_binary(blob) == coding

    both_ways(CODING40)
    small = 0
    for w in words_up_to(16):
        both_ways(factorize.greedy_encode(w))
        small += 1
    for seed in BIG_SEEDS:
        both_ways(factorize.greedy_encode(big_random_word(seed)))
    with pytest.raises(dscoding.errors.OverlongEncoding):
        dsio.parse_codes_binary(bytes.fromhex("4453433101AC8200070305"))
    print(f"criterion 10: PASS — text and binary formats round-trip the "
          f"golden coding, {small} small-word codings and "
          f"{len(BIG_SEEDS)} big-word codings; overlong LEB128 rejected")
