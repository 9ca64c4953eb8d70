import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from dscoding import factorize, oracle
from dscoding.dscore import DsCode
from dscoding.errors import InvalidCode
from helpers import CODING40, FACTORS40, W, WORD40, words_up_to


def test_golden_encode():
    assert factorize.greedy_encode(WORD40) == CODING40


def test_golden_factors_decode_one_by_one():
    for code, ascii_factor in zip(CODING40, FACTORS40):
        assert factorize.decode_all([code]) == W(ascii_factor)


def test_golden_decode():
    assert factorize.decode_all(CODING40) == WORD40


def test_single_letter():
    assert factorize.greedy_encode(W("0")) == [DsCode(1, 1, 0, 0)]
    assert factorize.greedy_encode(W("1")) == [DsCode(1, 1, 1, 0)]


def test_empty_word():
    assert factorize.greedy_encode(b"") == []
    assert factorize.decode_all([]) == b""


def test_00110011():
    coding = factorize.greedy_encode(W("00110011"))
    assert coding == [DsCode(3, 3, 1, 0), DsCode(4, 3, 1, 1), DsCode(1, 1, 1, 0)]


def test_decode_all_rejects_bad_factor():
    with pytest.raises(InvalidCode):
        factorize.decode_all([DsCode(7, 5, 2, 4), (4, 5, 1, 0)])


def test_iter_codes_matches_greedy():
    assert list(factorize.iter_codes(WORD40)) == CODING40


def test_round_trip_exhaustive_small():
    for w in words_up_to(13):
        assert factorize.decode_all(factorize.greedy_encode(w)) == w


def test_factor_maximality_small():
    # each factor plus the first letter of the next is unbalanced
    for w in words_up_to(11):
        coding = factorize.greedy_encode(w)
        pos = 0
        for k, code in enumerate(coding):
            factor = w[pos:pos + code.n]
            assert oracle.is_balanced_bruteforce(factor)
            if k + 1 < len(coding):
                assert not oracle.is_balanced_bruteforce(factor + w[pos + code.n:pos + code.n + 1])
            pos += code.n
        assert pos == len(w)


@settings(max_examples=150)
@given(st.binary(max_size=2000))
def test_round_trip_random(data):
    w = bytes(b & 1 for b in data)
    assert factorize.decode_all(factorize.greedy_encode(w)) == w


def test_stats_golden():
    st_ = factorize.stats(CODING40)
    assert st_.factor_count == 5
    assert st_.total_length == 40
    assert st_.min_length == 4
    assert st_.max_length == 11
    assert st_.mean_length == 8.0


def test_stats_empty():
    st_ = factorize.stats([])
    assert st_ == factorize.CodingStats(0, 0, None, None, None)


def test_stats_00110011():
    st_ = factorize.stats(factorize.greedy_encode(W("00110011")))
    assert st_.factor_count == 3
    assert st_.total_length == 8
    assert st_.mean_length == 8 / 3
