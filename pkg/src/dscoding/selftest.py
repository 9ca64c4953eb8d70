"""Exhaustive equivalence suites: the coding fast path against the oracles.

Each suite sweeps every binary word up to a length bound and compares the
scanner's answers with the brute-force references, reporting the first
counterexample if any. The CLI `selftest` command runs all of them.
"""

from __future__ import annotations

from typing import Callable, Iterator, NamedTuple

from . import dscore, factorize, oracle
from .dscore import ExtendOutcome

BalancePredicate = Callable[[bytes], bool]


class SuiteResult(NamedTuple):
    name: str
    checked: int
    counterexample: bytes | None

    @property
    def passed(self) -> bool:
        return self.counterexample is None


def cached_balance() -> BalancePredicate:
    """The brute-force balance test behind a memo table."""
    cache: dict[bytes, bool] = {}

    def balanced(w: bytes) -> bool:
        v = cache.get(w)
        if v is None:
            v = oracle.is_balanced_bruteforce(w)
            cache[w] = v
        return v

    return balanced


def _words(max_len: int) -> Iterator[bytes]:
    for n in range(1, max_len + 1):
        yield from oracle.words_of_length(n)


def _prefix_oracle(max_len: int, balanced: BalancePredicate):
    """Scanner prefix length equals the brute-force longest balanced prefix."""
    checked = 0
    for w in _words(max_len):
        checked += 1
        naive = 0
        for length in range(1, len(w) + 1):
            if not balanced(w[:length]):
                break
            naive = length
        if dscore.longest_sturmian_prefix(w).n != naive:
            return checked, w
    return checked, None


def _extension(max_len: int, balanced: BalancePredicate):
    """can_extend matches the oracle; extend matches a from-scratch rescan."""
    checked = 0
    for w in _words(max_len):
        if not balanced(w):
            continue
        code = dscore.longest_sturmian_prefix(w)
        for a in (0, 1):
            checked += 1
            wa = w + bytes([a])
            outcome = dscore.can_extend(code, a)
            if (outcome is not ExtendOutcome.UNBALANCED) != balanced(wa):
                return checked, wa
            if outcome is not ExtendOutcome.UNBALANCED:
                if dscore.extend(code, a) != dscore.longest_sturmian_prefix(wa):
                    return checked, wa
    return checked, None


def _round_trip(max_len: int, balanced: BalancePredicate):
    """decode_all inverts greedy_encode."""
    checked = 0
    for w in _words(max_len):
        checked += 1
        if factorize.decode_all(factorize.greedy_encode(w)) != w:
            return checked, w
    return checked, None


def _greedy_minimal(max_len: int, balanced: BalancePredicate):
    """Greedy factor count equals the DP minimal factorization length."""
    checked = 0
    for w in _words(max_len):
        checked += 1
        greedy = len(factorize.greedy_encode(w))
        if greedy != oracle.minimal_factorization_length_dp(w, balanced=balanced):
            return checked, w
    return checked, None


def _period_array(max_len: int, balanced: BalancePredicate):
    """The period-array divisibility test agrees with brute force."""
    checked = 0
    for w in _words(max_len):
        checked += 1
        if oracle.balanced_via_period_array(w) != balanced(w):
            return checked, w
    return checked, None


SUITES: dict[str, Callable] = {
    "prefix-oracle": _prefix_oracle,
    "extension": _extension,
    "round-trip": _round_trip,
    "greedy-minimal": _greedy_minimal,
    "period-array": _period_array,
}


def run_suite(name: str, max_len: int,
              balanced: BalancePredicate | None = None) -> SuiteResult:
    if balanced is None:
        balanced = cached_balance()
    checked, counterexample = SUITES[name](max_len, balanced)
    return SuiteResult(name, checked, counterexample)


def run_suites(max_len: int) -> list[SuiteResult]:
    balanced = cached_balance()
    return [run_suite(name, max_len, balanced) for name in SUITES]
