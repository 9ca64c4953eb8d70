"""Command-line front end: encode, decode, check, stats, gen, selftest.

Exit codes: 0 success (and "whole word balanced" for check), 1 check found
an unbalanced word or a selftest suite failed, 2 usage/parse/IO errors,
3 invariant violations in parsed codes.
"""

from __future__ import annotations

import argparse
import sys

from . import dscore, dsio, factorize, oracle, selftest
from ._backend import backend_name
from .errors import DscodingError, InvalidCode, InvariantViolation

MAX_SELFTEST_LEN = 20


def _read(path: str | None) -> bytes:
    if path in (None, "-"):
        return sys.stdin.buffer.read()
    with open(path, "rb") as fh:
        return fh.read()


def _write(path: str | None, data: bytes) -> None:
    if path in (None, "-"):
        sys.stdout.buffer.write(data)
        sys.stdout.buffer.flush()
    else:
        with open(path, "wb") as fh:
            fh.write(data)


def _input_word(args, data: bytes) -> bytes:
    if args.raw:
        bits = args.bits if args.bits is not None else 8 * len(data)
        return dsio.unpack_bits(dsio.RawBitBlock(data, bits))
    return dsio.parse_ascii_word(data)


def _cmd_encode(args) -> int:
    word = _input_word(args, _read(args.input))
    coding = factorize.greedy_encode(word)
    if args.binary:
        payload = dsio.serialize_codes_binary(coding)
    else:
        payload = dsio.serialize_codes_text(coding).encode("ascii")
    _write(args.output, payload)
    return 0


def _cmd_decode(args) -> int:
    coding = dsio.parse_codes_auto(_read(args.input))
    word = factorize.decode_all(coding)
    if args.raw:
        _write(args.output, dsio.pack_bits(word).payload)
    else:
        _write(args.output, dsio.format_ascii_word(word).encode("ascii"))
    return 0


def _cmd_check(args) -> int:
    word = _input_word(args, _read(args.input))
    if not word:
        print(0)
        return 0
    code = dscore.longest_sturmian_prefix(word)
    print(f"{code.n} ({code.n}, {code.p}, {code.h}, {code.s})")
    return 0 if code.n == len(word) else 1


def _cmd_stats(args) -> int:
    word = _input_word(args, _read(args.input))
    st = factorize.stats(factorize.greedy_encode(word))
    print(f"factors {st.factor_count}")
    print(f"length {st.total_length}")
    if st.factor_count:
        print(f"min {st.min_length}")
        print(f"max {st.max_length}")
        print(f"mean {st.mean_length}")
    return 0


def _cmd_gen(args) -> int:
    if args.kind == "christoffel":
        word = oracle.christoffel(args.height, args.length)
    elif args.kind == "fibonacci":
        word = oracle.fibonacci_word(args.index)
    else:
        word = oracle.random_word(args.length, args.seed)
    _write(args.output, (dsio.format_ascii_word(word) + "\n").encode("ascii"))
    return 0


def _cmd_selftest(args) -> int:
    if args.max_len > MAX_SELFTEST_LEN:
        print(f"error: --max-len must be <= {MAX_SELFTEST_LEN}", file=sys.stderr)
        return 2
    failed = False
    for result in selftest.run_suites(args.max_len):
        if result.passed:
            print(f"{result.name}: pass ({result.checked} cases)")
        else:
            failed = True
            word = dsio.format_ascii_word(result.counterexample)
            print(f"{result.name}: FAIL at word {word}")
    return 1 if failed else 0


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="dscoding",
        description="Encode binary words as lists of (n, p, h, s) tuples, "
                    "one per balanced factor, and decode them back. "
                    f"Active kernel: {backend_name}.")
    sub = parser.add_subparsers(dest="command", required=True)

    def word_input(p):
        p.add_argument("-i", "--input", metavar="PATH",
                       help="input file (default: stdin)")
        p.add_argument("--raw", action="store_true",
                       help="treat input as packed bits instead of ASCII")
        p.add_argument("--bits", type=int, metavar="N",
                       help="bit length of --raw input (default: 8 * size)")

    p = sub.add_parser("encode", help="word -> coding")
    word_input(p)
    p.add_argument("-o", "--output", metavar="PATH")
    p.add_argument("--binary", action="store_true",
                   help="write the LEB128 binary format instead of text")
    p.set_defaults(func=_cmd_encode)

    p = sub.add_parser("decode", help="coding -> word (format auto-detected)")
    p.add_argument("-i", "--input", metavar="PATH")
    p.add_argument("-o", "--output", metavar="PATH")
    p.add_argument("--raw", action="store_true",
                   help="write packed bits instead of ASCII")
    p.set_defaults(func=_cmd_decode)

    p = sub.add_parser("check", help="longest balanced prefix; exit 0 iff "
                                     "the whole word is balanced")
    word_input(p)
    p.set_defaults(func=_cmd_check)

    p = sub.add_parser("stats", help="factorization statistics")
    word_input(p)
    p.set_defaults(func=_cmd_stats)

    p = sub.add_parser("gen", help="generate test words")
    gensub = p.add_subparsers(dest="kind", required=True)
    g = gensub.add_parser("christoffel", help="lower Christoffel word")
    g.add_argument("height", type=int)
    g.add_argument("length", type=int)
    g.add_argument("-o", "--output", metavar="PATH")
    g = gensub.add_parser("fibonacci", help="k-th Fibonacci word")
    g.add_argument("index", type=int)
    g.add_argument("-o", "--output", metavar="PATH")
    g = gensub.add_parser("random", help="splitmix64 random word")
    g.add_argument("length", type=int)
    g.add_argument("seed", type=int)
    g.add_argument("-o", "--output", metavar="PATH")
    p.set_defaults(func=_cmd_gen)

    p = sub.add_parser("selftest", help="exhaustive oracle-equivalence suites")
    p.add_argument("--max-len", type=int, default=14, metavar="L",
                   help="sweep all words up to this length (default 14, "
                        f"max {MAX_SELFTEST_LEN})")
    p.set_defaults(func=_cmd_selftest)

    return parser


def main(argv=None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (InvariantViolation, InvalidCode) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except (DscodingError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def entry() -> None:
    sys.exit(main())
