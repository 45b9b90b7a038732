"""Command-line front end: word utilities, relation queries, certificates.

Exit codes: 0 = pass / true, 1 = fail / false, 2 = usage or input error.
Reports print as text or as JSON objects with the stable schema
{"check", "params", "status", "witnesses", "elapsed_ms"}.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import chain as chain_mod
from .chain import (
    VerificationReport,
    build_chain,
    cross_conjugacy_scan,
    documented_orbit_instances,
    explicit_flag_decomposition,
    orbit_distinct_check,
    separation_parts,
    verify_free_factor_chain,
    verify_not_decomposable,
    verify_relation_chain,
    verify_surface_rewrite,
)
from .cosets import e0, e1, e2, e3
from .graphs import fold_subgroup
from .whitehead import DEFAULT_BUDGET, BudgetExhausted, is_primitive
from .words import (
    Alphabet,
    AlphabetMismatch,
    DegenerateInput,
    Word,
    WordSyntaxError,
    conjugate,
    parse_word,
    root,
)

LEMMAS = ("relation", "freefactor", "surface", "flag", "abelian", "orbit",
          "separation", "all")


class _UsageError(Exception):
    pass


def _alphabet(text: str) -> Alphabet:
    try:
        return Alphabet.parse(text)
    except ValueError as exc:
        raise _UsageError(f"bad alphabet: {exc}") from exc


def _word(text: str, alphabet: Alphabet) -> Word:
    try:
        return parse_word(text, alphabet)
    except WordSyntaxError as exc:
        raise _UsageError(f"bad word {text!r}: {exc}") from exc


def _emit_reports(reports: list[VerificationReport], notes: list[str],
                  fmt: str) -> None:
    reports = sorted(reports, key=lambda r: (r.check, sorted(r.params.items())))
    if fmt == "json":
        payload = [r.to_dict() for r in reports]
        print(json.dumps(payload[0] if len(payload) == 1 else payload, indent=2))
        return
    for r in reports:
        params = " ".join(f"{k}={v}" for k, v in sorted(r.params.items()))
        print(f"{r.status:>6}  {r.check}  {params}  ({r.elapsed_ms} ms)")
        for w in r.witnesses:
            print(f"        witness: {w}")
    for note in notes:
        print(f"  note  {note}")


def _flag_indices(n: int) -> list[int]:
    return [i for i in range(1, n) if 2 * i + 2 <= n]


def _run_verify(args) -> int:
    chain = build_chain(args.n, inverted_stable_letters=args.flip_convention)
    reports: list[VerificationReport] = []
    notes: list[str] = []

    def run_surface():
        if chain.n >= 2 and chain.n % 2 == 0:
            reports.append(verify_surface_rewrite(chain))
        else:
            notes.append("surface skipped: n odd or below 2")

    def run_flag(indices):
        if not indices:
            notes.append("flag skipped: no valid index for this n")
        for i in indices:
            reports.append(explicit_flag_decomposition(chain, i))

    def run_separation():
        if chain.n >= 2:
            p1, p2 = separation_parts(chain)
            reports.append(
                cross_conjugacy_scan(p1, p2, args.max_len, args.budget or
                                     chain_mod.DEFAULT_SCAN_CAP)
            )
        else:
            notes.append("separation skipped: needs n >= 2")

    def run_orbit():
        for tag, family, g, N in documented_orbit_instances():
            reports.append(orbit_distinct_check(family, g, N, check_suffix=tag))

    lemma = args.lemma
    if lemma == "relation":
        reports.append(verify_relation_chain(chain))
    elif lemma == "freefactor":
        reports.append(verify_free_factor_chain(chain))
    elif lemma == "surface":
        if chain.n < 2 or chain.n % 2:
            raise _UsageError("--lemma surface needs even n >= 2")
        reports.append(verify_surface_rewrite(chain))
    elif lemma == "flag":
        if args.i is None:
            raise _UsageError("--lemma flag needs --i")
        if args.i not in _flag_indices(chain.n):
            raise _UsageError(f"--i {args.i} out of range for n={chain.n}")
        reports.append(explicit_flag_decomposition(chain, args.i))
    elif lemma == "abelian":
        reports.append(verify_not_decomposable(chain))
    elif lemma == "orbit":
        run_orbit()
    elif lemma == "separation":
        if chain.n < 2:
            raise _UsageError("--lemma separation needs n >= 2")
        run_separation()
    else:  # all
        reports.append(verify_relation_chain(chain))
        if chain.n >= 1:
            reports.append(verify_free_factor_chain(chain))
            reports.append(verify_not_decomposable(chain))
        else:
            notes.append("freefactor and abelian skipped: need n >= 1")
        run_surface()
        run_flag(_flag_indices(chain.n))
        run_separation()
        run_orbit()

    _emit_reports(reports, notes, args.format)
    return 0 if all(r.passed for r in reports) else 1


def _cmd_reduce(args) -> int:
    alphabet = _alphabet(args.alphabet)
    text = args.word if args.word is not None else sys.stdin.read()
    print(_word(text, alphabet))
    return 0


def _cmd_conj(args) -> int:
    alphabet = _alphabet(args.alphabet)
    print(conjugate(_word(args.x, alphabet), _word(args.g, alphabet)))
    return 0


def _cmd_root(args) -> int:
    alphabet = _alphabet(args.alphabet)
    r, k = root(_word(args.word, alphabet))
    print(f"{r}\t{k}")
    return 0


def _cmd_primitive(args) -> int:
    alphabet = _alphabet(args.alphabet)
    result = is_primitive(_word(args.word, alphabet), args.budget or DEFAULT_BUDGET)
    print("true" if result else "false")
    return 0 if result else 1


def _cmd_member(args) -> int:
    alphabet = _alphabet(args.alphabet)
    gens = [_word(g, alphabet) for g in args.gen]
    graph = fold_subgroup(gens, alphabet)
    result = graph.contains(_word(args.word, alphabet))
    print("true" if result else "false")
    return 0 if result else 1


def _cmd_eq(args) -> int:
    alphabet = _alphabet(args.alphabet)
    words = [_word(w, alphabet) for w in args.words]
    relation = args.relation
    try:
        if relation == "e0":
            if len(words) != 2:
                raise _UsageError("e0 takes 2 words: x y")
            result = e0(*words)
        elif relation in ("e1", "e2"):
            if len(words) != 4:
                raise _UsageError(f"{relation} takes 4 words: x y x' y'")
            fn = e1 if relation == "e1" else e2
            result = fn(args.m, *words)
        else:
            if len(words) != 6:
                raise _UsageError("e3 takes 6 words: x y z x' y' z'")
            result = e3(args.p, args.q, *words)
    except (DegenerateInput, ValueError) as exc:
        raise _UsageError(str(exc)) from exc
    print("true" if result else "false")
    return 0 if result else 1


def _cmd_gn(args) -> int:
    if args.action != "build":
        raise _UsageError(f"unknown gn action {args.action!r}")
    chain = build_chain(args.n)
    if args.format == "json":
        payload = {
            "n": chain.n,
            "alphabet": list(chain.alphabet.names),
            "c": [str(w) for w in chain.c],
            "d": [str(w) for w in chain.d],
            "s": [str(w) for w in chain.s],
        }
        print(json.dumps(payload, indent=2))
        return 0
    print(f"alphabet: {','.join(chain.alphabet.names)}")
    for i in range(chain.n + 1):
        print(f"c{i} = {chain.c[i]}")
        print(f"d{i} = {chain.d[i]}")
    for i in range(chain.n):
        print(f"s{i} = {chain.s[i]}")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="freefold",
        description="exact free-group computations and construction certificates",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("reduce", help="freely reduce a word (stdin if omitted)")
    p.add_argument("--alphabet", required=True)
    p.add_argument("word", nargs="?")
    p.set_defaults(fn=_cmd_reduce)

    p = sub.add_parser("conj", help="conjugate x by g (g^-1 x g)")
    p.add_argument("--alphabet", required=True)
    p.add_argument("x")
    p.add_argument("g")
    p.set_defaults(fn=_cmd_conj)

    p = sub.add_parser("root", help="maximal root and exponent of a word")
    p.add_argument("--alphabet", required=True)
    p.add_argument("word")
    p.set_defaults(fn=_cmd_root)

    p = sub.add_parser("primitive", help="is the word part of some basis")
    p.add_argument("--alphabet", required=True)
    p.add_argument("--budget", type=int, default=None)
    p.add_argument("word")
    p.set_defaults(fn=_cmd_primitive)

    p = sub.add_parser("member", help="subgroup membership via folded graph")
    p.add_argument("--alphabet", required=True)
    p.add_argument("--gen", action="append", required=True,
                   help="subgroup generator (repeatable)")
    p.add_argument("word")
    p.set_defaults(fn=_cmd_member)

    p = sub.add_parser("eq", help="decide a basic equivalence relation")
    p.add_argument("relation", choices=["e0", "e1", "e2", "e3"])
    p.add_argument("--alphabet", required=True)
    p.add_argument("--m", type=int, default=1)
    p.add_argument("--p", type=int, default=1)
    p.add_argument("--q", type=int, default=1)
    p.add_argument("words", nargs="+")
    p.set_defaults(fn=_cmd_eq)

    p = sub.add_parser("gn", help="build the witness construction")
    p.add_argument("action", choices=["build"])
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--format", choices=["text", "json"], default="text")
    p.set_defaults(fn=_cmd_gn)

    p = sub.add_parser("verify", help="run construction certificates")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--lemma", choices=LEMMAS, required=True)
    p.add_argument("--i", type=int, default=None)
    p.add_argument("--format", choices=["text", "json"], default="text")
    p.add_argument("--budget", type=int, default=None)
    p.add_argument("--max-len", type=int, default=6, dest="max_len")
    p.add_argument("--flip-convention", action="store_true",
                   help=argparse.SUPPRESS)  # fault injection for testing
    p.set_defaults(fn=_run_verify)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code not in (0, None) else 0
    try:
        return args.fn(args)
    except _UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (WordSyntaxError, AlphabetMismatch, DegenerateInput, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except BudgetExhausted as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
