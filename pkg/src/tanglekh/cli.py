"""Command-line front end.

Exit codes: 0 on success, 1 on domain errors (irreducible word, bad arity,
syntax, resource bounds), 2 on usage errors.
"""

from __future__ import annotations

import argparse
import sys

from .fuzz import confluence_fuzz
from .graded import GradedGroup, poincare
from .invariant import MAX_TABLE_N, evaluate_closed, hn, value_from_trace
from .matchings import MAX_N, ResourceLimit, enumerate_matchings, matching_to_json, to_word
from .oracle import TooManyCrossings, jones_at_one, kauffman_bracket
from .rewrite import DEFAULT_BUDGET, Irreducible, apply_rule, reduce_word
from .store import TableCache, canonical_json
from .words import ArityError, ArityMismatch, WordSyntaxError, parse_word, render_word

DOMAIN_ERRORS = (Irreducible, ArityError, ArityMismatch, WordSyntaxError, ResourceLimit, TooManyCrossings)


def _emit(obj) -> None:
    print(canonical_json(obj))


def cmd_matchings(args) -> int:
    mats = enumerate_matchings(args.n, max_n=args.max_n)
    if args.json:
        _emit({"n": args.n, "count": len(mats), "matchings": [matching_to_json(m) for m in mats]})
    else:
        print(f"{len(mats)} crossingless matchings of {2 * args.n} points")
        for m in mats:
            print(f"  {matching_to_json(m)}  {render_word(to_word(m))}")
    return 0


def _hn_payload(n: int, budget: int, max_n: int) -> dict:
    return hn(n, budget, max_n).to_json()


def cmd_hn(args) -> int:
    if args.n > args.max_n:
        raise ResourceLimit(f"n = {args.n} exceeds --max-n {args.max_n}")
    params = {"n": args.n}
    if args.no_cache:
        payload = _hn_payload(args.n, args.budget, args.max_n)
    else:
        payload = TableCache().get_or_compute("hn", params, lambda: _hn_payload(args.n, args.budget, args.max_n))
    if args.json:
        _emit(payload)
        return 0
    total = GradedGroup.from_json(payload["total"])
    print(f"H^{args.n}: {len(payload['entries'])} entries, total rank {total.total_rank}")
    print(f"  Poincare polynomial {poincare(total)}")
    for e in payload["entries"]:
        g = GradedGroup.from_json(e["value"])
        print(f"  {e['C']} x {e['Cp']}: rank {g.total_rank}")
    return 0


def cmd_eval(args) -> int:
    word = parse_word(args.word)
    value = evaluate_closed(word, args.budget)
    _emit(value.to_json())
    return 0


def cmd_normalize(args) -> int:
    word = parse_word(args.word)
    trace = reduce_word(word, args.budget)
    value = value_from_trace(trace)
    if args.json:
        _emit({
            "word": render_word(word),
            "steps": trace.to_json(),
            "ledger_total": trace.ledger_total,
            "circles": trace.circles_extracted,
            "value": value.to_json(),
        })
        return 0
    current = word
    print(f"start   {render_word(current)}")
    for s in trace.steps:
        current = apply_rule(current, s)
        print(f"{s.rule.label:<16} @{s.position} d={s.delta:+d}  {render_word(current)}")
    print(f"circles {trace.circles_extracted}, ledger {trace.ledger_total}, value {poincare(value)}")
    return 0


def cmd_check(args) -> int:
    report = confluence_fuzz(args.fuzz, args.seed, args.budget)
    if args.json:
        _emit(report.to_json())
    else:
        print(f"seed {report.seed}: {report.checked} words checked ({report.skipped_linked} linked skipped), "
              f"{len(report.failures)} failures")
        for f in report.failures:
            print(f"  {f['reason']}: {f['word']}")
    return 0 if report.passed else 1


def cmd_oracle(args) -> int:
    word = parse_word(args.word)
    if not word.is_closed:
        raise ArityMismatch(f"the bracket needs a closed word, got {word.input_arity} -> {word.output_arity}")
    bracket = kauffman_bracket(word)
    j1 = jones_at_one(word)
    try:
        rank = evaluate_closed(word, args.budget).total_rank
    except Irreducible:
        rank = None
    out = {"bracket": bracket.to_json(), "jones_at_one": j1, "total_rank": rank,
           "match": None if rank is None else rank == j1}
    if args.json:
        _emit(out)
    else:
        print(f"bracket      {bracket}")
        print(f"jones(q=1)   {j1}")
        print(f"total rank   {'irreducible' if rank is None else rank}")
    return 0 if out["match"] is not False else 1


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="tanglekh", description="Tangle words, matchings and graded invariants.")
    sub = p.add_subparsers(dest="command", required=True)

    def add(name, func, help_, word=False, n=False, budget=True, json_flag=True):
        sp = sub.add_parser(name, help=help_)
        if word:
            sp.add_argument("word", help='word text, e.g. "0: cap1 . s1 . cup1"')
        if n:
            sp.add_argument("n", type=int)
        if budget:
            sp.add_argument("--budget", type=int, default=DEFAULT_BUDGET, help="search node budget")
        if json_flag:
            sp.add_argument("--json", action="store_true", help="machine-readable output")
        sp.set_defaults(func=func)
        return sp

    sp = add("matchings", cmd_matchings, "list crossingless matchings of 2n points", n=True, budget=False)
    sp.add_argument("--max-n", type=int, default=MAX_N)
    sp = add("hn", cmd_hn, "invariant table of the identity on 2n points", n=True)
    sp.add_argument("--max-n", type=int, default=MAX_TABLE_N)
    sp.add_argument("--no-cache", action="store_true", help="skip the on-disk cache")
    add("eval", cmd_eval, "graded value of a closed word (JSON)", word=True)
    add("normalize", cmd_normalize, "reduction trace of a closed word", word=True)
    sp = add("check", cmd_check, "seeded confluence fuzz")
    sp.add_argument("--fuzz", type=int, default=1000, metavar="N")
    sp.add_argument("--seed", type=int, default=0, metavar="S")
    sp.set_defaults(budget=20_000)
    add("oracle", cmd_oracle, "Kauffman bracket versus total rank", word=True)
    return p


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    for name in ("n", "budget", "fuzz"):
        v = getattr(args, name, None)
        if v is not None and v < 0:
            parser.error(f"{name} must be nonnegative")
    try:
        return args.func(args)
    except DOMAIN_ERRORS as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
