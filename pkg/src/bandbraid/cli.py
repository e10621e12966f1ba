"""
Command-line interface.

    bandbraid convert --n 3 "a(3,1)"
    bandbraid equal --n 3 "a(3,2) a(2,1)" "a(2,1) a(3,1)"
    bandbraid decide --n 3 --predicate adjacent-first "a(2,1) a(3,1)"
    bandbraid census --n 4 --predicate any

Exit codes: 0 yes/success, 1 no, 2 indeterminate (budget), 64 usage error,
65 parse or data error. Words are read from the positional arguments, or from
standard input one per line when none are given (``equal`` reads lines of the
form ``u = v``).
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Sequence, TextIO

from .core import (
    band_to_artin,
    closure_invariants,
    format_band_word,
    is_unknot_presentation,
    parse_band_word,
    permutation,
)
from .errors import BraidError, BudgetExhaustedError
from .graph import DEFAULT_BUDGET, conjugacy_orbit, equality_class, format_orbit, monoid_equal
from .rewriting import neighbors
from .sweep import (
    DECIDE_BUDGET,
    PRESETS,
    Census,
    MutuallyBraided,
    NotMutuallyBraided,
    census,
    decide,
    format_census,
    format_certificate,
    get_predicate,
    parse_certificate,
    replay,
)

EXIT_YES = 0
EXIT_NO = 1
EXIT_INDETERMINATE = 2
EXIT_USAGE = 64
EXIT_DATA = 65


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _words(args, count: int | None = None) -> list[str]:
    if args.words:
        if count is not None and len(args.words) != count:
            raise UsageError(f"{args.command} takes {count} word(s), got {len(args.words)}")
        return list(args.words)
    return [line for line in (l.strip() for l in args.stdin) if line]


def _need_n(args) -> int:
    if args.n is None:
        raise UsageError(f"{args.command} needs --n")
    if args.n < 1:
        raise UsageError("--n must be at least 1")
    return args.n


def _emit(out: TextIO, args, obj: dict, text: str):
    if args.json:
        out.write(json.dumps(obj, sort_keys=True) + "\n")
    else:
        out.write(text if text.endswith("\n") or not text else text + "\n")


def _verdict_json(verdict) -> dict:
    obj = {"verdict": verdict.kind, "states_explored": verdict.states_explored}
    if isinstance(verdict, MutuallyBraided):
        obj["certificate"] = [str(m) for m in verdict.certificate.moves]
    elif not isinstance(verdict, NotMutuallyBraided):
        obj["budget"] = verdict.budget
    return obj


def _verdict_code(verdict) -> int:
    if isinstance(verdict, MutuallyBraided):
        return EXIT_YES
    if isinstance(verdict, NotMutuallyBraided):
        return EXIT_NO
    return EXIT_INDETERMINATE


def cmd_convert(args, out) -> int:
    n = _need_n(args)
    results = []
    for text in _words(args):
        w = parse_band_word(text, n)
        results.append((w, format_band_word(w) if args.to == "band" else str(band_to_artin(w))))
    if args.json:
        key = "band" if args.to == "band" else "artin"
        _emit(out, args, {"n": n, key: [r for _, r in results]}, "")
    else:
        for _, r in results:
            out.write(r + "\n")
    return EXIT_YES


def cmd_perm(args, out) -> int:
    n = _need_n(args)
    (text,) = _words(args, 1)
    p = permutation(parse_band_word(text, n))
    _emit(
        out, args,
        {"n": n, "images": list(p.images), "cycles": [list(c) for c in p.cycles()]},
        " ".join(map(str, p.images)) + "\t" + str(p),
    )
    return EXIT_YES


def cmd_invariants(args, out) -> int:
    n = _need_n(args)
    (text,) = _words(args, 1)
    w = parse_band_word(text, n)
    inv = closure_invariants(w)
    unknot = is_unknot_presentation(w)
    _emit(
        out, args,
        {
            "components": inv.components,
            "euler": inv.euler,
            "exponent_sum": inv.exponent_sum,
            "unknot": unknot,
        },
        f"components={inv.components} euler={inv.euler} "
        f"exponent_sum={inv.exponent_sum} unknot={str(unknot).lower()}",
    )
    return EXIT_YES


def cmd_neighbors(args, out) -> int:
    n = _need_n(args)
    (text,) = _words(args, 1)
    nbrs = neighbors(parse_band_word(text, n))
    _emit(
        out, args,
        {"neighbors": [{"move": str(m), "word": format_band_word(v)} for m, v in nbrs]},
        "".join(f"{m}\t{format_band_word(v)}\n" for m, v in nbrs),
    )
    return EXIT_YES


def cmd_equal(args, out) -> int:
    n = _need_n(args)
    if args.words:
        if len(args.words) != 2:
            raise UsageError("equal takes two words")
        pairs = [tuple(args.words)]
    else:
        pairs = []
        for line in _words(args):
            if "=" not in line:
                raise UsageError(f"expected 'u = v', got {line!r}")
            u, v = line.split("=", 1)
            pairs.append((u, v))
    results = []
    for u, v in pairs:
        try:
            results.append(monoid_equal(parse_band_word(u, n), parse_band_word(v, n), args.budget))
        except BudgetExhaustedError:
            results.append(None)
    names = ["indeterminate" if r is None else str(r).lower() for r in results]
    if args.json:
        _emit(out, args, {"equal": names[0] if len(names) == 1 else names}, "")
    else:
        out.write("".join(s + "\n" for s in names))
    if any(r is None for r in results):
        return EXIT_INDETERMINATE
    return EXIT_YES if all(results) else EXIT_NO


def cmd_conjugate(args, out) -> int:
    n = _need_n(args)
    (text,) = _words(args, 1)
    w = parse_band_word(text, n)
    report = equality_class(w, args.budget) if args.relations_only else conjugacy_orbit(w, args.budget)
    _emit(
        out, args,
        {
            "n": n,
            "k": len(w),
            "orbit_size": report.size,
            "exact": report.exact,
            "representative": format_band_word(report.representative),
            "members": [format_band_word(m) for m in report.members],
        },
        format_orbit(report),
    )
    return EXIT_YES if report.exact else EXIT_INDETERMINATE


def cmd_decide(args, out) -> int:
    n = _need_n(args)
    predicate = get_predicate(args.predicate)
    budget = args.budget if args.budget is not None else DECIDE_BUDGET
    texts = _words(args)
    batch = not args.words
    verdicts = []
    for text in texts:
        w = parse_band_word(text, n)
        verdicts.append((w, decide(w, predicate, budget)))
    if batch:
        if args.json:
            objs = [dict(word=format_band_word(w), **_verdict_json(v)) for w, v in verdicts]
            _emit(out, args, {"n": n, "predicate": predicate.name, "results": objs}, "")
        else:
            for w, v in verdicts:
                cert = " ".join(str(m) for m in v.certificate.moves) if isinstance(v, MutuallyBraided) else ""
                out.write(f"{format_band_word(w)}\t{v.kind}\t{cert}\n")
        codes = {_verdict_code(v) for _, v in verdicts}
        return max(codes) if codes else EXIT_YES
    if len(verdicts) != 1:
        raise UsageError("decide takes one word (or none, to read stdin)")
    w, v = verdicts[0]
    if args.json:
        obj = dict(n=n, word=format_band_word(w), predicate=predicate.name, **_verdict_json(v))
        _emit(out, args, obj, "")
    elif isinstance(v, MutuallyBraided):
        out.write(format_certificate(v.certificate))
    elif isinstance(v, NotMutuallyBraided):
        out.write(f"{v.kind} states_explored={v.states_explored}\n")
    else:
        out.write(f"{v.kind} budget={v.budget} states_explored={v.states_explored}\n")
    return _verdict_code(v)


def cmd_replay(args, out) -> int:
    if args.words and len(args.words) > 1:
        raise UsageError("replay takes one certificate file")
    if args.words and args.words[0] != "-":
        with open(args.words[0], encoding="utf-8") as fh:
            text = fh.read()
    else:
        text = args.stdin.read()
    cert = parse_certificate(text)
    if args.n is not None and args.n != cert.initial.strands:
        raise UsageError(f"--n {args.n} disagrees with certificate n={cert.initial.strands}")
    name = args.predicate or cert.predicate
    predicate = PRESETS.get(name)
    final = replay(cert, predicate)
    valid = final == cert.initial
    if args.json:
        _emit(
            out, args,
            {
                "valid": valid,
                "final": format_band_word(final),
                "certificate": [str(m) for m in cert.moves],
                "predicate_checked": predicate is not None,
            },
            "",
        )
    elif valid:
        out.write(format_certificate(cert, valid=True))
    else:
        out.write(f"INVALID final word {format_band_word(final)}\n")
    return EXIT_YES if valid else EXIT_NO


def census_to_json(c: Census) -> dict:
    return {
        "n": c.n,
        "predicate": c.predicate,
        "words": c.words,
        "records": [
            {
                "representative": format_band_word(r.representative),
                "orbit_size": r.orbit_size,
                "verdict": r.verdict.kind,
                "components": r.invariants.components,
                "euler": r.invariants.euler,
            }
            for r in c.records
        ],
    }


def cmd_census(args, out) -> int:
    n = _need_n(args)
    if n < 2:
        raise UsageError("census needs --n >= 2")
    predicate = get_predicate(args.predicate)
    budget = args.budget if args.budget is not None else DECIDE_BUDGET
    c = census(n, predicate, budget, workers=args.jobs)
    _emit(out, args, census_to_json(c), format_census(c))
    if any(r.verdict.kind == "indeterminate" or not r.orbit_exact for r in c.records):
        return EXIT_INDETERMINATE
    return EXIT_YES


COMMANDS = {
    "convert": cmd_convert,
    "perm": cmd_perm,
    "invariants": cmd_invariants,
    "neighbors": cmd_neighbors,
    "equal": cmd_equal,
    "conjugate": cmd_conjugate,
    "decide": cmd_decide,
    "replay": cmd_replay,
    "census": cmd_census,
}


def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--n", type=int, help="strand count")
    common.add_argument("--budget", type=int, help="maximum states explored")
    common.add_argument("--predicate", help=f"sweep predicate ({', '.join(sorted(PRESETS))})")
    common.add_argument("--json", action="store_true", help="emit one JSON object")

    parser = _Parser(prog="bandbraid", description="Band-generator braid words and sweep certificates.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)
    for name in COMMANDS:
        p = sub.add_parser(name, parents=[common])
        p.add_argument("words", nargs="*")
        if name == "convert":
            p.add_argument("--to", choices=["artin", "band"], default="artin")
        if name == "conjugate":
            p.add_argument("--relations-only", action="store_true",
                           help="relation moves only (the equality class)")
        if name == "census":
            p.add_argument("--jobs", type=int, default=1, help="worker processes for decisions")
    return parser


def run(argv: Sequence[str], stdin: TextIO | None = None, stdout: TextIO | None = None,
        stderr: TextIO | None = None) -> int:
    stdin = stdin if stdin is not None else sys.stdin
    stdout = stdout if stdout is not None else sys.stdout
    stderr = stderr if stderr is not None else sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(list(argv))
        args.stdin = stdin
        if args.command in ("equal", "conjugate") and args.budget is None:
            args.budget = DEFAULT_BUDGET
        if args.budget is not None and args.budget < 1:
            raise UsageError("--budget must be positive")
        if args.predicate is None and args.command != "replay":
            args.predicate = "any"
        if args.predicate is not None and args.predicate not in PRESETS:
            raise UsageError(f"unknown predicate {args.predicate!r}; choose from {', '.join(sorted(PRESETS))}")
        return COMMANDS[args.command](args, stdout)
    except UsageError as exc:
        stderr.write(f"bandbraid: {exc}\n")
        return EXIT_USAGE
    except (BraidError, OSError) as exc:
        stderr.write(f"bandbraid: {exc}\n")
        return EXIT_DATA


def main(argv: Sequence[str] | None = None) -> None:
    sys.exit(run(sys.argv[1:] if argv is None else argv))


if __name__ == "__main__":
    main()
