"""Command-line front end.

    tclass check <predicate> --domain cfg.json --ideal EXPR [--close]
    tclass suite <closure|thm22|thm26|prop23|facts> --domain cfg.json --seed S --n N
    tclass semigroup --domain cfg.json
    tclass eval --domain cfg.json -e EXPR [-e EXPR ...] [--let NAME=EXPR ...]

Exit status: 0 success, 1 a check is false or a suite has violations,
2 usage or parse errors, 3 unrepresentable results or inconclusive verdicts.
"""
from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .domains import domain_from_config
from .errors import IdealError, NotTIdeal, Unrepresentable, WrongDimension
from .expr import ExprSyntaxError, UnboundIdent, calc
from .regularity import PREDICATES, check
from .verifier import SUITES, class_semigroup_report

OK, FALSE, USAGE, UNDECIDED = 0, 1, 2, 3


def _domain(arg: str):
    text = arg if arg.lstrip().startswith("{") else Path(arg).read_text()
    return domain_from_config(json.loads(text))


def _env(domain, lets):
    env = {}
    for item in lets or []:
        name, eq, text = item.partition("=")
        if not eq or not name.strip().isidentifier():
            raise ValueError(f"--let expects NAME=EXPR, got {item!r}")
        env[name.strip()] = calc(text, domain, env)
    return env


def _emit(obj, as_json, lines):
    if as_json:
        print(json.dumps(obj, indent=2))
    else:
        for line in lines:
            print(line)


def cmd_check(args):
    D = _domain(args.domain)
    I = calc(args.ideal, D, _env(D, args.let))
    v = check(args.predicate, I, auto_close=args.close)
    d = v.to_dict()
    lines = [f"{v.predicate}({v.ideal}) = {d['result']}"]
    if v.witness is not None:
        lines.append(f"witness: {v.witness}")
    lines += [f"  {k}: {val}" for k, val in v.trace.items()]
    _emit(d, args.json, lines)
    if v.inconclusive:
        return UNDECIDED
    return OK if v.result else FALSE


def cmd_suite(args):
    D = _domain(args.domain)
    rep = SUITES[args.name](D, args.seed, args.n)
    lines = [f"{rep.suite} on {D}: {'pass' if rep.passed else 'FAIL'} ({len(rep.violations)} violations, n={rep.n}, seed={rep.seed})"]
    lines += [f"  {k}: {v}" for k, v in sorted(rep.stats.items())]
    lines += [f"  violation #{v['index']}: {v['failed']} at {v['ideal']}" for v in rep.violations]
    _emit(rep.to_dict(timing=args.timing), args.json, lines)
    return OK if rep.passed else FALSE


def cmd_semigroup(args):
    D = _domain(args.domain)
    rep, S = class_semigroup_report(D, args.seed)
    d = rep.to_dict(timing=args.timing)
    d["semigroup"] = S.to_dict()
    lines = [f"S_t of {D}: {len(S)} classes"]
    lines += [f"  [{k}] {lab}" for k, lab in enumerate(S.labels)]
    lines.append("table:")
    lines += ["  " + " ".join(str(x) for x in row) for row in S.table]
    lines.append(f"idempotents: {S.idempotents}")
    lines.append(f"clifford: {S.is_clifford()}  boolean: {S.is_boolean()}")
    _emit(d, args.json, lines)
    return OK if rep.passed else FALSE


def cmd_eval(args):
    D = _domain(args.domain)
    env = _env(D, args.let)
    out = []
    for text in args.expr:
        out.append({"expr": text, "result": str(calc(text, D, env))})
    _emit(out, args.json, [f"{r['expr']} = {r['result']}" for r in out])
    return OK


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="tclass", description="Fractional-ideal calculus with t-closure.")
    sub = p.add_subparsers(dest="command", required=True)

    def common(sp):
        sp.add_argument("--domain", required=True, help="JSON config file or inline JSON object")
        sp.add_argument("--json", action="store_true", help="machine-readable output")

    c = sub.add_parser("check", help="decide one predicate at one ideal")
    c.add_argument("predicate", choices=sorted(PREDICATES))
    common(c)
    c.add_argument("--ideal", required=True)
    c.add_argument("--let", action="append", metavar="NAME=EXPR")
    c.add_argument("--close", action="store_true", help="t-close the input first")
    c.set_defaults(func=cmd_check)

    s = sub.add_parser("suite", help="run a seeded theorem suite")
    s.add_argument("name", choices=sorted(SUITES))
    common(s)
    s.add_argument("--seed", type=int, default=0)
    s.add_argument("--n", type=int, default=200)
    s.add_argument("--timing", action="store_true", help="include wall_time_ms")
    s.set_defaults(func=cmd_suite)

    g = sub.add_parser("semigroup", help="enumerate the t-class semigroup")
    common(g)
    g.add_argument("--seed", type=int, default=0)
    g.add_argument("--timing", action="store_true")
    g.set_defaults(func=cmd_semigroup)

    e = sub.add_parser("eval", help="evaluate ideal expressions")
    common(e)
    e.add_argument("-e", "--expr", action="append", required=True)
    e.add_argument("--let", action="append", metavar="NAME=EXPR")
    e.set_defaults(func=cmd_eval)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return USAGE if exc.code else OK
    try:
        return args.func(args)
    except Unrepresentable as exc:
        print(f"unrepresentable: {exc}", file=sys.stderr)
        return UNDECIDED
    except NotTIdeal as exc:
        print(f"not a t-ideal: {exc} (pass --close to t-close it first)", file=sys.stderr)
        return USAGE
    except (ExprSyntaxError, UnboundIdent, WrongDimension, ValueError, OSError, KeyError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return USAGE
    except IdealError as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return USAGE


if __name__ == "__main__":
    sys.exit(main())
