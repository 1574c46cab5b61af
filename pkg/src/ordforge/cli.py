"""Command-line front end.

Exit codes: 2 for usage errors, 1 for invalid terms or rejected systems,
0 otherwise.  Running out of budget is a normal outcome and exits 0 with the
status in the output.
"""
from __future__ import annotations

import argparse
import json
import math
import os
import sys

from . import ahat, embeddings, veblen
from .ackermann import AckermannDilator, EvalBudget, ack_nf, fgh_eval
from .binary import BinaryDilator
from .errors import (EvalOverflow, InvalidSystem, InvalidTerm, OrdforgeError,
                     TermSyntaxError)
from .goodstein import (classic_run, descend_search, direct_limit, parse_base,
                        run, system_from_json, validate_system)
from .orders import parse_order
from .suites import run_suite, SUITES
from .syntax import format_aterm, format_elem, format_vterm, parse_aterm, parse_vterm

DEFAULT_MAX_DIGITS = 1233  # about 4096 bits


def _max_digits(flag):
    if flag is not None:
        return flag
    env = os.environ.get("ORDFORGE_MAX_DIGITS")
    return int(env) if env else DEFAULT_MAX_DIGITS


def _budget(digits: int) -> EvalBudget:
    return EvalBudget(max_bits=math.ceil(digits * math.log2(10)) + 1)


def _emit(args, payload: dict, text: str):
    print(json.dumps(payload) if args.json else text)


def _print_trace(args, trace):
    if args.json:
        print(json.dumps(trace.to_json()))
        return
    for s in trace.steps:
        print(f"{s.i}\t{s.base}\t{s.value}")
    print(f"status: {trace.status}" + (f" at {trace.at}" if trace.at is not None else ""))


def _load_system(path):
    with open(path) as fh:
        return system_from_json(json.load(fh))


def cmd_classic(args):
    base = parse_base(args.base)
    trace = classic_run(base, args.start, args.steps, _budget(_max_digits(args.max_digits)).max_bits)
    _print_trace(args, trace)
    return 0


def cmd_run(args):
    sys_ = _load_system(args.system)
    reason = validate_system(sys_, args.steps)
    if reason:
        _emit(args, {"status": "reject", "reason": reason}, f"reject: {reason}")
        return 1
    D = BinaryDilator() if args.dilator == "binary" else AckermannDilator()
    trace = run(D, sys_, args.start, args.steps, _budget(_max_digits(args.max_digits)))
    _print_trace(args, trace)
    return 0


def cmd_nf(args):
    t = ack_nf(args.m)
    _emit(args, {"m": str(args.m), "term": format_aterm(t)}, format_aterm(t))
    return 0


def cmd_fgh(args):
    try:
        v = fgh_eval(args.b, args.n, _budget(_max_digits(args.max_digits)))
    except EvalOverflow:
        _emit(args, {"status": "overflow"}, "overflow")
        return 0
    _emit(args, {"status": "ok", "value": str(v)}, str(v))
    return 0


def parse_term(grammar: str, text: str, X=None):
    """Parse and, when an order is given, validate a term."""
    if grammar == "veblen":
        t = parse_vterm(text)
        if X is not None:
            veblen.require_valid(X, t)
    else:
        t = parse_aterm(text)
        if X is not None:
            ahat.require_valid(X, t)
    return t


def format_term(t) -> str:
    if isinstance(t, (veblen.VZero, veblen.Phi, veblen.Sum)):
        return format_vterm(t)
    return format_aterm(t)


def cmd_compare(args):
    X = parse_order(args.order)
    s = parse_term(args.system, args.t1, X)
    t = parse_term(args.system, args.t2, X)
    cmp = veblen.veb_compare if args.system == "veblen" else ahat.ahat_compare
    result = cmp(X, s, t)
    _emit(args, {"result": str(result)}, str(result))
    return 0


def cmd_embed(args):
    X = parse_order(args.order)
    if args.dir == "up":
        out = format_vterm(embeddings.o_up(X, parse_term("ahat", args.term, X)))
    else:
        out = format_aterm(embeddings.o_down(X, parse_term("veblen", args.term, X)))
    _emit(args, {"term": out}, out)
    return 0


def cmd_limit(args):
    sys_ = _load_system(args.system)
    reason = validate_system(sys_, args.depth)
    if reason:
        _emit(args, {"status": "reject", "reason": reason}, f"reject: {reason}")
        return 1
    points = direct_limit(sys_, args.depth).elements()
    payload = {"points": [list(p) for p in points]}
    lines = ["carrier (ascending): " + " < ".join(format_elem(p) for p in points)]
    if args.chain:
        chain = descend_search(sys_, args.depth, args.chain)
        payload["chain"] = None if chain is None else [list(p) for p in chain]
        lines.append("no descending chain of length %d" % args.chain if chain is None
                     else "descending chain: " + " > ".join(format_elem(p) for p in chain))
    _emit(args, payload, "\n".join(lines))
    return 0


def cmd_check(args):
    results = run_suite(args.suite, seed=args.seed, iters=args.iters)
    ok = all(r.ok for r in results)
    if args.json:
        print(json.dumps({"ok": ok, "properties": [
            {"name": r.name, "cases": r.cases, "failures": r.failures,
             "example": None if r.example is None else repr(r.example)} for r in results]}))
    else:
        for r in results:
            print(r.line())
    return 0 if ok else 1


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="machine-readable output")
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("--max-digits", type=int, default=None,
                        help="decimal digit cap for values (env ORDFORGE_MAX_DIGITS)")

    p = argparse.ArgumentParser(prog="ordforge", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    c = sub.add_parser("classic", parents=[common], help="hereditary-base Goodstein sequence")
    c.add_argument("--start", type=int, required=True)
    c.add_argument("--base", default="affine:2,1", help="constant:V | affine:I,S | table:A,B/T")
    c.add_argument("--steps", type=int, default=10)
    c.set_defaults(func=cmd_classic)

    c = sub.add_parser("run", parents=[common], help="Goodstein sequence for a dilator and system")
    c.add_argument("--dilator", choices=["binary", "ackermann"], required=True)
    c.add_argument("--system", required=True, help="system JSON file")
    c.add_argument("--start", type=int, required=True)
    c.add_argument("--steps", type=int, default=100)
    c.set_defaults(func=cmd_run)

    c = sub.add_parser("nf", parents=[common], help="Ackermann normal form of M")
    c.add_argument("m", type=int)
    c.set_defaults(func=cmd_nf)

    c = sub.add_parser("fgh", parents=[common], help="evaluate F_B(N)")
    c.add_argument("b", type=int)
    c.add_argument("n", type=int)
    c.set_defaults(func=cmd_fgh)

    c = sub.add_parser("compare", parents=[common], help="compare two terms")
    c.add_argument("--system", choices=["veblen", "ahat"], required=True)
    c.add_argument("--order", required=True)
    c.add_argument("t1")
    c.add_argument("t2")
    c.set_defaults(func=cmd_compare)

    c = sub.add_parser("embed", parents=[common], help="apply an order embedding")
    c.add_argument("--dir", choices=["up", "down"], required=True)
    c.add_argument("--order", required=True)
    c.add_argument("term")
    c.set_defaults(func=cmd_embed)

    c = sub.add_parser("limit", parents=[common], help="direct limit of a system")
    c.add_argument("--system", required=True)
    c.add_argument("--depth", type=int, default=10)
    c.add_argument("--chain", type=int, default=0, help="search a descending chain of this length")
    c.set_defaults(func=cmd_limit)

    c = sub.add_parser("check", parents=[common], help="run a property suite")
    c.add_argument("--suite", choices=[*SUITES, "all"], required=True)
    c.add_argument("--iters", type=int, default=1000)
    c.set_defaults(func=cmd_check)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (InvalidTerm, InvalidSystem) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except TermSyntaxError as exc:
        print(f"syntax error: {exc}", file=sys.stderr)
        return 2
    except (OrdforgeError, OSError, json.JSONDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
