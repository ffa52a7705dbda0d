"""Command-line entry point: ``coact build|green|cong|check|fuzz``.

Results go to stdout as JSON (``build`` prints a Cayley table unless ``--json``).
Errors go to stderr as a JSON object and exit with status 2; a check or fuzz
run that finds a failure exits with status 1.
"""
from __future__ import annotations

import argparse
import json
import os
import sys
import time

from .acts import ActError, regular_act
from .computable import ComputableMonoid
from .congruence import congruence_closure
from .formats import SpecError, emit_congruence, emit_table, parse_monoid_spec, parse_pairs
from .harness.fuzz import fuzz_summary
from .harness.registry import CHECKS, CheckError, run_check
from .monoid import FiniteMonoid, MonoidError, green, idempotents, is_inverse, is_regular


def _read_spec(arg: str):
    text = arg
    if arg == "-":
        text = sys.stdin.read()
    elif os.path.isfile(arg):
        with open(arg, encoding="utf-8") as fh:
            text = fh.read()
    return parse_monoid_spec(text)


def _dump(obj) -> str:
    return json.dumps(obj, indent=2, sort_keys=True, ensure_ascii=False)


def _finite(m) -> FiniteMonoid:
    if not isinstance(m, FiniteMonoid):
        raise MonoidError("this command needs a finite monoid")
    return m


def cmd_build(args) -> int:
    m = _read_spec(args.spec)
    if isinstance(m, ComputableMonoid):
        ball = sorted(m.ball(args.radius), key=m.sort_key)
        print(_dump({"kind": type(m).__name__, "finite": False, "radius": args.radius,
                     "ball_size": len(ball), "ball": [m.label(x) for x in ball[:50]]}))
        return 0
    if args.validate_only:
        print(_dump({"valid": True, "size": m.size}))
    elif args.json:
        print(_dump({"size": m.size, "elements": list(m.labels), "identity": m.label(m.identity),
                     "zero": None if m.zero is None else m.label(m.zero),
                     "rows": [[m.label(x) for x in r] for r in m.rows]}))
    else:
        sys.stdout.write(emit_table(m))
    return 0


def cmd_green(args) -> int:
    m = _finite(_read_spec(args.spec))
    g = green(m)
    out = {name: [[m.label(x) for x in cls] for cls in g.classes(name)]
           for name in ("R", "L", "H", "D", "J")}
    out["idempotents"] = [m.label(e) for e in idempotents(m)]
    out["regular"] = is_regular(m)
    out["inverse"] = is_inverse(m)
    print(_dump(out))
    return 0


def cmd_cong(args) -> int:
    m = _finite(_read_spec(args.spec))
    A = regular_act(m)
    H = [(A.index(a), A.index(b)) for a, b in parse_pairs(args.pairs)]
    rho = congruence_closure(A, H)
    print(_dump(emit_congruence(rho, [tuple(w) for w in args.witness or []])))
    return 0


def _param(text: str):
    if "=" not in text:
        raise CheckError(f"parameter {text!r} must look like key=value")
    key, value = text.split("=", 1)
    try:
        return key, json.loads(value)
    except json.JSONDecodeError:
        return key, value


def cmd_check(args) -> int:
    if args.list or args.name is None:
        print(_dump({name: help_ for name, (_, help_) in sorted(CHECKS.items())}))
        return 0
    params = dict(_param(p) for p in args.params)
    t0 = time.perf_counter()
    rep = run_check(args.name, params)
    out = rep.to_dict()
    if args.timing:
        out["wall_time_s"] = round(time.perf_counter() - t0, 6)
    text = _dump(out)
    if args.json:
        with open(args.json, "w", encoding="utf-8") as fh:
            fh.write(text + "\n")
    print(text)
    return 0 if rep.verified else 1


def cmd_fuzz(args) -> int:
    summary = fuzz_summary(args.seed, args.count, args.max_size)
    print(_dump(summary))
    return 0 if summary["ok"] else 1


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="coact", description="Monoids, right acts and right congruences.")
    sub = p.add_subparsers(dest="command", required=True)

    b = sub.add_parser("build", help="build and validate a monoid spec")
    b.add_argument("spec", help="spec text, a file path, or - for stdin")
    b.add_argument("--validate-only", action="store_true")
    b.add_argument("--json", action="store_true", help="print the table as JSON")
    b.add_argument("--radius", type=int, default=2, help="ball radius for infinite monoids")
    b.set_defaults(func=cmd_build)

    g = sub.add_parser("green", help="Green's relations of a finite monoid")
    g.add_argument("spec")
    g.set_defaults(func=cmd_green)

    c = sub.add_parser("cong", help="right congruence generated by pairs")
    c.add_argument("spec")
    c.add_argument("pairs", help="a=b;c=d or a JSON list of pairs")
    c.add_argument("--witness", nargs=2, action="append", metavar=("A", "B"))
    c.set_defaults(func=cmd_cong)

    k = sub.add_parser("check", help="run a construction check")
    k.add_argument("name", nargs="?")
    k.add_argument("params", nargs="*", help="key=value (values parsed as JSON when possible)")
    k.add_argument("--json", metavar="OUT", help="also write the report to OUT")
    k.add_argument("--timing", action="store_true", help="add wall time to the report")
    k.add_argument("--list", action="store_true", help="list available checks")
    k.set_defaults(func=cmd_check)

    f = sub.add_parser("fuzz", help="randomised oracle and implication suites")
    f.add_argument("--seed", type=int, default=1)
    f.add_argument("--count", type=int, default=50)
    f.add_argument("--max-size", type=int, default=7)
    f.set_defaults(func=cmd_fuzz)
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except SpecError as e:
        err = e.to_dict()
    except CheckError as e:
        err = {"error": "check", "message": str(e)}
        if "unknown check" in str(e):
            err["available"] = sorted(CHECKS)
    except (MonoidError, ActError, KeyError, ValueError, TypeError) as e:
        err = {"error": type(e).__name__, "message": str(e.args[0]) if e.args else str(e)}
    sys.stderr.write(_dump(err) + "\n")
    return 2


if __name__ == "__main__":
    sys.exit(main())
