"""Command-line entry point.

Exit codes: 0 for success (including an Entailed verdict and a passing
verification), 1 for a negative result (a Collapsing verdict, a failed
verification, an invalid proof), 2 for usage, syntax or domain errors.
"""

from __future__ import annotations

import argparse
import json
import random
import sys
from typing import Sequence

from . import __version__
from .algebra import (CarrierError, ClosureBudget, EvaluationError, check_axioms,
                      closure, evaluate)
from .decide import Collapsing, Entailed, decide
from .jomega import jw_descent, jw_handle, jw_mul, jw_table, jw_unpair, jw_verify
from .normalize import normalize
from .ordinals import Ord, OrdinalSyntaxError, format_ord, parse_ord
from .proofs import (check_derivation, derivation_from_json, derivation_to_json)
from .stages import StageAlgebra
from .terms import (Identity, ParseError, parse, parse_identity, random_identity,
                    render, render_identity)

USAGE_ERROR = 2


class _CliError(Exception):
    def __init__(self, message: str, code: int = USAGE_ERROR):
        super().__init__(message)
        self.code = code


def _parser() -> argparse.ArgumentParser:
    # The global flags are declared twice: with real defaults on the top
    # parser and with SUPPRESS on a parent attached to every subcommand, so
    # they are accepted on either side of the subcommand name.
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "json"),
                        default=argparse.SUPPRESS,
                        help="output format (default: text)")
    common.add_argument("--seed", type=int, default=argparse.SUPPRESS,
                        help="seed for random term corpora")
    common.add_argument("--budget", type=int, default=argparse.SUPPRESS,
                        help="element cap for closure computations")

    top = argparse.ArgumentParser(
        prog="jtalg",
        description="Jonsson-Tarski algebra workbench: decide identities, "
                    "normalize terms, check proofs, and query the pairing algebras.")
    top.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    top.add_argument("--format", choices=("text", "json"), default="text")
    top.add_argument("--seed", type=int, default=0)
    top.add_argument("--budget", type=int, default=None)
    sub = top.add_subparsers(dest="command", required=True)

    p = sub.add_parser("decide", parents=[common], help="decide an identity 's = t'")
    p.add_argument("identity")
    p.add_argument("--proof", action="store_true", help="emit the derivation")

    p = sub.add_parser("normalize", parents=[common], help="normalize a term")
    p.add_argument("term")
    p.add_argument("--proof", action="store_true", help="emit the derivation")

    p = sub.add_parser("check-proof", parents=[common],
                       help="replay a serialized derivation")
    p.add_argument("file", help="JSON file as emitted by decide/normalize --proof")
    p.add_argument("--hypothesis", help="identity available as the hyp rule")

    p = sub.add_parser("eval", parents=[common], help="evaluate a term in an algebra")
    p.add_argument("term")
    p.add_argument("--algebra", choices=("jw", "jw1"), default="jw")
    p.add_argument("--env", required=True,
                   help='JSON assignment, e.g. \'{"x": 3}\' or \'{"x": "w+1"}\'')
    p.add_argument("--stages", type=int, default=2)

    p = sub.add_parser("closure", parents=[common],
                       help="generate a subalgebra window")
    p.add_argument("generators", help="comma-separated elements")
    p.add_argument("--algebra", choices=("jw", "jw1"), default="jw")
    p.add_argument("--stages", type=int, default=2)
    p.add_argument("--ceiling", default=None, help="largest admitted product")
    p.add_argument("--unary-only", action="store_true",
                   help="close under the projections only")

    p = sub.add_parser("corpus", parents=[common],
                       help="emit seeded random identities")
    p.add_argument("--count", type=int, default=10)
    p.add_argument("--max-size", type=int, default=12)

    jw = sub.add_parser("jw", help="the algebra on the naturals").add_subparsers(
        dest="jw_command", required=True)
    p = jw.add_parser("mul", parents=[common], help="product of two naturals")
    p.add_argument("p", type=int)
    p.add_argument("q", type=int)
    p = jw.add_parser("unpair", parents=[common], help="row and column of a value")
    p.add_argument("n", type=int)
    p = jw.add_parser("descent", parents=[common],
                      help="iterated left projections down to 0")
    p.add_argument("n", type=int)
    p = jw.add_parser("verify", parents=[common], help="exhaustive window verification")
    p.add_argument("--bound", type=int, default=10000)
    p = jw.add_parser("table", parents=[common], help="print a table block")
    p.add_argument("--rows", type=int, default=5)
    p.add_argument("--cols", type=int, default=5)

    jw1 = sub.add_parser("jw1", help="the staged algebra above the first limit") \
             .add_subparsers(dest="jw1_command", required=True)
    for name, hlp in (("left", "row header of an ordinal"),
                      ("right", "column header of an ordinal"),
                      ("descent", "offset descent down to the limit part")):
        p = jw1.add_parser(name, parents=[common], help=hlp)
        p.add_argument("ordinal")
        p.add_argument("--stages", type=int, default=None)
    p = jw1.add_parser("mul", parents=[common], help="product of two ordinals")
    p.add_argument("o1")
    p.add_argument("o2")
    p.add_argument("--stages", type=int, default=None)
    p = jw1.add_parser("verify", parents=[common], help="stagewise window verification")
    p.add_argument("--stages", type=int, default=2)
    p.add_argument("--window", type=int, default=32)
    # dump owns --format for its payload (csv or json), so no common parent
    p = jw1.add_parser("dump", help="emit the truncated table")
    p.add_argument("--stages", type=int, default=2)
    p.add_argument("--window", type=int, default=16)
    p.add_argument("--format", dest="dump_format", choices=("json", "csv"), default="csv")
    return top


def _emit(args, text_lines, json_obj) -> None:
    if args.format == "json":
        print(json.dumps(json_obj, indent=2))
    else:
        for line in text_lines:
            print(line)


def _parse_ord_arg(text: str) -> Ord:
    try:
        return parse_ord(text)
    except OrdinalSyntaxError as e:
        raise _CliError(str(e))


def _stage_algebra(args, *ords: Ord) -> StageAlgebra:
    stages = getattr(args, "stages", None)
    if stages is None:
        stages = max((o.limit_index for o in ords), default=0) + 1
    if any(o.limit_index >= stages for o in ords):
        raise _CliError(
            f"ordinal outside the configured {stages} stage(s); raise --stages")
    return StageAlgebra(stages)


def _cmd_decide(args) -> int:
    ident = parse_identity(args.identity)
    verdict = decide(ident)
    entailed = isinstance(verdict, Entailed)
    obj: dict = {"identity": render_identity(ident),
                 "verdict": "entailed" if entailed else "collapsing"}
    lines = ["Entailed" if entailed else "Collapsing"]
    if args.proof:
        obj["proof"] = derivation_to_json(verdict.proof)
        if not entailed:
            obj["hypothesis"] = render_identity(ident)
        lines.append(json.dumps(obj, indent=2))
    _emit(args, lines, obj)
    return 0 if entailed else 1


def _cmd_normalize(args) -> int:
    t = parse(args.term)
    nf, deriv = normalize(t)
    obj: dict = {"term": render(t), "normal_form": render(nf)}
    lines = [render(nf)]
    if args.proof:
        obj["proof"] = derivation_to_json(deriv)
        lines.append(json.dumps(obj["proof"], indent=2))
    _emit(args, lines, obj)
    return 0


def _cmd_check_proof(args) -> int:
    try:
        with open(args.file, "r", encoding="utf-8") as fh:
            payload = json.load(fh)
    except (OSError, json.JSONDecodeError) as e:
        raise _CliError(f"cannot read proof file: {e}")
    hypothesis = None
    if isinstance(payload, dict) and "proof" in payload:
        if "hypothesis" in payload:
            hypothesis = parse_identity(payload["hypothesis"], allow_reserved_names=True)
        payload = payload["proof"]
    if args.hypothesis:
        hypothesis = parse_identity(args.hypothesis, allow_reserved_names=True)
    try:
        deriv = derivation_from_json(payload)
    except (KeyError, TypeError, ParseError) as e:
        raise _CliError(f"malformed derivation: {e}")
    result = check_derivation(deriv, hypothesis)
    obj = {"valid": result.ok}
    if not result.ok:
        obj["step"] = result.step_index
        obj["reason"] = result.reason
    _emit(args, [str(result)], obj)
    return 0 if result.ok else 1


def _assignment(args, alg_name: str, stages: int):
    try:
        env_raw = json.loads(args.env)
    except json.JSONDecodeError as e:
        raise _CliError(f"bad --env JSON: {e}")
    if not isinstance(env_raw, dict):
        raise _CliError("--env must be a JSON object")
    if alg_name == "jw":
        return jw_handle(), env_raw
    env = {k: _parse_ord_arg(v) if isinstance(v, str) else Ord(0, v)
           for k, v in env_raw.items()}
    algebra = _stage_algebra(argparse.Namespace(stages=stages), *env.values())
    return algebra.handle(window=16), env


def _cmd_eval(args) -> int:
    t = parse(args.term)
    handle, env = _assignment(args, args.algebra, args.stages)
    try:
        value = evaluate(t, handle, env)
    except (EvaluationError, CarrierError) as e:
        raise _CliError(str(e))
    out = value if isinstance(value, int) else format_ord(value)
    _emit(args, [str(out)], {"term": render(t), "value": out})
    return 0


def _cmd_closure(args) -> int:
    if args.algebra == "jw":
        handle = jw_handle()
        gens = [int(g) for g in args.generators.split(",")]
        ceiling = int(args.ceiling) if args.ceiling is not None else None
    else:
        gens = [_parse_ord_arg(g) for g in args.generators.split(",")]
        algebra = _stage_algebra(args, *gens)
        handle = algebra.handle(window=16)
        ceiling = _parse_ord_arg(args.ceiling) if args.ceiling is not None else None
    budget = ClosureBudget(max_elements=args.budget, product_ceiling=ceiling,
                           products=not args.unary_only)
    result = closure(handle, gens, budget)
    shown = [e if isinstance(e, int) else format_ord(e) for e in result.elements]
    _emit(args, [" ".join(map(str, shown)),
                 f"truncated: {result.truncated} deferred: {len(result.deferred)}"],
          {"elements": shown, "truncated": result.truncated,
           "deferred": len(result.deferred)})
    return 0


def _cmd_corpus(args) -> int:
    rng = random.Random(args.seed)
    lines = [render_identity(random_identity(rng, args.max_size))
             for _ in range(args.count)]
    _emit(args, lines, {"seed": args.seed, "identities": lines})
    return 0


def _cmd_jw(args) -> int:
    if args.jw_command == "mul":
        value = jw_mul(args.p, args.q)
        _emit(args, [str(value)], {"p": args.p, "q": args.q, "value": value})
        return 0
    if args.jw_command == "unpair":
        p, q = jw_unpair(args.n)
        _emit(args, [f"{p} {q}"], {"n": args.n, "left": p, "right": q})
        return 0
    if args.jw_command == "descent":
        chain = jw_descent(args.n)
        _emit(args, [" ".join(map(str, chain))], {"n": args.n, "chain": chain})
        return 0
    if args.jw_command == "verify":
        report = jw_verify(args.bound)
        lines = [f"bound {report.bound}: values {report.values_checked}, "
                 f"pairs {report.pairs_checked}, "
                 f"{'all checks passed' if report.ok else 'FAILURES: ' + str(len(report.failures))}"]
        _emit(args, lines, report.to_json())
        return 0 if report.ok else 1
    if args.jw_command == "table":
        block = jw_table(args.rows, args.cols)
        width = max(len(str(v)) for row in block for v in row)
        lines = [" ".join(str(v).rjust(width) for v in row) for row in block]
        _emit(args, lines, {"rows": args.rows, "cols": args.cols, "table": block})
        return 0
    raise _CliError(f"unknown jw command {args.jw_command!r}")


def _cmd_jw1(args) -> int:
    cmd = args.jw1_command
    if cmd in ("left", "right", "descent"):
        o = _parse_ord_arg(args.ordinal)
        algebra = _stage_algebra(args, o)
        if cmd == "descent":
            chain = [format_ord(x) for x in algebra.descent(o)]
            _emit(args, [" ".join(chain)], {"ordinal": format_ord(o), "chain": chain})
            return 0
        value = algebra.left(o) if cmd == "left" else algebra.right(o)
        _emit(args, [format_ord(value)],
              {"ordinal": format_ord(o), cmd: format_ord(value)})
        return 0
    if cmd == "mul":
        o1, o2 = _parse_ord_arg(args.o1), _parse_ord_arg(args.o2)
        algebra = _stage_algebra(args, o1, o2)
        value = algebra.mul(o1, o2)
        _emit(args, [format_ord(value)],
              {"o1": format_ord(o1), "o2": format_ord(o2), "value": format_ord(value)})
        return 0
    if cmd == "verify":
        report = StageAlgebra(args.stages).verify(args.window)
        lines = [f"stages {report.stages} window {report.window}: "
                 f"{'all checks passed' if report.ok else 'FAILURES'}"]
        for name, checked, fails in report.sections:
            lines.append(f"  {name}: checked {checked}, failures {len(fails)}")
        _emit(args, lines, report.to_json())
        return 0 if report.ok else 1
    if cmd == "dump":
        algebra = StageAlgebra(args.stages)
        entries = algebra.dump(args.window)
        if args.dump_format == "csv":
            print("row,col,value")
            for p, q, v in entries:
                print(f"{format_ord(p)},{format_ord(q)},{format_ord(v)}")
        else:
            print(json.dumps({
                "stages": args.stages,
                "window": args.window,
                "cells": [{"row": format_ord(p), "col": format_ord(q),
                           "value": format_ord(v)} for p, q, v in entries],
            }, indent=2))
        return 0
    raise _CliError(f"unknown jw1 command {cmd!r}")


_COMMANDS = {
    "decide": _cmd_decide,
    "normalize": _cmd_normalize,
    "check-proof": _cmd_check_proof,
    "eval": _cmd_eval,
    "closure": _cmd_closure,
    "corpus": _cmd_corpus,
    "jw": _cmd_jw,
    "jw1": _cmd_jw1,
}


def run(argv: Sequence[str]) -> int:
    """Dispatch one invocation; returns the exit code."""
    try:
        args = _parser().parse_args(argv)
    except SystemExit as e:
        return e.code if isinstance(e.code, int) else USAGE_ERROR
    try:
        return _COMMANDS[args.command](args)
    except ParseError as e:
        print(f"error: {e}", file=sys.stderr)
        return USAGE_ERROR
    except OrdinalSyntaxError as e:
        print(f"error: {e}", file=sys.stderr)
        return USAGE_ERROR
    except _CliError as e:
        print(f"error: {e}", file=sys.stderr)
        return e.code
    except (ValueError, IndexError) as e:
        print(f"error: {e}", file=sys.stderr)
        return USAGE_ERROR


def main() -> None:
    sys.exit(run(sys.argv[1:]))
