"""Command-line front end.

Exit codes: 0 success, 1 malformed input or unknown suite, 2 input outside
the hypotheses of the requested formula, 3 a verification case failed.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from dataclasses import dataclass
from typing import Sequence

from .errors import HypothesisError
from .pfaffian import pfaffian_hypothesis_violation, q_flagged_pfaffian
from .polyring import Polynomial
from .suites import ALIASES, SUITES, GridConfig, format_report, resolve, run_suite
from .shapes_tableaux import (
    Entry,
    FlaggedStrictPartition,
    decompose_q_factored,
    enumerate_mst,
    q_flagged_tableau,
    validate_mst,
)
from .vexillary import (
    Triple,
    invert_triple,
    reduce_to_essential,
    schubert_vexillary,
    shape_from_triple,
    triple_hypothesis_report,
    triples_equivalent,
)

EXIT_OK, EXIT_INPUT, EXIT_HYPOTHESIS, EXIT_FAIL = 0, 1, 2, 3
OUTSIDE = "outside theorem hypotheses"


class InputError(ValueError):
    pass


@dataclass
class RunConfig:
    command: str
    fmt: str = "text"
    n_x: int = 2
    method: str = "tableau"
    unchecked: bool = False
    threads: int = 1


# -- parsing helpers ------------------------------------------------------------

def int_list(text: str) -> tuple[int, ...]:
    text = text.strip()
    if not text:
        return ()
    try:
        return tuple(int(t) for t in text.split(","))
    except ValueError:
        raise InputError(f"expected comma-separated integers, got {text!r}") from None


def shape_from_args(lam: str, flag: str | None) -> FlaggedStrictPartition:
    parts = int_list(lam)
    f = int_list(flag) if flag is not None else (0,) * len(parts)
    try:
        return FlaggedStrictPartition(parts, f)
    except ValueError as e:
        raise InputError(str(e)) from None


def triple_from_args(k: str, p: str, q: str) -> Triple:
    try:
        return Triple(int_list(k), int_list(p), int_list(q))
    except ValueError as e:
        raise InputError(str(e)) from None


def fmt_tuple(t: Sequence[int]) -> str:
    return "(" + ",".join(map(str, t)) + ")"


def emit_poly(p: Polynomial, cfg: RunConfig, note: str | None = None) -> None:
    if cfg.fmt == "json":
        obj = p.to_json_obj()
        if note:
            obj["note"] = note
        print(json.dumps(obj, separators=(",", ":")))
    else:
        if note:
            print(f"# {note}")
        print(p.to_text())


# -- commands -----------------------------------------------------------------

def cmd_poly(args, cfg: RunConfig) -> int:
    shape = shape_from_args(args.lam, args.flag)
    if args.decompose:
        terms = decompose_q_factored(shape)
        if cfg.fmt == "json":
            print(json.dumps(
                {"terms": [{"mu": list(mu), "coeff": c.to_json_obj(), "factored": t} for mu, c, t in terms]},
                separators=(",", ":"),
            ))
        else:
            for mu, _, t in terms:
                print(f"{fmt_tuple(mu)}: {t}")
        return EXIT_OK
    if cfg.n_x < 1:
        raise InputError("--nx must be at least 1")
    if cfg.method == "tableau":
        emit_poly(q_flagged_tableau(shape, cfg.n_x), cfg)
        return EXIT_OK
    why = pfaffian_hypothesis_violation(shape)
    if why and not cfg.unchecked:
        raise HypothesisError(why)
    p = q_flagged_pfaffian(shape, cfg.n_x, checked=False)
    emit_poly(p, cfg, f"{OUTSIDE}: {why}" if why else None)
    return EXIT_OK


def parse_tableau_file(text: str) -> list[list[list[str]]]:
    """Tableaux as blocks of whitespace-separated rows; blank lines separate blocks, '#' starts a comment."""
    blocks, cur = [], []
    for line in text.splitlines():
        line = line.split("#", 1)[0].strip()
        if not line:
            if cur:
                blocks.append(cur)
                cur = []
            continue
        cur.append(line.split())
    if cur:
        blocks.append(cur)
    return blocks


def cmd_tableaux(args, cfg: RunConfig) -> int:
    shape = shape_from_args(args.lam, args.flag)
    if args.check:
        try:
            with open(args.check, encoding="utf-8") as fh:
                blocks = parse_tableau_file(fh.read())
        except OSError as e:
            raise InputError(str(e)) from None
        results = []
        for rows in blocks:
            try:
                entries = [[Entry.parse(s) for s in row] for row in rows]
                ok, rule = validate_mst(shape, entries)
            except ValueError as e:
                raise InputError(f"bad tableau {rows}: {e}") from None
            results.append((rows, ok, rule))
        for rows, ok, rule in results:
            if cfg.fmt == "json":
                print(json.dumps({"rows": rows, "valid": ok, "rule": rule}, separators=(",", ":")))
            else:
                body = " / ".join(" ".join(r) for r in rows)
                print(f"{'valid' if ok else f'invalid (rule {rule})'}: {body}")
        n_ok = sum(ok for _, ok, _ in results)
        print(json.dumps({"valid": n_ok, "total": len(results)}) if cfg.fmt == "json"
              else f"valid: {n_ok} of {len(results)}")
        return EXIT_OK
    if cfg.n_x < 1:
        raise InputError("--nx must be at least 1")
    n = 0
    for T in enumerate_mst(shape, cfg.n_x):
        n += 1
        if cfg.fmt == "json":
            print(json.dumps({"rows": [[str(e) for e in r] for r in T.rows]}, separators=(",", ":")))
        else:
            print(" / ".join(" ".join(str(e) for e in r) for r in T.rows))
    print(json.dumps({"count": n}) if cfg.fmt == "json" else f"count: {n}")
    return EXIT_OK


def cmd_triple(args, cfg: RunConfig) -> int:
    t = triple_from_args(args.k, args.p, args.q)
    action = args.action
    if action == "reduce":
        out = reduce_to_essential(t)
        print(out.to_json() if cfg.fmt == "json"
              else f"k={fmt_tuple(out.k)} p={fmt_tuple(out.p)} q={fmt_tuple(out.q)}")
    elif action == "invert":
        out = invert_triple(t)
        print(out.to_json() if cfg.fmt == "json"
              else f"k={fmt_tuple(out.k)} p={fmt_tuple(out.p)} q={fmt_tuple(out.q)}")
    elif action == "shape":
        shape = shape_from_triple(reduce_to_essential(t))
        why = triple_hypothesis_report(t)
        if cfg.fmt == "json":
            obj = shape.to_json_obj()
            obj["pfaffian_hypotheses"] = why or "ok"
            print(json.dumps(obj, separators=(",", ":")))
        else:
            print(f"lambda={fmt_tuple(shape.lam)} flag={fmt_tuple(shape.flag)}")
            if why:
                print(f"# {OUTSIDE}: {why}")
    elif action == "equiv":
        if not (args.k2 and args.p2 and args.q2):
            raise InputError("equiv needs --k2, --p2 and --q2")
        same = triples_equivalent(t, triple_from_args(args.k2, args.p2, args.q2))
        print(json.dumps({"equivalent": same}) if cfg.fmt == "json" else str(same).lower())
    elif action == "poly":
        if cfg.n_x < 1:
            raise InputError("--nx must be at least 1")
        note = None
        if cfg.method == "pfaffian":
            why = triple_hypothesis_report(t)
            if why and not cfg.unchecked:
                raise HypothesisError(why)
            note = f"{OUTSIDE}: {why}" if why else None
        emit_poly(schubert_vexillary(t, cfg.n_x, cfg.method), cfg, note)
    return EXIT_OK


def cmd_verify(args, cfg: RunConfig) -> int:
    names = sorted(SUITES) if args.suite == "all" else [args.suite]
    try:
        names = [resolve(n) for n in names]
    except KeyError as e:
        known = ", ".join(sorted(SUITES) + sorted(ALIASES) + ["all"])
        raise InputError(f"unknown suite {e.args[0]!r}; known: {known}") from None
    grid = GridConfig(
        args.max_lambda, args.max_rows, args.max_flag,
        tuple(range(1, args.nx + 1)) if args.nx is not None else None,
    )
    for v in (args.max_lambda, args.max_rows, args.nx):
        if v is not None and v < 1:
            raise InputError("grid bounds must be positive")
    if args.max_flag is not None and args.max_flag < 0:
        raise InputError("--max-flag must be non-negative")
    failed = False
    for name in names:
        rep = run_suite(name, grid, cfg.threads)
        failed |= not rep.passed
        if cfg.fmt == "json":
            print(json.dumps({
                "suite": rep.suite.name,
                "locus": rep.suite.locus,
                "cases": [{"key": repr(k), "ok": ok, "detail": d} for k, ok, d in rep.results],
                "passed": len(rep.results) - len(rep.failures),
                "failed": len(rep.failures),
            }, separators=(",", ":")))
        else:
            print(format_report(rep))
    return EXIT_FAIL if failed else EXIT_OK


# -- argument parsing -----------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "json"), default="text")
    common.add_argument("--threads", type=int, default=None,
                        help="worker processes for verification grids (default: CPU count)")
    common.add_argument("--unchecked", action="store_true",
                        help="evaluate closed formulas even outside their hypotheses")

    ap = argparse.ArgumentParser(prog="flagq", description=__doc__.splitlines()[0])
    sub = ap.add_subparsers(dest="command", required=True)

    def shape_args(p):
        p.add_argument("--lambda", dest="lam", required=True, help="strict partition, e.g. 5,3,1")
        p.add_argument("--flag", help="flagging, e.g. 2,1,0 (default all zero)")
        p.add_argument("--nx", type=int, default=2, help="number of x variables (default 2)")

    p = sub.add_parser("poly", parents=[common], help="flagged factorial Q polynomial")
    shape_args(p)
    p.add_argument("--method", choices=("tableau", "pfaffian"), default="tableau")
    p.add_argument("--decompose", action="store_true", help="expand over factorial Q_mu(x|b)")

    p = sub.add_parser("tableaux", parents=[common], help="enumerate or check marked shifted tableaux")
    shape_args(p)
    p.add_argument("--check", metavar="FILE", help="validate the tableaux in FILE against the rules")

    p = sub.add_parser("triple", parents=[common], help="vexillary triples")
    p.add_argument("action", choices=("reduce", "shape", "invert", "equiv", "poly"))
    for name in ("k", "p", "q"):
        p.add_argument(f"--{name}", required=True)
        p.add_argument(f"--{name}2")
    p.add_argument("--nx", type=int, default=2)
    p.add_argument("--method", choices=("tableau", "pfaffian"), default="pfaffian")

    p = sub.add_parser("verify", parents=[common], help="run a verification suite")
    p.add_argument("--suite", required=True, help="suite name or 'all'")
    p.add_argument("--max-lambda", type=int)
    p.add_argument("--max-rows", type=int)
    p.add_argument("--max-flag", type=int)
    p.add_argument("--nx", type=int, help="use n_x = 1..NX")
    return ap


COMMANDS = {"poly": cmd_poly, "tableaux": cmd_tableaux, "triple": cmd_triple, "verify": cmd_verify}


def main(argv: Sequence[str] | None = None) -> int:
    ap = build_parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as e:
        # argparse uses 2 for usage errors; malformed input is 1 here
        return EXIT_OK if e.code == 0 else EXIT_INPUT
    cfg = RunConfig(
        command=args.command,
        fmt=args.format,
        n_x=getattr(args, "nx", None) or 0,
        method=getattr(args, "method", "tableau"),
        unchecked=args.unchecked,
        threads=args.threads if args.threads is not None else (os.cpu_count() or 1),
    )
    try:
        return COMMANDS[args.command](args, cfg)
    except HypothesisError as e:
        print(f"hypothesis violated: {e}", file=sys.stderr)
        return EXIT_HYPOTHESIS
    except InputError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_INPUT
    except ValueError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
