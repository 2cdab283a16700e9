"""
Command-line front end.

    yhlinks homfly   --braid "n=2; 1 1 1"
    yhlinks td       --braid "n=2; 1 1" --d 2 --method both
    yhlinks sublinks --braid "n=3; 1 1 2 2"
    yhlinks td       --file braids.txt --d 2 --d 3 --json
    yhlinks selfcheck --trials 100 --seed 42

Exit status: 0 ok, 1 selfcheck failure, 2 input error, 3 route mismatch.
Gamma prints as ``g``.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Sequence, TextIO

from . import braid, checks, hecke
from .braid import BraidParseError, BraidWord
from .invariants import RouteMismatch, sublink_homfly, td

EXIT_OK, EXIT_SELFCHECK, EXIT_INPUT, EXIT_MISMATCH = 0, 1, 2, 3


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="yhlinks", description="HOMFLYPT and Yokonuma-Hecke invariants of braid closures")
    sub = parser.add_subparsers(dest="command", required=True)

    def add_input(p: argparse.ArgumentParser) -> None:
        src = p.add_mutually_exclusive_group(required=True)
        src.add_argument("--braid", help='braid word, e.g. "n=3; 1 -2 1"')
        src.add_argument("--file", help="batch file: one braid per line, # comments")
        p.add_argument("--json", action="store_true", help="emit JSON")

    add_input(sub.add_parser("homfly", help="HOMFLYPT polynomial of the closure"))
    p_td = sub.add_parser("td", help="invariants T_d")
    add_input(p_td)
    p_td.add_argument("--d", type=int, action="append", help="repeatable; default 1")
    p_td.add_argument("--method", choices=["matrix", "sublink", "both"], default="both")
    add_input(sub.add_parser("sublinks", help="components, linking matrix, component HOMFLYPTs"))

    p_check = sub.add_parser("selfcheck", help="run the randomized consistency suites")
    defaults = checks.Bounds()
    p_check.add_argument("--seed", type=int, default=defaults.seed)
    p_check.add_argument("--trials", type=int, default=defaults.trials)
    p_check.add_argument("--max-n", type=int, default=defaults.max_n)
    p_check.add_argument("--max-len", type=int, default=defaults.max_len)
    p_check.add_argument("--max-d", type=int, default=defaults.max_d)
    p_check.add_argument("--json", action="store_true")
    return parser


def _record(beta: BraidWord, text: str, command: str, ds: list[int], method: str) -> dict:
    rec: dict = {"input": text.strip(), "components": len(braid.components(beta))}
    if command == "homfly":
        rec["homfly"] = hecke.homfly(beta)
    elif command == "td":
        rec["invariants"] = [{"d": d, "poly": td(beta, d, method)} for d in ds]
    else:
        comps = braid.components(beta)
        rec["component_strands"] = [list(c) for c in comps]
        rec["linking_matrix"] = braid.linking_matrix(beta)
        rec["component_homfly"] = [sublink_homfly(beta, c) for c in comps]
    return rec


def _jsonable(rec: dict) -> dict:
    out = dict(rec)
    if "homfly" in out:
        out["homfly"] = out["homfly"].to_json()
    if "invariants" in out:
        out["invariants"] = [{"d": t["d"], "poly": t["poly"].to_json()} for t in out["invariants"]]
    if "component_homfly" in out:
        out["component_homfly"] = [p.to_json() for p in out["component_homfly"]]
    return out


def _text(rec: dict, command: str) -> str:
    if command == "homfly":
        return str(rec["homfly"])
    if command == "td":
        invs = rec["invariants"]
        if len(invs) == 1:
            return str(invs[0]["poly"])
        return "\n".join(f"T_{t['d']}: {t['poly']}" for t in invs)
    lines = [f"components: {len(rec['component_strands'])}"]
    for k, (strands, p) in enumerate(zip(rec["component_strands"], rec["component_homfly"]), start=1):
        lines.append(f"K{k} strands {strands}: P = {p}")
    lines.append("linking matrix:")
    lines.extend("  " + " ".join(f"{x:3d}" for x in row) for row in rec["linking_matrix"])
    return "\n".join(lines)


def _batch_row(rec: dict, command: str) -> str:
    cells = [rec["input"], str(rec["components"])]
    if command == "homfly":
        cells.append(str(rec["homfly"]))
    elif command == "td":
        cells.extend(f"T_{t['d']}={t['poly']}" for t in rec["invariants"])
    else:
        cells.append(" ".join(str(p) for p in rec["component_homfly"]))
        cells.append(json.dumps(rec["linking_matrix"]))
    return "\t".join(cells)


def read_batch(path: str) -> list[tuple[int, str]]:
    rows = []
    with open(path) as fh:
        for lineno, line in enumerate(fh, start=1):
            body = line.split("#", 1)[0].strip()
            if body:
                rows.append((lineno, body))
    return rows


def run_batch(args, out: TextIO) -> int:
    ds = args.d if getattr(args, "d", None) else [1]
    method = getattr(args, "method", "both")
    status = EXIT_OK
    records = []
    for lineno, text in read_batch(args.file):
        try:
            beta = braid.parse(text)
            rec = _record(beta, text, args.command, ds, method)
        except BraidParseError as exc:
            rec = {"line": lineno, "input": text, "error": str(exc)}
            status = max(status, EXIT_INPUT)
        except RouteMismatch as exc:
            rec = {"line": lineno, "input": text, "error": str(exc)}
            status = EXIT_MISMATCH
        records.append(rec)
    if args.json:
        json.dump([r if "error" in r else _jsonable(r) for r in records], out, indent=1)
        out.write("\n")
    else:
        for rec in records:
            if "error" in rec:
                out.write(f"line {rec['line']}: error: {rec['error']}\n")
            else:
                out.write(_batch_row(rec, args.command) + "\n")
    return status


def run_selfcheck(args, out: TextIO) -> int:
    bounds = checks.Bounds(max_n=args.max_n, max_d=args.max_d, max_len=args.max_len, trials=args.trials, seed=args.seed)
    results = checks.run_all(bounds)
    if args.json:
        json.dump([{"suite": r.name, "passed": r.passed, "failed": r.failed, "first_failure": r.first_failure}
                   for r in results], out, indent=1)
        out.write("\n")
    else:
        for r in results:
            mark = "PASS" if r.ok else "FAIL"
            line = f"{mark} {r.name}: {r.passed} passed, {r.failed} failed"
            if r.first_failure:
                line += f" (first: {r.first_failure})"
            out.write(line + "\n")
    return EXIT_OK if all(r.ok for r in results) else EXIT_SELFCHECK


def run(argv: Sequence[str] | None = None, out: TextIO | None = None, err: TextIO | None = None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    args = build_parser().parse_args(argv)
    if args.command == "selfcheck":
        return run_selfcheck(args, out)
    if args.command == "td" and args.d and any(d < 1 for d in args.d):
        err.write("error: --d must be positive\n")
        return EXIT_INPUT
    if args.file:
        try:
            return run_batch(args, out)
        except OSError as exc:
            err.write(f"error: {exc}\n")
            return EXIT_INPUT
    try:
        beta = braid.parse(args.braid)
        rec = _record(beta, args.braid, args.command, getattr(args, "d", None) or [1], getattr(args, "method", "both"))
    except BraidParseError as exc:
        err.write(f"error: {exc}\n")
        return EXIT_INPUT
    except RouteMismatch as exc:
        err.write(f"error: {exc}\n")
        return EXIT_MISMATCH
    if args.json:
        json.dump(_jsonable(rec), out)
        out.write("\n")
    else:
        out.write(_text(rec, args.command) + "\n")
    return EXIT_OK


def main(argv: Sequence[str] | None = None) -> None:
    sys.exit(run(argv))


if __name__ == "__main__":
    main()
