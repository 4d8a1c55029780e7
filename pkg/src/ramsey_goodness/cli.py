"""Command-line entry point: ``ramsey-goodness <subcommand> ...``."""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys
from pathlib import Path
from typing import Any, Sequence

from . import families
from .goodness import chromatic_data, predict_cycle, predict_path
from .graph6 import Graph6Error, decode, encode
from .graphcore import Graph
from .oracle.enumeration import EnumerationRangeError
from .oracle.ramsey import RamseyBudgetExhausted, Target, ramsey_number
from .oracle.sweeps import SWEEPS
from .structure import alpha_prime, gamma, profile
from .witness import InfeasibleDecomposition, build_burr_cliques, build_gamma, validate_witness

SCHEMA = 1
THREADS_ENV = "RAMSEY_GOODNESS_THREADS"

EXIT_OK, EXIT_VIOLATION, EXIT_INPUT, EXIT_INFEASIBLE, EXIT_BUDGET = 0, 1, 2, 3, 4


class InputError(Exception):
    pass


# ---------------------------------------------------------------------------
# input parsing
# ---------------------------------------------------------------------------


def parse_graphs(token: str) -> list[tuple[str, Graph]]:
    """A family spec, ``file:PATH`` (one graph6 per line) or a graph6 string."""
    if token.startswith("file:"):
        path = Path(token[5:])
        try:
            lines = path.read_text().splitlines()
        except OSError as exc:
            raise InputError(f"cannot read {path}: {exc.strerror}") from None
        out = []
        for i, line in enumerate(lines, 1):
            if line.strip():
                try:
                    out.append((f"{path}:{i}", decode(line)))
                except Graph6Error as exc:
                    raise InputError(f"{path} line {i}: {exc}") from None
        return out
    name = token.partition(":")[0]
    if ":" in token or name in families.FAMILIES:
        try:
            return [(token, families.from_spec(token))]
        except ValueError as exc:
            raise InputError(str(exc)) from None
    try:
        return [(token, decode(token))]
    except Graph6Error as exc:
        raise InputError(f"malformed graph6 {token!r}: {exc}") from None


_KIND_LETTER = {"path": "P", "cycle": "C", "clique": "K"}


def parse_target(text: str, allowed: str = "PC") -> Target:
    try:
        target = Target.parse(text)
    except ValueError as exc:
        raise InputError(str(exc)) from None
    if _KIND_LETTER[target.kind] not in allowed:
        raise InputError(f"target {text!r} not supported here (use {' or '.join(c + ':k' for c in allowed)})")
    return target


def _collect(tokens: Sequence[str]) -> list[tuple[str, Graph]]:
    graphs = []
    for tok in tokens:
        graphs.extend(parse_graphs(tok))
    if not graphs:
        raise InputError("no input graphs")
    return graphs


# ---------------------------------------------------------------------------
# output
# ---------------------------------------------------------------------------


def _flatten(record: dict[str, Any], prefix: str = "") -> dict[str, Any]:
    flat: dict[str, Any] = {}
    for key, val in record.items():
        name = f"{prefix}{key}"
        if isinstance(val, dict):
            flat.update(_flatten(val, name + "."))
        elif isinstance(val, list):
            flat[name] = json.dumps(val, sort_keys=True)
        else:
            flat[name] = val
    return flat


def render(command: str, records: list[dict[str, Any]], fmt: str) -> str:
    if fmt == "json":
        return json.dumps({"schema": SCHEMA, "command": command, "results": records}, sort_keys=True, indent=2) + "\n"
    rows = [_flatten(r) for r in records]
    columns: list[str] = []
    for r in rows:
        columns.extend(c for c in r if c not in columns)
    if fmt == "csv":
        buf = io.StringIO()
        writer = csv.DictWriter(buf, fieldnames=columns, lineterminator="\n")
        writer.writeheader()
        writer.writerows(rows)
        return buf.getvalue()
    if not rows:
        return "(no results)\n"
    cells = [[str(r.get(c, "")) for c in columns] for r in rows]
    widths = [max(len(c), *(len(row[i]) for row in cells)) for i, c in enumerate(columns)]
    lines = ["  ".join(c.ljust(w) for c, w in zip(columns, widths))]
    lines.append("  ".join("-" * w for w in widths))
    lines.extend("  ".join(v.ljust(w) for v, w in zip(row, widths)) for row in cells)
    return "\n".join(lines) + "\n"


def emit(args: argparse.Namespace, command: str, records: list[dict[str, Any]]) -> None:
    text = render(command, records, args.format)
    if args.output:
        Path(args.output).write_text(text)
    else:
        sys.stdout.write(text)


# ---------------------------------------------------------------------------
# subcommands
# ---------------------------------------------------------------------------


def cmd_profile(args: argparse.Namespace) -> int:
    records = []
    for name, g in _collect(args.graphs):
        rec = {"input": name, "graph6": encode(g), **profile(g).to_dict()}
        if not rec["connected"]:
            rec["warning"] = "disconnected input"
        records.append(rec)
    emit(args, "profile", records)
    return EXIT_OK


def cmd_predict(args: argparse.Namespace) -> int:
    target = parse_target(args.target)
    records = []
    for name, g in _collect(args.graphs):
        try:
            pred = predict_path(g, target.k) if target.kind == "path" else predict_cycle(g, target.k)
        except ValueError as exc:
            raise InputError(f"{name}: {exc}") from None
        for w in pred.warnings:
            print(f"warning: {name}: {w}", file=sys.stderr)
        records.append({"input": name, **pred.to_dict()})
    emit(args, "predict", records)
    return EXIT_OK


def cmd_witness(args: argparse.Namespace) -> int:
    target = parse_target(args.target)
    records = []
    code = EXIT_OK
    for name, g in _collect(args.graphs):
        n = g.n
        if target.kind == "path":
            if not g.is_connected():
                raise InputError(f"{name}: witness construction needs a connected graph")
            ap = alpha_prime(g)
            try:
                w = build_gamma(n, target.k, ap, gamma(n, target.k, ap))
            except InfeasibleDecomposition as exc:
                print(f"infeasible: {name}: {exc}", file=sys.stderr)
                records.append({"input": name, "infeasible": str(exc)})
                code = max(code, EXIT_INFEASIBLE)
                continue
        else:
            chi, s_min = chromatic_data(target.graph())
            if n < 2:
                raise InputError(f"{name}: needs at least 2 vertices")
            w = build_burr_cliques(chi, s_min, n)
        report = validate_witness(w, g, target.kind, target.k)
        w = w.with_validation(report)
        rec = {"input": name, **w.to_dict(), "result": "PASS" if report.passed else "FAIL"}
        records.append(rec)
        if report.exhausted:
            code = max(code, EXIT_BUDGET)
        elif not report.passed:
            code = max(code, EXIT_VIOLATION)
    emit(args, "witness", records)
    return code


def cmd_oracle(args: argparse.Namespace) -> int:
    target = parse_target(args.target, "PCK")
    records = []
    code = EXIT_OK
    for name, g in _collect(args.graphs):
        try:
            cert = ramsey_number(
                g, target, args.nmax, threads=args.threads, prune=args.prune, allow_large=args.allow_n10
            )
        except EnumerationRangeError as exc:
            raise InputError(str(exc)) from None
        except RamseyBudgetExhausted as exc:
            print(f"{name}: {exc}", file=sys.stderr)
            records.append(
                {"input": name, "target": target.label, "status": "budget_exhausted",
                 "lower_bound": exc.lower_bound, "lower_witness": encode(exc.witness)}
            )
            code = max(code, EXIT_BUDGET)
            continue
        records.append({"input": name, "status": "exact", "witness_verified": cert.verify_witness(), **cert.to_dict()})
    emit(args, "oracle", records)
    return code


def cmd_sweep(args: argparse.Namespace) -> int:
    name = args.sweep
    fn = SWEEPS[name]
    kwargs: dict[str, Any] = {}
    if name in ("dichotomy", "strucf", "erdos_gallai", "addedge") and args.max_n is not None:
        kwargs["max_n"] = args.max_n
    if name == "dichotomy":
        if args.s:
            kwargs["s_values"] = args.s
        kwargs["workers"] = args.threads
        kwargs["per_instance"] = args.per_instance
    if name == "peel":
        kwargs["seed"] = args.seed
    try:
        rep = fn(**kwargs)
    except (EnumerationRangeError, ValueError) as exc:
        raise InputError(str(exc)) from None
    if args.per_instance:
        records = [{"sweep": name, **row} for row in rep.rows]
    else:
        records = [{**rep.to_dict(), "violation_count": len(rep.violations)}]
    emit(args, "sweep", records)
    if rep.violations:
        for v in rep.violations[:20]:
            print(f"violation: {v.graph6}: {v.detail}", file=sys.stderr)
        return EXIT_VIOLATION
    return EXIT_OK


# ---------------------------------------------------------------------------
# argument parsing
# ---------------------------------------------------------------------------


def _default_threads() -> int:
    try:
        return max(1, int(os.environ.get(THREADS_ENV, "1")))
    except ValueError:
        return 1


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("table", "json", "csv"), default="table")
    common.add_argument("--output", help="write the report here instead of stdout")
    common.add_argument("--threads", type=int, default=None, help=f"worker count (default ${THREADS_ENV} or 1)")
    common.add_argument("--seed", type=int, default=0)

    parser = argparse.ArgumentParser(prog="ramsey-goodness", description="Ramsey numbers of sparse graphs versus paths and cycles")
    sub = parser.add_subparsers(dest="command", required=True)

    graphs_help = "graph6 strings, file:PATH, or family specs like path:7, spider:3x2"
    p = sub.add_parser("profile", parents=[common], help="sparsity profile of each input")
    p.add_argument("graphs", nargs="+", help=graphs_help)
    p.set_defaults(func=cmd_profile)

    p = sub.add_parser("predict", parents=[common], help="closed-form Ramsey value")
    p.add_argument("--target", required=True, help="P:k or C:k")
    p.add_argument("graphs", nargs="+", help=graphs_help)
    p.set_defaults(func=cmd_predict)

    p = sub.add_parser("witness", parents=[common], help="build and validate a lower-bound colouring")
    p.add_argument("--target", required=True, help="P:k or C:k")
    p.add_argument("graphs", nargs="+", help=graphs_help)
    p.set_defaults(func=cmd_witness)

    p = sub.add_parser("oracle", parents=[common], help="exact small Ramsey number by enumeration")
    p.add_argument("--target", required=True, help="P:k, C:k or K:k")
    p.add_argument("--nmax", type=int, default=9)
    p.add_argument("--prune", action="store_true", help="only generate graphs whose complement avoids the target")
    p.add_argument("--allow-n10", action="store_true", help="permit 10-vertex enumeration")
    p.add_argument("graphs", nargs="+", help=graphs_help)
    p.set_defaults(func=cmd_oracle)

    p = sub.add_parser("sweep", parents=[common], help="exhaustive property sweep")
    p.add_argument("sweep", choices=sorted(SWEEPS))
    p.add_argument("--max-n", type=int, default=None)
    p.add_argument("--s", type=int, action="append", help="suspended-path parameter (repeatable)")
    p.add_argument("--per-instance", action="store_true", help="one CSV/JSON row per checked instance")
    p.set_defaults(func=cmd_sweep)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.threads is None:
        args.threads = _default_threads()
    try:
        return args.func(args)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
