"""
Command-line entry point

Usage:
    python gyro.py invariants --graph "lex(K2,circulant:5:1,4)"
    python gyro.py bounds --graph "union(K5,lex(K2,C5))" --nmax 8
    python gyro.py search --graph g5 --group 5x5 --out g5.json
    python gyro.py verify --graph g5 g5.json
    python gyro.py reproduce --skip-slow

Exit codes: 0 success / valid, 1 invalid certificate or failed criterion,
2 input error, 3 budget exceeded.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from pathlib import Path

from mylogger import Logger

from gyrochromatic.cli.commands import (
    EXIT_BUDGET,
    EXIT_INPUT,
    cmd_bounds,
    cmd_gen,
    cmd_invariants,
    cmd_search,
    cmd_verify,
)
from gyrochromatic.cli.models import COMMANDS, FORMATS, RunConfig
from gyrochromatic.cli.reproduce import cmd_reproduce
from gyrochromatic.exceptions import BudgetExceeded, ValidationError

logger = Logger()

HANDLERS = {
    "gen": cmd_gen,
    "invariants": cmd_invariants,
    "bounds": cmd_bounds,
    "search": cmd_search,
    "verify": cmd_verify,
    "reproduce": cmd_reproduce,
}


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--graph", help="DSL expression, edge-list file, or '-' for stdin")
    common.add_argument("--group", action="append", help="group spec 'N' or 'm1xm2x...' (repeatable for bounds)")
    common.add_argument("--nmax", type=int, help="largest cyclic group tried by bounds")
    common.add_argument("--budget", type=int, help="node budget for base searches")
    common.add_argument("--threads", type=int, help="workers for base searches")
    common.add_argument("--format", choices=FORMATS, help="output format (default table)")
    common.add_argument("--out", help="write the output (search: the certificate) to this file")
    common.add_argument("--seed", type=int, help="seed for random corpora")
    common.add_argument("--skip-slow", action="store_true", help="reproduce: skip slow criteria")

    parser = argparse.ArgumentParser(prog="gyro", description="Exact gyrochromatic bounds and certificates")
    sub = parser.add_subparsers(dest="command", required=True)
    for name in COMMANDS:
        command = sub.add_parser(name, parents=[common])
        if name == "verify":
            command.add_argument("certificate", help="BaseCertificate or gyrocoloring JSON file")
    return parser


# ----------------------- RENDERING -----------------------

def _approx(text: str) -> str:
    """ 'p/q' -> 'p/q (≈ decimal)' """
    if isinstance(text, str) and "/" in text:
        try:
            value = Fraction(text)
        except ValueError:
            return text
        return f"{text} (≈{float(value):.4f})"
    return text


def format_table(command: str, data: dict) -> str:
    if command == "gen" and "edge_list" in data:
        return data["edge_list"].rstrip("\n")
    if command == "reproduce":
        rows = [("criterion", "expected", "computed", "status")]
        rows += [(c["name"], c["expected"], c["computed"] or "-", c["status"]) for c in data["criteria"]]
        widths = [max(len(str(row[i])) for row in rows) for i in range(4)]
        lines = ["  ".join(str(cell).ljust(w) for cell, w in zip(row, widths)) for row in rows]
        lines.append(f"{data['passed']} passed, {data['failed']} failed, {data['skipped']} skipped")
        return "\n".join(lines)
    lines = []
    if command == "bounds":
        lines.append(f"{data['chi_f']} <= [{data['gyro_lower']}, {data['gyro_upper']}] <= {data['chi_c']}")
    for key, value in data.items():
        if key in ("witnesses", "certificate", "report", "plot"):
            continue
        if isinstance(value, dict):
            value = ", ".join(f"{k}={v}" for k, v in value.items())
        lines.append(f"{key:<18}{_approx(value)}")
    return "\n".join(lines)


def render(config: RunConfig, data: dict) -> str:
    if config.format == "json":
        return json.dumps(data, indent=2)
    return format_table(config.command, data)


# ----------------------- MAIN -----------------------

def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        config = RunConfig.from_args(args)
        code, data = HANDLERS[config.command](config)
    except ValidationError as exc:
        logger.error(f"input error: {exc}")
        return EXIT_INPUT
    except BudgetExceeded as exc:
        logger.error(f"budget exceeded: {exc}")
        return EXIT_BUDGET

    output = render(config, data)
    if config.out and config.command != "search":
        Path(config.out).write_text(output + "\n")
    else:
        print(output)
    return code


if __name__ == "__main__":
    sys.exit(main())
