"""Command-line front end.

Exit status: 0 success, 1 mathematical rejection (not a retraction,
degenerate, failed cross-check), 2 input or usage error.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import report as rp
from .errors import InputError, RejectedError
from .oracle import enumerate_idempotent, render_census
from .same_retract import count_same_retract
from .textio import parse_input

COMMANDS = ("verify", "analyze", "standardize", "equivalents", "count", "witness", "catalog", "oracle-check")
FILE_COMMANDS = COMMANDS[:6]


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        raise InputError(message)


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="monoretract", description="Analyze monomial retractions of polynomial rings.")
    p.add_argument("command", choices=COMMANDS)
    p.add_argument("file", nargs="?", help="map or matrix file ('-' for stdin)")
    p.add_argument("--json", action="store_true", help="machine-readable output")
    p.add_argument("--n", type=int, help="matrix size for catalog / oracle-check")
    p.add_argument("--bound", type=int, help="maximum entry for catalog / oracle-check")
    p.add_argument("--cap", type=int, help="degree cap for the monoid oracle")
    p.add_argument("--workers", type=int, default=None, help="processes for the census scan")
    p.add_argument("--force", action="store_true", help="list equivalents even past 10^4")
    return p


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    try:
        with open(path, encoding="utf-8") as fh:
            return fh.read()
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc.strerror}") from None


MATRIX_KEYS = {"exponent_matrix", "matrix", "standard_matrix"}
MATRIX_LIST_KEYS = {"matrices", "equivalents"}


def _render_text(value: dict, indent: int = 0) -> list[str]:
    pad = "  " * indent
    out = []
    for key, v in value.items():
        if key in MATRIX_KEYS and v:
            out.append(f"{pad}{key}:")
            out += [f"{pad}  " + " ".join(map(str, r)) for r in v]
        elif key in MATRIX_LIST_KEYS and v:
            out.append(f"{pad}{key}:")
            for k, m in enumerate(v, start=1):
                out.append(f"{pad}  [{k}]")
                out += [f"{pad}    " + " ".join(map(str, r)) for r in m]
        elif isinstance(v, list) and v and all(isinstance(s, str) for s in v):
            out.append(f"{pad}{key}:")
            out += [f"{pad}  {s}" for s in v]
        elif isinstance(v, dict):
            out.append(f"{pad}{key}:")
            out += _render_text(v, indent + 1)
        elif isinstance(v, list):
            out.append(f"{pad}{key}: {json.dumps(v)}")
        elif v is None:
            out.append(f"{pad}{key}: -")
        elif isinstance(v, bool):
            out.append(f"{pad}{key}: {'yes' if v else 'no'}")
        else:
            out.append(f"{pad}{key}: {v}")
    return out


def run_command(command: str, args: argparse.Namespace) -> tuple[object, int]:
    """Execute one command; return ``(payload, status)``.

    The payload is a dict for structured results, or a string that is
    printed verbatim in text mode.
    """
    if command in FILE_COMMANDS:
        if not args.file:
            raise InputError(f"{command} needs an input file")
        parsed = parse_input(_read(args.file))
        if command == "verify":
            return rp.verify(parsed)
        if command == "analyze":
            return rp.analyze(parsed, force=args.force)
        M = rp.as_matrix(parsed)
        if command == "standardize":
            return rp.standardization(M), 0
        if command == "count":
            return {"count": count_same_retract(M)}, 0
        if command == "equivalents":
            return rp.equivalents(M, force=args.force), 0
        return rp.witness(M, parsed), 0
    if args.n is None or args.bound is None:
        raise InputError(f"{command} needs --n and --bound")
    if command == "catalog":
        census = enumerate_idempotent(args.n, args.bound, workers=args.workers)
        if args.json:
            return {
                "n": census.n,
                "bound": census.bound,
                "count": len(census),
                "matrices": [
                    {"rows": [list(r) for r in m.rows], "nondegenerate": nd, "standard": st}
                    for m, nd, st in zip(census.matrices, census.nondegenerate, census.standard)
                ],
            }, 0
        return render_census(census), 0
    return rp.oracle_check(args.n, args.bound, args.cap, workers=args.workers)


def main(argv=None) -> int:
    try:
        args = build_parser().parse_args(argv)
        payload, status = run_command(args.command, args)
    except RejectedError as exc:
        print(f"rejected: {exc}", file=sys.stderr)
        return 1
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    if args.json:
        print(json.dumps(payload, indent=2))
    elif isinstance(payload, str):
        sys.stdout.write(payload)
    elif set(payload) == {"count"}:
        print(payload["count"])
    else:
        print("\n".join(_render_text(payload)))
    return status


if __name__ == "__main__":
    sys.exit(main())
