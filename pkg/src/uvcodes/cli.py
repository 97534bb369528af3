"""Command-line front end.

Exit codes: 0 success, 2 parse error, 3 budget exceeded, 4 verification
mismatch, 1 any other error.
"""

from __future__ import annotations

import argparse
import json
import sys

from .code import coprime_form, is_free, span_closure, verify_structure
from .errors import BudgetError, DomainError, ParseError, UVCodesError
from .gray import gray_image
from .ideals import DEFAULT_MAX_BITS, enumerate_ideals, summarize
from .parser import parse_code_file, parse_poly_expr
from .rank import DEFAULT_BUDGET, distance, rank
from .ring import RingParams
from .tables import TABLES, run_tables

SCHEMA = 1
EXIT_OK, EXIT_ERROR, EXIT_PARSE, EXIT_BUDGET, EXIT_MISMATCH = 0, 1, 2, 3, 4


class _Fail(Exception):
    def __init__(self, code: int, doc: dict):
        super().__init__(doc.get("error", ""))
        self.code = code
        self.doc = doc


def _ring_arg(text: str) -> tuple[int, int]:
    try:
        p, k = (int(s) for s in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError("expected --ring p,k") from None
    return p, k


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="uvcodes", description="Cyclic codes over F_p[u,v]/<u^k,v^2,uv-vu>.")
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--ring", type=_ring_arg, help="ring parameters p,k")
    common.add_argument("--n", type=int, help="code length")
    common.add_argument("--gen", action="append", default=[], help="generator expression (repeatable)")
    common.add_argument("--file", help="code description file")
    common.add_argument("--budget", type=int, default=DEFAULT_BUDGET, help="codeword enumeration cap")
    common.add_argument("--format", choices=("json", "text"), default="text")
    sub = ap.add_subparsers(dest="command", required=True)
    sub.add_parser("analyze", parents=[common], help="full report for one code")
    d = sub.add_parser("distance", parents=[common], help="minimum Hamming distance")
    d.add_argument("--method", choices=("auto", "torsion", "full", "closed"), default="auto")
    sub.add_parser("gray", parents=[common], help="Gray image generator matrix and parameters")
    sub.add_parser("verify", parents=[common], help="structural relations of the canonical generators")
    e = sub.add_parser("enumerate", parents=[common], help="all cyclic codes of a small length")
    e.add_argument("--cap", type=int, default=None, help="maximum number of codes to report")
    e.add_argument("--max-bits", type=float, default=DEFAULT_MAX_BITS,
                   help="refuse when 2kn*log2(p) exceeds this")
    t = sub.add_parser("tables", parents=[common], help="check the reference tables")
    t.add_argument("--table", type=int, action="append", choices=sorted(TABLES))
    t.add_argument("--cap", type=int, default=None, help="assignments per row")
    return ap


def _load_code(args):
    if args.file:
        with open(args.file) as fh:
            params, n, exprs = parse_code_file(fh.read())
        exprs = exprs + list(args.gen)
    else:
        if args.ring is None or args.n is None:
            raise _Fail(EXIT_ERROR, {"error": "need --ring and --n, or --file"})
        params = RingParams(*args.ring)
        n, exprs = args.n, list(args.gen)
    gens = [parse_poly_expr(e, params, n) for e in exprs]
    return span_closure(params, n, gens)


def _head(code) -> dict:
    return {"p": code.p, "k": code.k, "n": code.n, "dimension_fp": code.dimension}


def cmd_analyze(args) -> dict:
    code = _load_code(args)
    G = code.generators
    doc = _head(code)
    doc["tower"] = code.tower.to_dict()
    doc["generators"] = [[list(s.coeffs) for s in a.slots] for a in G.A]
    doc["generator_expressions"] = [a.to_str() for a in G.A]
    doc["structure"] = verify_structure(G).to_dict()
    flag, witness = is_free(code)
    doc["free"] = flag
    doc["free_witness"] = witness.to_str() if witness is not None else None
    if code.is_zero():
        doc["rank"] = doc["distance"] = None
    else:
        doc["rank"] = rank(code).to_dict()
        doc["distance"] = distance(code, args.budget).to_dict()
        if code.n % code.p:
            doc["coprime_spans_code"] = coprime_form(code).spans_code
    gi = gray_image(code, args.budget)
    doc["gray"] = {"length": gi.length, "dimension": gi.dimension, "d": gi.d}
    if not doc["structure"]["passed"]:
        raise _Fail(EXIT_MISMATCH, doc)
    return doc


def cmd_distance(args) -> dict:
    code = _load_code(args)
    if code.is_zero():
        raise DomainError("the zero code has no minimum distance")
    return {**_head(code), "distance": distance(code, args.budget, args.method).to_dict()}


def cmd_gray(args) -> dict:
    code = _load_code(args)
    gi = gray_image(code, args.budget)
    return {**_head(code), "gray": gi.to_dict(), "parameters": list(gi.parameters)}


def cmd_verify(args) -> dict:
    code = _load_code(args)
    rep = verify_structure(code.generators)
    doc = {**_head(code), "closed": code.is_closed(), "structure": rep.to_dict()}
    if not (rep.passed and doc["closed"]):
        raise _Fail(EXIT_MISMATCH, doc)
    return doc


def cmd_enumerate(args) -> dict:
    if args.ring is None or args.n is None:
        raise _Fail(EXIT_ERROR, {"error": "enumerate needs --ring and --n"})
    params = RingParams(*args.ring)
    codes = enumerate_ideals(params, args.n, cap=args.cap, max_bits=args.max_bits)
    summaries = [summarize(c, args.budget).to_dict() for c in codes]
    doc = {"p": params.p, "k": params.k, "n": args.n, "count": len(summaries), "codes": summaries}
    if any(not (s["structure_ok"] and s["roundtrip_ok"]) for s in summaries):
        raise _Fail(EXIT_MISMATCH, doc)
    return doc


def cmd_tables(args) -> dict:
    results = run_tables(tuple(args.table or sorted(TABLES)), cap=args.cap)
    doc = {"rows": [r.to_dict() for r in results], "ok": all(r.ok for r in results)}
    if not doc["ok"]:
        raise _Fail(EXIT_MISMATCH, doc)
    return doc


COMMANDS = {
    "analyze": cmd_analyze,
    "distance": cmd_distance,
    "gray": cmd_gray,
    "verify": cmd_verify,
    "enumerate": cmd_enumerate,
    "tables": cmd_tables,
}


def _text(doc, indent=0) -> str:
    pad = "  " * indent
    lines = []
    for key, val in doc.items():
        if isinstance(val, dict):
            lines.append(f"{pad}{key}:")
            lines.append(_text(val, indent + 1))
        elif isinstance(val, list) and val and isinstance(val[0], dict):
            lines.append(f"{pad}{key}:")
            for item in val:
                lines.append(_text(item, indent + 1))
                lines.append("")
        else:
            lines.append(f"{pad}{key}: {json.dumps(val) if not isinstance(val, str) else val}")
    return "\n".join(ln for ln in lines if ln is not None)


def emit(doc: dict, fmt: str, stream=None):
    stream = stream or sys.stdout
    if fmt == "json":
        json.dump({"schema": SCHEMA, **doc}, stream, indent=2)
        stream.write("\n")
    else:
        stream.write(_text(doc) + "\n")


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        doc = COMMANDS[args.command](args)
    except _Fail as f:
        emit(f.doc, args.format)
        return f.code
    except ParseError as e:
        emit({"error": str(e), "kind": "parse"}, args.format, sys.stderr)
        return EXIT_PARSE
    except BudgetError as e:
        emit({"error": str(e), "kind": "budget", "required": e.required}, args.format, sys.stderr)
        return EXIT_BUDGET
    except (UVCodesError, OSError) as e:
        emit({"error": str(e), "kind": type(e).__name__}, args.format, sys.stderr)
        return EXIT_ERROR
    emit(doc, args.format)
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
