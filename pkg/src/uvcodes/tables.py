"""Reference codes of length 4 with their published rank and minimum distance.

Rows with free constants c_0, c_1, ... are families; every assignment of
the constants over F_p is expected to give the same rank and distance.
"""

from __future__ import annotations

import itertools
import re
from dataclasses import dataclass, field

from .code import coprime_form, is_free, span_closure
from .errors import UVCodesError
from .parser import parse_poly_expr
from .rank import distance_torsion, rank
from .ring import RingParams

_POLYS = {
    2: {"g": "(x+1)"},
    3: {"g1": "(x+1)", "g2": "(x+2)", "g3": "(x^2+1)"},
}


@dataclass(frozen=True)
class TableRow:
    table: int
    row: int
    p: int
    k: int
    n: int
    generators: tuple
    rank: int
    d: int | None = None
    free: bool | None = None
    coprime: bool = False

    @property
    def constants(self) -> int:
        found = set()
        for g in self.generators:
            found.update(int(m) for m in re.findall(r"c(\d+)", g))
        return max(found) + 1 if found else 0

    @property
    def label(self) -> str:
        return f"T{self.table}.{self.row}"

    def instantiate(self, consts=()) -> list[str]:
        consts = tuple(consts) + (0,) * (self.constants - len(consts))
        names = _POLYS[self.p]
        out = []
        for g in self.generators:
            g = re.sub(r"c(\d+)", lambda m: str(consts[int(m.group(1))]), g)
            g = re.sub(r"g\d*", lambda m: names[m.group(0)], g)
            out.append(g)
        return out

    def assignments(self, cap=None):
        it = itertools.product(range(self.p), repeat=self.constants)
        return itertools.islice(it, cap) if cap is not None else it


def _t1(row, rank_, d, gens):
    return TableRow(1, row, 2, 3, 4, tuple(gens), rank_, d)


TABLE1 = [
    _t1(1, 1, 4, ["v*u^2*g^3"]),
    _t1(2, 2, 2, ["v*(u*g^3+u^2*c0*g)", "v*u^2*g^2"]),
    _t1(3, 3, 2, ["v*(g^3+u*c0*g+u^2*c1)", "v*(u*g^2+u^2*c2)", "v*u^2*g"]),
    _t1(4, 4, 2, ["u^2*g^3+v*(c0*g^2+u*c1*g+u^2*c2)", "v*(g^3+u*c3*g+u^2*c4)",
                  "v*(u*g^2+u^2*c5)", "v*u^2*g"]),
    _t1(5, 5, 2, ["u*g^3+u^2*c0*g+v*(c1*g^2+u*c2*g+u^2*c3)",
                  "u^2*g^2+v*(c4*g^2+u*c5*g+u^2*c6)", "v*(g^3+u*c7*g+u^2*c8)",
                  "v*(u*g^2+u^2*c9)", "v*u^2*g"]),
    _t1(6, 3, 2, ["g^3+u*c0*g+u^2*c1+v*(c2*g^2+u*c3*g+u^2*c4)",
                  "u*g^2+u^2*c5+v*(c6*g^2+u*c7*g+u^2*c8)",
                  "u^2*g+v*(c9*g^2+u*c10*g+u^2*c11)"]),
]

TABLE2 = [
    TableRow(2, 1, 2, 3, 4, ("g^3+u*c0*g^2+u^2*c1*g^2+v*(c2*g^2+u*c3*g^2+u^2*c4*g^2)",), 1, 4, True),
    TableRow(2, 2, 2, 3, 4, ("g^2+u*(c0+c1*x)+u^2*(c2+c3*x)*g^2"
                             "+v*((c4+c5*x)*g^2+u*(c6+c7*x)*g^2+u^2*(c8+c9*x)*g^2)",), 2, 2, True),
    TableRow(2, 3, 2, 3, 4, ("g+u*c0+u^2*c1+v*(c2+u*c3+u^2*c4)",), 3, 2, True),
    TableRow(2, 4, 2, 3, 4, ("1",), 4, 1, True),
]


def _t3(row, rank_, gens):
    return TableRow(3, row, 3, 3, 4, tuple(gens), rank_, coprime=True)


TABLE3 = [
    _t3(1, 2, ["g1*g2+u*g1*g2+u^2*g1", "v*(g1*g2+u*g2+u^2)"]),
    _t3(2, 3, ["g1*g2+u*g1+u^2", "v*(g2+u+u^2)"]),
    _t3(3, 3, ["g1*g3+u*g3+u^2", "v*(g1+u+u^2)"]),
    _t3(4, 1, ["u*g2*g3+u^2*g3", "v*(g2*g3+u*g3+u^2*g3)"]),
    _t3(5, 1, ["v*(g1*g3+u*g3+u^2)"]),
    _t3(6, 1, ["g2*g3+u*g2+u^2"]),
]

TABLES = {1: TABLE1, 2: TABLE2, 3: TABLE3}


def all_rows():
    return [r for t in sorted(TABLES) for r in TABLES[t]]


def build_code(row: TableRow, consts=()):
    params = RingParams(row.p, row.k)
    gens = [parse_poly_expr(e, params, row.n) for e in row.instantiate(consts)]
    return span_closure(params, row.n, gens)


@dataclass
class RowResult:
    row: TableRow
    instances: int = 0
    mismatches: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.mismatches

    def to_dict(self) -> dict:
        return {
            "row": self.row.label,
            "instances": self.instances,
            "expected": {"rank": self.row.rank, "d": self.row.d},
            "ok": self.ok,
            "mismatches": [{"constants": list(c), "field": f, "expected": e, "got": g}
                           for c, f, e, g in self.mismatches],
        }


def check_instance(row: TableRow, consts=()) -> list:
    """Mismatches (field, expected, got) for one instantiation of a row."""
    out = []
    try:
        code = build_code(row, consts)
        rep = rank(code)
        if rep.rank != row.rank:
            out.append(("rank", row.rank, rep.rank))
        if row.d is not None:
            d = distance_torsion(code).d
            if d != row.d:
                out.append(("d", row.d, d))
        if row.free is not None:
            flag, _ = is_free(code)
            if flag != row.free:
                out.append(("free", row.free, flag))
        if row.coprime and not coprime_form(code).spans_code:
            out.append(("coprime_span", True, False))
    except (UVCodesError, AssertionError) as e:
        out.append(("error", None, str(e)))
    return out


def run_row(row: TableRow, cap=None, expected: TableRow | None = None) -> RowResult:
    """Check every assignment of the row's constants (at most ``cap``).

    ``expected`` overrides the reference values, e.g. for negative controls.
    """
    ref = expected or row
    res = RowResult(ref)
    for consts in row.assignments(cap):
        res.instances += 1
        for f, e, g in check_instance(ref if expected else row, consts):
            res.mismatches.append((consts, f, e, g))
    return res


def run_tables(tables=(1, 2, 3), cap=None) -> list[RowResult]:
    return [run_row(r, cap) for t in tables for r in TABLES[t]]
