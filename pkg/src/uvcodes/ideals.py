"""Exhaustive enumeration of the cyclic codes of a given length at tiny sizes."""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass

from .code import CyclicCode, canonical_generators, code_from_vectors, span_closure, verify_structure
from .errors import BudgetError
from .linalg import RowSpace
from .rank import DEFAULT_BUDGET, distance_torsion, rank
from .ring import RingParams

DEFAULT_MAX_BITS = 12


def ambient_bits(params: RingParams, n: int) -> float:
    return params.nslots * n * math.log2(params.p)


def _quotient_reps(space: RowSpace, p: int):
    """Nonzero vectors on the non-pivot columns with leading entry 1.

    Every ideal strictly above ``space`` contains the closure of space plus
    one of these.
    """
    free = [c for c in range(space.width) if c not in set(space.pivots)]
    for lead_pos, lead in enumerate(free):
        rest = free[lead_pos + 1:]
        for vals in itertools.product(range(p), repeat=len(rest)):
            v = [0] * space.width
            v[lead] = 1
            for c, a in zip(rest, vals):
                v[c] = a
            yield v


def enumerate_ideals(params: RingParams, n: int, cap: int | None = None,
                     max_bits: float = DEFAULT_MAX_BITS) -> list[CyclicCode]:
    """Every ideal of R[x]/<x^n - 1>, smallest first, each exactly once.

    Starting from the zero code, each ideal is extended by the closure of
    one extra vector; all ideals are reached because any strictly larger
    ideal contains such a one-step extension.
    """
    bits = ambient_bits(params, n)
    if bits > max_bits:
        raise BudgetError(
            f"ambient space has 2kn*log2(p) = {bits:g} bits, limit is {max_bits:g}",
            required=bits)
    if cap is not None and cap <= 0:
        return []
    zero = CyclicCode(params, n, RowSpace(params.p, params.nslots * n))
    seen = {zero.space.key(): zero}
    frontier = [zero]
    while frontier:
        nxt = []
        for code in frontier:
            for w in _quotient_reps(code.space, params.p):
                if w in code.space:
                    continue
                bigger = code_from_vectors(params, n, list(code.rows) + [w])
                key = bigger.space.key()
                if key not in seen:
                    seen[key] = bigger
                    nxt.append(bigger)
        frontier = nxt
    codes = sorted(seen.values(), key=lambda c: (c.dimension, c.space.key()))
    return codes[:cap] if cap is not None else codes


@dataclass
class IdealSummary:
    dimension: int
    t: tuple
    generators: list
    rank: int | None
    minimal_generators: int | None
    d: int | None
    structure_ok: bool
    roundtrip_ok: bool

    def to_dict(self) -> dict:
        return {
            "dimension_fp": self.dimension,
            "t": list(self.t),
            "generators": self.generators,
            "rank": self.rank,
            "minimal_generators": self.minimal_generators,
            "d": self.d,
            "structure_ok": self.structure_ok,
            "roundtrip_ok": self.roundtrip_ok,
        }


def summarize(code: CyclicCode, budget: int = DEFAULT_BUDGET) -> IdealSummary:
    G = code.generators
    again = canonical_generators(span_closure(code.params, code.n, G.A))
    roundtrip = again.A == G.A and span_closure(code.params, code.n, G.A) == code
    r = m = d = None
    if not code.is_zero():
        rep = rank(code)
        r, m = rep.rank, rep.minimal_generators
        d = distance_torsion(code, budget).d
    return IdealSummary(code.dimension, code.tower.t, [a.to_str() for a in G.A],
                        r, m, d, verify_structure(G).passed, roundtrip)
