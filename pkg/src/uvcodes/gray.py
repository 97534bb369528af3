"""Gray map R -> F_p^(2k), Lee weight and Gray images of codes."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .code import CyclicCode
from .errors import BudgetError
from .linalg import RowSpace, matrix_rank
from .poly import RingPoly
from .rank import DEFAULT_BUDGET, _digits, min_weight, min_weight_support
from .ring import RingElement, RingParams


def phi_windows(k: int) -> list[tuple[int, int]]:
    """Index windows [lo, hi] (1-based) of the k sums making up phi.

    The first window is [1, k]; afterwards the lower end and the upper end
    move inwards alternately: [2, k], [2, k-1], [3, k-1], ...
    """
    lo, hi = 1, k
    out = [(lo, hi)]
    for step in range(1, k):
        if step % 2:
            lo += 1
        else:
            hi -= 1
        out.append((lo, hi))
    return out


def phi(a: Sequence[int], p: int) -> tuple:
    """phi(a_1 + u a_2 + ... + u^(k-1) a_k) as k window sums mod p."""
    return tuple(sum(a[lo - 1:hi]) % p for lo, hi in phi_windows(len(a)))


def phi_L(r: RingElement) -> tuple:
    """phi_L(a + v b) = (phi(a + b), phi(b))."""
    p = r.params.p
    a, b = r.a_part, r.b_part
    return phi([(x + y) % p for x, y in zip(a, b)], p) + phi(b, p)


def lee_weight(r: RingElement) -> int:
    return sum(1 for c in phi_L(r) if c)


def lee_weight_poly(f: RingPoly, n: int) -> int:
    f = f.reduce_cyclic(n)
    return sum(lee_weight(f.coeff(e)) for e in range(n))


def phi_L_matrix(params: RingParams) -> list[list[int]]:
    """M with phi_L(r) = M r, r read as its 2k slot coefficients."""
    cols = []
    for s in range(params.nslots):
        coeffs = [0] * params.nslots
        coeffs[s] = 1
        cols.append(phi_L(RingElement(params, tuple(coeffs))))
    return [[cols[s][i] for s in range(params.nslots)] for i in range(params.nslots)]


def phi_L_invertible(params: RingParams) -> bool:
    return matrix_rank(phi_L_matrix(params), params.p) == params.nslots


def gray_vector(f: RingPoly, n: int) -> list[int]:
    """Coordinate-major image: phi_L of coordinate 0, then coordinate 1, ..."""
    f = f.reduce_cyclic(n)
    out = []
    for e in range(n):
        out.extend(phi_L(f.coeff(e)))
    return out


def _row_image(row: Sequence[int], params: RingParams, n: int) -> list[int]:
    M = phi_L_matrix(params)
    m = params.nslots
    out = []
    for e in range(n):
        coeffs = [row[s * n + e] for s in range(m)]
        out.extend(sum(M[i][s] * coeffs[s] for s in range(m)) % params.p for i in range(m))
    return out


@dataclass
class GrayImage:
    """The p-ary linear code phi_L(C) with parameters [length, dimension, d].

    ``d`` is None when both codeword enumeration and the support search
    were over budget.
    """

    p: int
    length: int
    dimension: int
    basis: list
    d: int | None

    @property
    def parameters(self) -> tuple:
        return (self.length, self.dimension, self.d)

    def to_dict(self) -> dict:
        return {"length": self.length, "dimension": self.dimension, "d": self.d,
                "basis": [list(r) for r in self.basis]}


def gray_image(code: CyclicCode, budget: int = DEFAULT_BUDGET) -> GrayImage:
    params, n = code.params, code.n
    length = params.nslots * n
    space = RowSpace(params.p, length, (_row_image(r, params, n) for r in code.rows))
    if space.dimension != code.dimension:
        raise AssertionError("Gray map lost dimension")
    basis = space.rows()
    d = None
    if basis:
        try:
            d, _ = min_weight(basis, params.p, budget=budget)
        except BudgetError:
            # too many codewords: search supports instead
            try:
                d, _ = min_weight_support(basis, params.p, budget=budget)
            except BudgetError:
                d = None
    return GrayImage(params.p, length, space.dimension, basis, d)


def min_lee_weight(code: CyclicCode, budget: int = DEFAULT_BUDGET):
    """Minimum Lee weight of C, enumerated directly on codewords over R."""
    if code.is_zero():
        return None
    total = code.size
    if total > budget:
        raise BudgetError(f"enumeration needs {total} codewords, budget is {budget}", required=total)
    params, n, p = code.params, code.n, code.p
    # Lee weight of every ring element, indexed by its slot digits
    lee = np.zeros(params.size, dtype=np.int64)
    for idx, r in enumerate(params.elements()):
        lee[idx] = lee_weight(r)
    G = np.array(code.rows, dtype=np.int64)
    m = params.nslots
    powers = p ** np.arange(m, dtype=np.int64)
    best = None
    for start in range(1, total, 1 << 14):
        stop = min(total, start + (1 << 14))
        words = (_digits(start, stop, p, code.dimension) @ G) % p
        idx = np.tensordot(words.reshape(len(words), m, n), powers, axes=([1], [0]))
        w = lee[idx].sum(axis=1).min()
        best = int(w) if best is None else min(best, int(w))
    return best
