"""Rank, spanning sets and minimum Hamming distance of cyclic codes over R."""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from math import gcd
from typing import Sequence

import numpy as np

from .code import CyclicCode, coprime_form, from_vector, module_span, mul_u, mul_v, to_vector
from .errors import BudgetError, DomainError
from .linalg import RowSpace
from .poly import ExpansionKind, FpPoly, RingPoly, padic_classify
from .ring import RingParams

DEFAULT_BUDGET = 1 << 24
_CHUNK = 1 << 16


# -- rank -------------------------------------------------------------------

@dataclass
class RankReport:
    """Rank data of a code.

    ``spanning_set`` lists (generator, shift) pairs: generator is the index i
    of A_i on the general path and "F" / "G" on the coprime path.
    ``minimal_generators`` is the true minimum number of R-module generators,
    dim C - dim(uC + vC), computed independently of the formulas.
    """

    method: str
    rank: int
    free_rank: int
    spanning_set: list
    elements: list = field(repr=False)
    t: tuple = ()
    tprime: tuple = ()
    minimal_generators: int = 0

    @property
    def formula_inputs(self) -> dict:
        return {"t": list(self.t), "tprime": list(self.tprime)}

    def to_dict(self) -> dict:
        return {
            "method": self.method,
            "rank": self.rank,
            "free_rank": self.free_rank,
            "minimal_generators": self.minimal_generators,
            "spanning_set": [[g, s] for g, s in self.spanning_set],
            "formula_inputs": self.formula_inputs,
        }


def minimal_generator_count(code: CyclicCode) -> int:
    """dim_Fp C/(uC + vC): the least size of an R-generating set of C."""
    params, n = code.params, code.n
    mC = RowSpace(code.p, code.width)
    for r in code.rows:
        mC.add(mul_u(r, params, n))
        mC.add(mul_v(r, params, n))
    return code.dimension - mC.dimension


def _shift(f: RingPoly, s: int, n: int) -> RingPoly:
    return (f * RingPoly.x_power(f.params, s)).reduce_cyclic(n)


def general_spanning_set(code: CyclicCode) -> list[tuple[int, int]]:
    """The shifts x^s A_i listed as the minimal spanning set for gcd(n, p) != 1."""
    tw = code.tower
    t, tp, k, n = tw.t, tw.tprime, code.k, code.n
    counts = [n - t[0]]
    counts += [t[i - 2] - t[i - 1] for i in range(2, k + 1)]
    counts.append(t[0] - t[k])
    counts += [tp[i - 2] - t[k + i - 1] for i in range(2, k + 1)]
    out = []
    for idx, c in enumerate(counts, start=1):
        out.extend((idx, s) for s in range(max(c, 0)))
    return out


def general_rank_formula(t: Sequence[int], tprime: Sequence[int], n: int, k: int) -> int:
    return n + t[0] + sum(tprime) - sum(t[k - 1:])


def rank(code: CyclicCode, method: str = "auto") -> RankReport:
    """Rank of the code from its tower.

    ``method`` is "general" (gcd(n, p) != 1 formula), "coprime"
    (rank n - t_{k+1} with the two-generator form) or "auto", which picks by
    gcd(n, p).  Absent layers enter the formulas as t_i = n.
    """
    if code.is_zero():
        raise DomainError("the zero code has no rank report")
    if method == "auto":
        method = "coprime" if gcd(code.n, code.p) == 1 else "general"
    tw = code.tower
    n, k = code.n, code.k
    if method == "general":
        B = general_spanning_set(code)
        A = code.generators.A
        elements = [_shift(A[i - 1], s, n) for i, s in B]
        r = general_rank_formula(tw.t, tw.tprime, n, k)
    elif method == "coprime":
        form = coprime_form(code)
        B = [("F", s) for s in range(n - tw.t[0])] + [("G", s) for s in range(tw.t[0] - tw.t[k])]
        elements = [_shift(form.F if g == "F" else form.G, s, n) for g, s in B]
        r = n - tw.t[k]
    else:
        raise DomainError(f"unknown rank method {method!r}")
    return RankReport(method, r, n - tw.t[0], B, elements, tw.t, tw.tprime,
                      minimal_generator_count(code))


@dataclass(frozen=True)
class SpanningCheck:
    spans: bool
    minimal: bool
    redundant: tuple

    def __bool__(self):
        return self.spans and self.minimal


def spanning_set_check(code: CyclicCode, elements: Sequence[RingPoly]) -> SpanningCheck:
    """Does the R-span of ``elements`` equal C, and is no element redundant?"""
    params, n = code.params, code.n
    elements = list(elements)
    spans = module_span(params, n, elements) == code.space
    redundant = []
    for i, f in enumerate(elements):
        rest = module_span(params, n, elements[:i] + elements[i + 1:])
        if to_vector(f, n) in rest:
            redundant.append(i)
    return SpanningCheck(spans, not redundant, tuple(redundant))


def spanning_set_verify(code: CyclicCode, report: RankReport) -> bool:
    return bool(spanning_set_check(code, list(report.elements)))


# -- minimum weight engine ---------------------------------------------------

def _digits(start: int, stop: int, p: int, dim: int) -> np.ndarray:
    idx = np.arange(start, stop, dtype=np.int64)
    out = np.empty((stop - start, dim), dtype=np.int64)
    for j in range(dim):
        idx, out[:, j] = np.divmod(idx, p)
    return out


def min_weight(rows: Sequence[Sequence[int]], p: int, group: int = 1,
               budget: int = DEFAULT_BUDGET):
    """(weight, codeword) of least nonzero weight in the F_p span of ``rows``.

    The rows must be linearly independent.  Entry ``m * group + c`` belongs
    to coordinate c; the weight counts coordinates with any nonzero entry.
    For slot-major codewords over R, group = n gathers the 2k slots of each
    coordinate.  Returns (None, None) for an empty basis.
    """
    dim = len(rows)
    if dim == 0:
        return None, None
    total = p ** dim
    if total > budget:
        raise BudgetError(f"enumeration needs {total} codewords, budget is {budget}", required=total)
    G = np.array(rows, dtype=np.int64) % p
    width = G.shape[1]
    members = width // group
    # low digits: one precomputed table; high digits: one offset per block
    low = 1
    while low < dim and p ** (low + 1) <= _CHUNK:
        low += 1
    table = ((_digits(0, p ** low, p, low) @ G[:low]) % p).astype(np.uint8)
    high = G[low:]
    best_w, best_vec = None, None
    for h in range(p ** (dim - low)):
        offset = (_digits(h, h + 1, p, dim - low) @ high) % p if len(high) else 0
        words = table + np.asarray(offset, dtype=np.uint8)
        if p != 2:
            words %= p
        else:
            words &= 1
        nz = words != 0
        if group != 1 and members != 1:
            nz = nz.reshape(len(words), members, group).any(axis=1)
        w = nz.sum(axis=1)
        if h == 0:
            w[0] = width + 1  # the zero word
        j = int(np.argmin(w))
        if best_w is None or w[j] < best_w:
            best_w, best_vec = int(w[j]), [int(c) for c in words[j]]
            if best_w == 1:
                break
    return best_w, best_vec


def min_weight_support(rows: Sequence[Sequence[int]], p: int, group: int = 1,
                       budget: int = DEFAULT_BUDGET):
    """(weight, codeword) of least nonzero weight by searching supports.

    A codeword vanishing off a coordinate set S exists iff the columns
    outside S have rank below the dimension.  Supports are tried in order of
    size, so the first hit is a minimum.  ``budget`` caps the number of
    supports examined.  Same coordinate convention as :func:`min_weight`.
    """
    dim = len(rows)
    if dim == 0:
        return None, None
    width = len(rows[0])
    if group == 1:
        coords, cols_of = range(width), [[c] for c in range(width)]
    else:
        coords = range(group)
        cols_of = [[m * group + c for m in range(width // group)] for c in coords]
    tried = 0
    for w in range(1, len(coords) + 1):
        for S in combinations(coords, w):
            tried += 1
            if tried > budget:
                raise BudgetError(f"support search exceeded {budget} supports", required=tried)
            inside = set(S)
            outside = [j for c in coords if c not in inside for j in cols_of[c]]
            # solve m * G[:, outside] = 0 for a nonzero message m
            sub = [[rows[i][j] for i in range(dim)] for j in outside]
            kernel = _left_kernel_vector(sub, dim, p)
            if kernel is not None:
                vec = [sum(kernel[i] * rows[i][j] for i in range(dim)) % p for j in range(width)]
                return w, vec
    return None, None


def _left_kernel_vector(columns, dim: int, p: int):
    """Nonzero m in F_p^dim with m . col = 0 for every column, or None."""
    space = RowSpace(p, dim, columns)
    if space.dimension == dim:
        return None
    free = next(c for c in range(dim) if c not in set(space.pivots))
    m = [0] * dim
    m[free] = 1
    for piv in space.pivots:
        m[piv] = (-space.row(piv)[free]) % p
    return m


def hamming_weight(f: RingPoly, n: int) -> int:
    return sum(1 for e in range(n) if not f.coeff(e).is_zero())


# -- distances --------------------------------------------------------------

@dataclass
class DistanceReport:
    d: int
    method: str
    certificate: RingPoly

    def to_dict(self) -> dict:
        return {"d": self.d, "method": self.method, "certificate": self.certificate.to_str()}


def distance_bruteforce(code: CyclicCode, budget: int = DEFAULT_BUDGET) -> DistanceReport:
    """Minimum Hamming weight by enumerating every codeword."""
    if code.is_zero():
        raise DomainError("the zero code has no minimum distance")
    try:
        w, vec = min_weight(code.rows, code.p, group=code.n, budget=budget)
    except BudgetError as e:
        raise BudgetError(f"{e}; use the torsion method", required=e.required) from None
    return DistanceReport(w, "full_bruteforce", from_vector(code.params, code.n, vec))


def fp_cyclic_basis(g: FpPoly, n: int) -> list[list[int]]:
    """Basis x^s g, s < n - deg g, of the F_p cyclic code <g>, g | x^n - 1."""
    return [(g * FpPoly.monomial(s, g.p)).reduce_cyclic(n).padded(n) for s in range(n - g.degree)]


def distance_torsion(code: CyclicCode, budget: int = DEFAULT_BUDGET) -> DistanceReport:
    """d(C) as the minimum weight of the F_p code <g_2k>.

    Multiplying any codeword by a suitable monomial u^a v^b moves its lowest
    nonzero slot to u^(k-1) v without creating new nonzero coordinates, so
    the minimum is attained inside u^(k-1) v C_2k.
    """
    if code.is_zero():
        raise DomainError("the zero code has no minimum distance")
    g = code.tower.g[-1]
    w, vec = min_weight(fp_cyclic_basis(g, code.n), code.p, budget=budget)
    params = code.params
    witness = RingPoly.from_fp(params, FpPoly(code.p, vec), params.nslots - 1)
    if witness not in code:
        raise AssertionError("torsion witness is not a codeword")
    return DistanceReport(w, "torsion_bruteforce", witness)


def closed_form_hypothesis(tower, p: int, l: int) -> str | None:
    """None when the closed-form distance applies, else the reason it does not."""
    n, k = tower.n, tower.k
    if n != p ** l:
        return f"length {n} is not p^l = {p ** l}"
    t = tower.t
    one = FpPoly.x(p) - FpPoly.one(p)
    for i, g in enumerate(tower.g):
        if g != one ** t[i]:
            return f"g_{i + 1} is not a power of x - 1"
    if any(t[i] <= t[i + 1] for i in range(k - 1)) or any(t[k + i] <= t[k + i + 1] for i in range(k - 1)):
        return "tower degrees are not strictly decreasing"
    if t[k - 1] <= 0 or t[-1] <= 0:
        return "tower degrees must be positive"
    if any(t[i] <= t[k + i] for i in range(k)):
        return "need t_i > t_(k+i)"
    return None


def closed_form_value(t2k: int, p: int, l: int) -> int:
    if t2k <= p ** (l - 1):
        return 2
    prof = padic_classify(t2k, p, l)
    d = prof.leading_product()
    if prof.kind is ExpansionKind.NONZERO:
        d *= 2
    return d


def distance_closed_form(tower, p: int, l: int) -> DistanceReport:
    """Closed-form d(C) for length p^l and a strict tower of powers of x - 1.

    The certificate is u^(k-1) v (x - 1)^(t_2k), a codeword whose weight is
    only an upper bound for d; compare against :func:`distance_torsion`.
    """
    why = closed_form_hypothesis(tower, p, l)
    if why is not None:
        raise DomainError(f"closed form does not apply ({why}); use distance_torsion")
    params = RingParams(p, tower.k)
    cert = RingPoly.from_fp(params, tower.g[-1], params.nslots - 1)
    return DistanceReport(closed_form_value(tower.t[-1], p, l), "closed_form", cert)


def padic_length(n: int, p: int):
    """l with n = p^l, or None."""
    l = 0
    while n % p == 0:
        n //= p
        l += 1
    return l if n == 1 and l > 0 else None


def distance(code: CyclicCode, budget: int = DEFAULT_BUDGET, method: str = "auto") -> DistanceReport:
    """d(C) by the requested method; "auto" uses the torsion shortcut."""
    if method in ("auto", "torsion"):
        return distance_torsion(code, budget)
    if method in ("full", "bruteforce"):
        return distance_bruteforce(code, budget)
    if method == "closed":
        l = padic_length(code.n, code.p)
        if l is None:
            raise DomainError(f"closed form needs n = p^l, got n={code.n}")
        return distance_closed_form(code.tower, code.p, l)
    raise DomainError(f"unknown distance method {method!r}")
