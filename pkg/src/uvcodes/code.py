"""Cyclic codes over R as exact F_p subspaces, their towers and canonical generators.

A codeword c in R[x]/<x^n - 1> is flattened slot-major: entry ``s*n + e`` is
the F_p coefficient of m_s * x^e, where m_s is the monomial of slot s (see
``ring``).  With that ordering the layers of the code are contiguous column
blocks, and the RREF of the code directly exposes every C_i: the rows whose
pivot lies in block i-1 project onto a basis of C_i.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from math import gcd
from typing import Iterable, Sequence

from .errors import DomainError
from .linalg import RowSpace
from .poly import FpPoly, RingPoly, fp_gcd_many, poly_divmod
from .ring import RingParams


# -- flattening -------------------------------------------------------------

def to_vector(f: RingPoly, n: int) -> list[int]:
    f = f.reduce_cyclic(n)
    out = []
    for s in f.slots:
        out.extend(s.padded(n))
    return out


def from_vector(params: RingParams, n: int, vec: Sequence[int]) -> RingPoly:
    return RingPoly(params, [FpPoly(params.p, vec[s * n:(s + 1) * n]) for s in range(params.nslots)])


def block(vec: Sequence[int], s: int, n: int) -> list[int]:
    return list(vec[s * n:(s + 1) * n])


def shift_x(vec: Sequence[int], n: int) -> list[int]:
    """Multiply by x: rotate every slot block one step."""
    out = []
    for s in range(len(vec) // n):
        b = vec[s * n:(s + 1) * n]
        out.extend([b[-1]] + list(b[:-1]))
    return out


def mul_u(vec: Sequence[int], params: RingParams, n: int) -> list[int]:
    out = [0] * len(vec)
    k = params.k
    for s in range(params.nslots):
        i, j = s % k, s // k
        if i + 1 < k:
            t = j * k + i + 1
            out[t * n:(t + 1) * n] = vec[s * n:(s + 1) * n]
    return out


def mul_v(vec: Sequence[int], params: RingParams, n: int) -> list[int]:
    k = params.k
    return [0] * (k * n) + list(vec[: k * n])


def mul_fp(vec: Sequence[int], q: FpPoly, n: int) -> list[int]:
    """Multiply every slot block by q(x) modulo x^n - 1."""
    p = q.p
    out = [0] * len(vec)
    nz = [(e, c) for e, c in enumerate(q.coeffs) if c]
    for s in range(len(vec) // n):
        base = s * n
        for i in range(n):
            a = vec[base + i]
            if a:
                for e, c in nz:
                    j = base + (i + e) % n
                    out[j] = (out[j] + a * c) % p
    return out


def sub(a: Sequence[int], b: Sequence[int], p: int) -> list[int]:
    return [(x - y) % p for x, y in zip(a, b)]


# -- the code ---------------------------------------------------------------

class CyclicCode:
    """Ideal of R[x]/<x^n - 1>, held as the RREF of its F_p span.

    Build instances with :func:`span_closure`; the constructor trusts that the
    given space is already closed under x, u and v.
    """

    def __init__(self, params: RingParams, n: int, space: RowSpace):
        self.params = params
        self.n = n
        self.space = space

    @property
    def p(self) -> int:
        return self.params.p

    @property
    def k(self) -> int:
        return self.params.k

    @property
    def width(self) -> int:
        return self.params.nslots * self.n

    @property
    def dimension(self) -> int:
        return self.space.dimension

    @property
    def size(self) -> int:
        return self.p ** self.dimension

    @property
    def rows(self) -> list[tuple]:
        return self.space.rows()

    @property
    def pivots(self) -> list[int]:
        return self.space.pivots

    def is_zero(self) -> bool:
        return self.dimension == 0

    def contains(self, f) -> bool:
        vec = to_vector(f, self.n) if isinstance(f, RingPoly) else f
        return vec in self.space

    def __contains__(self, f) -> bool:
        return self.contains(f)

    def __eq__(self, other):
        if not isinstance(other, CyclicCode):
            return NotImplemented
        return self.params == other.params and self.n == other.n and self.space == other.space

    def __hash__(self):
        return hash((self.params, self.n, self.space.key()))

    def is_closed(self) -> bool:
        """Re-check closure of the row space under x, u and v."""
        for row in self.rows:
            for img in (shift_x(row, self.n), mul_u(row, self.params, self.n),
                        mul_v(row, self.params, self.n)):
                if img not in self.space:
                    return False
        return True

    def codeword_polys(self) -> list[RingPoly]:
        return [from_vector(self.params, self.n, r) for r in self.rows]

    @cached_property
    def tower(self) -> "TowerProfile":
        return tower(self)

    @cached_property
    def generators(self) -> "GeneratorSet":
        return canonical_generators(self)

    def __repr__(self):
        return (f"CyclicCode(p={self.p}, k={self.k}, n={self.n}, "
                f"dim_Fp={self.dimension})")


def _closure_space(params: RingParams, n: int, seeds: Iterable[Sequence[int]]) -> RowSpace:
    space = RowSpace(params.p, params.nslots * n)
    queue = [list(v) for v in seeds]
    while queue:
        v = queue.pop()
        if space.add(v):
            queue.append(shift_x(v, n))
            queue.append(mul_u(v, params, n))
            queue.append(mul_v(v, params, n))
    return space


def span_closure(params: RingParams, n: int, gens: Iterable[RingPoly]) -> CyclicCode:
    """Smallest ideal of R[x]/<x^n - 1> containing ``gens``."""
    if n < 1:
        raise DomainError("code length must be positive")
    seeds = []
    for g in gens:
        if g.params != params:
            raise DomainError("generator over a different ring")
        seeds.append(to_vector(g, n))
    return CyclicCode(params, n, _closure_space(params, n, seeds))


def code_from_vectors(params: RingParams, n: int, vectors: Iterable[Sequence[int]]) -> CyclicCode:
    return CyclicCode(params, n, _closure_space(params, n, vectors))


def module_span(params: RingParams, n: int, elements: Iterable[RingPoly]) -> RowSpace:
    """R-linear span (constants only, no x action) of the given polynomials."""
    space = RowSpace(params.p, params.nslots * n)
    for f in elements:
        vec = to_vector(f, n)
        frontier = [vec]
        while frontier:
            w = frontier.pop()
            if space.add(w):
                frontier.append(mul_u(w, params, n))
                frontier.append(mul_v(w, params, n))
    return space


# -- tower ------------------------------------------------------------------

@dataclass(frozen=True)
class TowerProfile:
    """Monic generators g_1..g_2k of the layer ideals C_1..C_2k.

    An empty layer is recorded as g_i = x^n - 1 (t_i = n), a full one as 1.
    Index 0 of every tuple is layer 1.
    """

    p: int
    k: int
    n: int
    g: tuple

    @property
    def t(self) -> tuple:
        return tuple(f.degree for f in self.g)

    @property
    def tprime(self) -> tuple:
        t, k = self.t, self.k
        return tuple(min(t[i], t[k + i - 1]) for i in range(1, k))

    def gi(self, i: int) -> FpPoly:
        """g_i with 1-based i."""
        return self.g[i - 1]

    def ti(self, i: int) -> int:
        return self.g[i - 1].degree

    def layer_dimension(self, i: int) -> int:
        return self.n - self.ti(i)

    @property
    def total_dimension(self) -> int:
        return sum(self.n - d for d in self.t)

    def is_empty_layer(self, i: int) -> bool:
        return self.ti(i) == self.n

    def to_dict(self) -> dict:
        return {"g": [list(f.coeffs) for f in self.g], "t": list(self.t)}


def _layer_rows(code: CyclicCode, layer: int) -> list[tuple]:
    """RREF rows whose pivot lies in the block of ``layer`` (1-based)."""
    n = code.n
    lo, hi = (layer - 1) * n, layer * n
    return [tuple(code.space.row(c)) for c in code.pivots if lo <= c < hi]


def tower(code: CyclicCode) -> TowerProfile:
    """Layer ideals C_i = slot-(i-1) parts of codewords vanishing on earlier slots."""
    p, n = code.p, code.n
    xn1 = FpPoly.xn_minus_1(n, p)
    gs = []
    for layer in range(1, code.params.nslots + 1):
        rows = _layer_rows(code, layer)
        polys = [FpPoly(p, block(r, layer - 1, n)) for r in rows]
        g = fp_gcd_many(polys, xn1)
        if len(rows) != n - g.degree:
            raise AssertionError(
                f"layer {layer} is not an ideal: {len(rows)} rows vs n - deg g = {n - g.degree}")
        gs.append(g)
    return TowerProfile(p, code.k, n, tuple(gs))


# -- canonical generators ---------------------------------------------------

@dataclass(frozen=True)
class GeneratorSet:
    """The unique generators A_1..A_2k with reduced tails.

    ``A[i-1]`` is A_i.  ``tails[(i, j)]`` is g_{ij}: the coefficient polynomial
    of A_i at slot j (j >= i), which must be zero or of degree < t_{j+1}.
    """

    params: RingParams
    n: int
    tower: TowerProfile
    A: tuple
    tails: dict = field(compare=False)

    @property
    def leads(self) -> tuple:
        return self.tower.g

    def gen(self, i: int) -> RingPoly:
        return self.A[i - 1]

    def tail(self, i: int, j: int) -> FpPoly:
        return self.tails.get((i, j), FpPoly.zero(self.params.p))

    def degree_violations(self) -> list[tuple[int, int]]:
        bad = []
        for (i, j), f in sorted(self.tails.items()):
            if not f.is_zero() and f.degree >= self.tower.ti(j + 1):
                bad.append((i, j))
        return bad

    def nonzero(self) -> list[RingPoly]:
        return [a for a in self.A if not a.is_zero()]

    def to_dict(self) -> dict:
        return {
            "A": [[list(s.coeffs) for s in a.slots] for a in self.A],
            "expressions": [a.to_str() for a in self.A],
        }


def _split_generator(params: RingParams, n: int, i: int, vec: Sequence[int]) -> dict:
    tails = {}
    for j in range(i, params.nslots):
        f = FpPoly(params.p, block(vec, j, n))
        if not f.is_zero():
            tails[i, j] = f
    return tails


def canonical_generators(code: CyclicCode) -> GeneratorSet:
    """Compute the unique A_1..A_2k of the code.

    For each nonempty layer L a codeword whose slot L-1 equals g_L (and whose
    earlier slots vanish) is read off the RREF; its tail at each later slot s
    is then divided by g_{s+1} and the quotient times A_{s+1} subtracted.
    Layers are processed from the last one down so A_{s+1} is already final.
    """
    params, n, p = code.params, code.n, code.p
    tw = code.tower
    m = params.nslots
    vecs: list = [None] * (m + 1)
    for layer in range(m, 0, -1):
        g = tw.gi(layer)
        if g.degree == n:
            vecs[layer] = [0] * code.width
            continue
        rows = _layer_rows(code, layer)
        target = g.padded(n)
        base = (layer - 1) * n
        vec = [0] * code.width
        for r in rows:
            piv = next(i for i, c in enumerate(r) if c)
            a = target[piv - base]
            if a:
                vec = [(x + a * y) % p for x, y in zip(vec, r)]
        if block(vec, layer - 1, n) != target:
            raise AssertionError(f"layer {layer}: leading part g_{layer} is not realised in C")
        for s in range(layer, m):
            g_next = tw.gi(s + 1)
            if g_next.degree == n:
                continue
            tail = FpPoly(p, block(vec, s, n))
            if tail.degree >= g_next.degree:
                q = tail // g_next
                vec = sub(vec, mul_fp(vecs[s + 1], q, n), p)
        vecs[layer] = vec
    A = []
    tails = {}
    for layer in range(1, m + 1):
        A.append(from_vector(params, n, vecs[layer]))
        if tw.gi(layer).degree < n:
            tails.update(_split_generator(params, n, layer, vecs[layer]))
    return GeneratorSet(params, n, tw, tuple(A), tails)


def generator_span(G: GeneratorSet) -> CyclicCode:
    return span_closure(G.params, G.n, G.A)


# -- structural relations ---------------------------------------------------

@dataclass(frozen=True)
class Check:
    condition: str
    indices: tuple
    passed: bool
    detail: str = ""


@dataclass
class StructureReport:
    checks: list

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def failures(self) -> list:
        return [c for c in self.checks if not c.passed]

    def by_condition(self) -> dict:
        out: dict = {}
        for c in self.checks:
            out[c.condition] = out.get(c.condition, True) and c.passed
        return out

    def to_dict(self) -> dict:
        return {
            "passed": self.passed,
            "conditions": self.by_condition(),
            "failures": [{"condition": c.condition, "indices": list(c.indices), "detail": c.detail}
                         for c in self.failures()],
        }


def _exact_div(a: FpPoly, b: FpPoly):
    """a / b in F_p[x] when b divides a, else None."""
    q, r = divmod(a, b)
    return q if r.is_zero() else None


def verify_structure(G: GeneratorSet) -> StructureReport:
    """Check the divisibility relations every generator set must satisfy.

    Conditions carry the numbering used in the classical proof ("2" .. "9");
    the statement lists the same relations as (1) .. (8).  "degree" is the
    tail-degree constraint that makes the generators unique.
    """
    n, p, k = G.n, G.params.p, G.params.k
    m = 2 * k
    xn1 = FpPoly.xn_minus_1(n, p)

    def g(i):
        return G.tower.gi(i)

    def tl(i, j):
        return G.tail(i, j)

    def red(f):
        return f.reduce_cyclic(n)

    def T(i):
        return xn1 // g(i)

    checks = []

    def check(cond, idx, ok, detail=""):
        checks.append(Check(cond, tuple(idx), bool(ok), detail))

    for (i, j) in G.degree_violations():
        check("degree", (i, j), False, f"deg g_{i}{j} >= t_{j + 1}")
    if not G.degree_violations():
        check("degree", (), True)

    # 2: the two divisibility chains and g_1 | x^n - 1
    check("2", (1, 0), g(1).divides(xn1), "g_1 | x^n - 1")
    for i in range(1, k):
        check("2", (i + 1, i), g(i + 1).divides(g(i)), f"g_{i + 1} | g_{i}")
        check("2", (k + i + 1, k + i), g(k + i + 1).divides(g(k + i)),
              f"g_{k + i + 1} | g_{k + i}")
    # 3
    for i in range(1, k + 1):
        check("3", (k + i, i), g(k + i).divides(g(i)), f"g_{k + i} | g_{i}")
    # 4
    for i in range(1, m):
        check("4", (i,), g(i + 1).divides(red(T(i) * tl(i, i))),
              f"g_{i + 1} | (x^n-1)/g_{i} * g_{i}{i}")
    # 5
    for j in range(1, m):
        for i in range(1, m - j + 1):
            prod = FpPoly.one(p)
            for t in range(j):
                prod = red(prod * T(i + t))
            ok = g(i + j).divides(red(prod * tl(i, i + j - 1)))
            check("5", (i, j), ok)
    # 6
    for i in range(2, k + 1):
        a = k - (i - 2)
        check("6", (i,), g(k + i).divides(tl(a, k)), f"g_{k + i} | g_{a}{k}")
    # 7 and 8
    for i in range(1, k):
        ratio = _exact_div(g(i), g(k + i))
        if ratio is None:
            check("7", (i,), False, f"g_{k + i} does not divide g_{i}")
            continue
        r = {}
        r_ii = red(tl(i, i) - ratio * tl(k + i, k + i))
        r[0] = r_ii
        check("7", (i,), g(k + i + 1).divides(r_ii))
        for j in range(1, k - i):
            acc = tl(i, i + j) - ratio * tl(k + i, k + i + j)
            ok = True
            for l in range(1, j + 1):
                qt = _exact_div(r[l - 1], g(k + i + l))
                if qt is None:
                    ok = False
                    break
                acc = acc - qt * tl(k + i + l, k + i + j)
            if not ok:
                check("8", (i, j), False, "intermediate r not divisible")
                break
            r[j] = red(acc)
            check("8", (i, j), g(k + i + j + 1).divides(r[j]))
    # 9, tracking (x^n-1)/g_i * s_{i(i+j)} so every division is exact
    for i in range(1, m - 1):
        Ti = T(i)
        scaled = {0: red(Ti * tl(i, i))}
        for j in range(1, m - i):
            acc = Ti * tl(i, i + j)
            ok = True
            for l in range(1, j + 1):
                qt = _exact_div(scaled[l - 1], g(i + l))
                if qt is None:
                    ok = False
                    break
                acc = acc - qt * tl(i + l, i + j)
            if not ok:
                check("9", (i, j), False, "intermediate s not divisible")
                break
            scaled[j] = red(acc)
            check("9", (i, j), g(i + j + 1).divides(scaled[j]))
    return StructureReport(checks)


# -- free codes and the coprime form ----------------------------------------

def is_free(code: CyclicCode):
    """(flag, witness): the code is free iff g_1 = g_2k; the witness is A_1.

    For a free code the checks C = <A_1> and A_1 | x^n - 1 in R[x] are
    asserted.  The zero code is free of rank 0 and has no witness.
    """
    tw = code.tower
    flag = tw.g[0] == tw.g[-1]
    if not flag:
        return False, None
    if code.is_zero():
        return True, None
    A1 = code.generators.gen(1)
    if span_closure(code.params, code.n, [A1]) != code:
        raise AssertionError("free code is not generated by A_1")
    xn1 = RingPoly.from_fp(code.params, FpPoly.xn_minus_1(code.n, code.p))
    _, rem = poly_divmod(xn1, A1)
    if not rem.is_zero():
        raise AssertionError("A_1 does not divide x^n - 1 in R[x]")
    return True, A1


@dataclass(frozen=True)
class CoprimeForm:
    F: RingPoly
    G: RingPoly
    spans_code: bool


def coprime_form(code: CyclicCode) -> CoprimeForm:
    """Two-generator form F = sum u^(i-1) g_i, G = v sum u^(i-1) g_(k+i) for gcd(n, p) = 1.

    ``spans_code`` reports whether <F, G> reproduces the code; it can fail for
    codes whose generators carry a v-tail in A_2..A_k (for instance <u + v>).
    """
    p, n, k = code.p, code.n, code.k
    if gcd(n, p) != 1:
        raise DomainError(f"coprime form needs gcd(n, p) = 1, got n={n}, p={p}")
    tw = code.tower
    params = code.params
    zero = FpPoly.zero(p)
    F_slots = [tw.gi(i).reduce_cyclic(n) for i in range(1, k + 1)] + [zero] * k
    G_slots = [zero] * k + [tw.gi(k + i).reduce_cyclic(n) for i in range(1, k + 1)]
    F = RingPoly(params, F_slots)
    G = RingPoly(params, G_slots)
    spans = span_closure(params, n, [F, G]) == code
    return CoprimeForm(F, G, spans)


# -- expressing codewords ---------------------------------------------------

def express_in_generators(c: RingPoly, G: GeneratorSet) -> dict:
    """Write c as sum q_j(x) A_j by successive leading-slot elimination.

    Returns {j: q_j} for every generator index from the first nonzero slot of
    c onwards.  Raises DomainError when c is not a codeword.
    """
    params, n, p = G.params, G.n, G.params.p
    vec = to_vector(c, n)
    m = params.nslots
    first = next((s for s in range(m) if any(block(vec, s, n))), None)
    if first is None:
        return {}
    out = {}
    for s in range(first, m):
        content = FpPoly(p, block(vec, s, n))
        g = G.tower.gi(s + 1)
        if g.degree == n:
            if not content.is_zero():
                raise DomainError("polynomial is not in the code")
            out[s + 1] = FpPoly.zero(p)
            continue
        q, r = divmod(content, g)
        if not r.is_zero():
            raise DomainError("polynomial is not in the code")
        out[s + 1] = q
        vec = sub(vec, mul_fp(to_vector(G.gen(s + 1), n), q, n), p)
    if any(vec):
        raise DomainError("polynomial is not in the code")
    return out
