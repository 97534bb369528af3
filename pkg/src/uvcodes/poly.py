"""Dense polynomials over F_p and over R, division, gcd, factoring, p-adic digits.

Coefficient sequences are little-endian in x.  The zero polynomial has degree
``NEG_INF`` so that comparisons like ``deg(r) < deg(g)`` work unchanged.
"""

from __future__ import annotations

import enum
import random
from dataclasses import dataclass
from typing import Sequence

from .errors import DomainError, StructuralError
from .ring import RingElement, RingParams

NEG_INF = float("-inf")


def _trim(coeffs) -> tuple:
    coeffs = list(coeffs)
    while coeffs and not coeffs[-1]:
        coeffs.pop()
    return tuple(coeffs)


@dataclass(frozen=True)
class FpPoly:
    """Polynomial over the prime field F_p."""

    p: int
    coeffs: tuple = ()

    def __post_init__(self):
        p = self.p
        object.__setattr__(self, "coeffs", _trim(c % p for c in self.coeffs))

    @classmethod
    def zero(cls, p: int) -> "FpPoly":
        return cls(p, ())

    @classmethod
    def one(cls, p: int) -> "FpPoly":
        return cls(p, (1,))

    @classmethod
    def x(cls, p: int) -> "FpPoly":
        return cls(p, (0, 1))

    @classmethod
    def xn_minus_1(cls, n: int, p: int) -> "FpPoly":
        return cls(p, (-1,) + (0,) * (n - 1) + (1,))

    @classmethod
    def monomial(cls, e: int, p: int, c: int = 1) -> "FpPoly":
        return cls(p, (0,) * e + (c,))

    @property
    def degree(self):
        return len(self.coeffs) - 1 if self.coeffs else NEG_INF

    @property
    def lead(self) -> int:
        return self.coeffs[-1] if self.coeffs else 0

    def __bool__(self):
        return bool(self.coeffs)

    def is_zero(self) -> bool:
        return not self.coeffs

    def __getitem__(self, i: int) -> int:
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else 0

    def _same(self, other: "FpPoly"):
        if other.p != self.p:
            raise StructuralError(f"characteristic mismatch: {self.p} vs {other.p}")

    def __add__(self, other):
        if isinstance(other, int):
            other = FpPoly(self.p, (other,))
        self._same(other)
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return FpPoly(self.p, out)

    __radd__ = __add__

    def __neg__(self):
        return FpPoly(self.p, [-c for c in self.coeffs])

    def __sub__(self, other):
        if isinstance(other, int):
            other = FpPoly(self.p, (other,))
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, int):
            return FpPoly(self.p, [c * other for c in self.coeffs])
        self._same(other)
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return FpPoly(self.p, ())
        out = [0] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    out[i + j] += x * y
        return FpPoly(self.p, out)

    __rmul__ = __mul__

    def __pow__(self, e: int):
        result = FpPoly.one(self.p)
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def __divmod__(self, other: "FpPoly"):
        self._same(other)
        if other.is_zero():
            raise DomainError("division by the zero polynomial")
        p = self.p
        r = list(self.coeffs)
        db = len(other.coeffs) - 1
        inv = pow(other.lead, -1, p)
        q = [0] * max(len(r) - db, 0)
        for i in range(len(r) - 1, db - 1, -1):
            c = r[i] % p
            if not c:
                continue
            c = c * inv % p
            q[i - db] = c
            for j, b in enumerate(other.coeffs):
                r[i - db + j] -= c * b
        return FpPoly(p, q), FpPoly(p, r[:db] if db > 0 else [])

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def divides(self, other: "FpPoly") -> bool:
        """True when ``self`` divides ``other`` in F_p[x]."""
        if self.is_zero():
            return other.is_zero()
        return (other % self).is_zero()

    def monic(self) -> "FpPoly":
        if self.is_zero():
            return self
        return self * pow(self.lead, -1, self.p)

    def derivative(self) -> "FpPoly":
        return FpPoly(self.p, [i * c for i, c in enumerate(self.coeffs)][1:])

    def reduce_cyclic(self, n: int) -> "FpPoly":
        """Image in F_p[x]/<x^n - 1>: fold coefficients by wraparound."""
        if len(self.coeffs) <= n:
            return self
        out = [0] * n
        for i, c in enumerate(self.coeffs):
            out[i % n] += c
        return FpPoly(self.p, out)

    def padded(self, n: int) -> list:
        """Exactly n coefficients (the polynomial must have degree < n)."""
        if len(self.coeffs) > n:
            raise StructuralError(f"degree {self.degree} does not fit in {n} slots")
        return list(self.coeffs) + [0] * (n - len(self.coeffs))

    def weight(self) -> int:
        return sum(1 for c in self.coeffs if c)

    def to_str(self, var: str = "x") -> str:
        terms = []
        for e, c in enumerate(self.coeffs):
            if not c:
                continue
            if e == 0:
                terms.append(str(c))
                continue
            mono = var if e == 1 else f"{var}^{e}"
            terms.append(mono if c == 1 else f"{c}*{mono}")
        return "+".join(terms) if terms else "0"

    def __str__(self):
        return self.to_str()

    def __repr__(self):
        return f"FpPoly({self.to_str()!r}, p={self.p})"


def fp_xgcd(f: FpPoly, g: FpPoly):
    """Return (d, s, t) with d = s*f + t*g monic (or zero when f = g = 0)."""
    p = f.p
    r0, r1 = f, g
    s0, s1 = FpPoly.one(p), FpPoly.zero(p)
    t0, t1 = FpPoly.zero(p), FpPoly.one(p)
    while not r1.is_zero():
        q, r = divmod(r0, r1)
        r0, r1 = r1, r
        s0, s1 = s1, s0 - q * s1
        t0, t1 = t1, t0 - q * t1
    if r0.is_zero():
        return r0, s0, t0
    inv = pow(r0.lead, -1, p)
    return r0 * inv, s0 * inv, t0 * inv


def fp_gcd(f: FpPoly, g: FpPoly) -> FpPoly:
    """Monic greatest common divisor by the Euclidean algorithm."""
    if f.is_zero() and g.is_zero():
        raise DomainError("gcd(0, 0) is undefined")
    a, b = f, g
    while not b.is_zero():
        a, b = b, a % b
    return a.monic()


def fp_gcd_many(polys, start: FpPoly) -> FpPoly:
    d = start
    for f in polys:
        if not f.is_zero():
            d = fp_gcd(d, f)
    return d


# -- factoring x^n - 1 ------------------------------------------------------

def _powmod(base: FpPoly, e: int, mod: FpPoly) -> FpPoly:
    result = FpPoly.one(base.p)
    base = base % mod
    while e:
        if e & 1:
            result = (result * base) % mod
        base = (base * base) % mod
        e >>= 1
    return result


def _distinct_degree(f: FpPoly):
    """Split a monic squarefree f into (product of degree-d factors, d) pairs."""
    p = f.p
    out = []
    x = FpPoly.x(p)
    h = x
    d = 0
    rest = f
    while rest.degree >= 2 * (d + 1):
        d += 1
        h = _powmod(h, p, rest)
        g = fp_gcd(rest, h - x)
        if g.degree > 0:
            out.append((g, d))
            rest = rest // g
            h = h % rest
    if rest.degree > 0:
        out.append((rest, rest.degree))
    return out


def _equal_degree(f: FpPoly, d: int, rng: random.Random):
    """Cantor-Zassenhaus splitting of f into monic irreducibles of degree d."""
    if f.degree == d:
        return [f.monic()]
    p = f.p
    while True:
        a = FpPoly(p, [rng.randrange(p) for _ in range(f.degree)])
        if a.degree < 1:
            continue
        if p == 2:
            # trace map a + a^2 + ... + a^(2^(d-1))
            t, power = a % f, a % f
            for _ in range(d - 1):
                power = (power * power) % f
                t = t + power
            b = t
        else:
            b = _powmod(a, (p ** d - 1) // 2, f) - FpPoly.one(p)
        g = fp_gcd(f, b) if not b.is_zero() else f
        if 0 < g.degree < f.degree:
            return _equal_degree(g, d, rng) + _equal_degree(f // g, d, rng)


def factor_xn_minus_1(n: int, p: int):
    """Factor x^n - 1 over F_p as a sorted list of (monic irreducible, multiplicity)."""
    if n < 1:
        raise DomainError("n must be positive")
    e = 0
    n0 = n
    while n0 % p == 0:
        n0 //= p
        e += 1
    mult = p ** e
    rng = random.Random(n * 1000003 + p)
    factors = []
    for chunk, d in _distinct_degree(FpPoly.xn_minus_1(n0, p)):
        factors.extend(_equal_degree(chunk, d, rng))
    factors.sort(key=lambda f: (f.degree, f.coeffs))
    return [(f, mult) for f in factors]


# -- p-adic expansion classes ------------------------------------------------

class ExpansionKind(enum.Enum):
    ZERO = "zero"
    NONZERO = "nonzero"
    FULL = "full"


@dataclass(frozen=True)
class PadicProfile:
    """Base-p digits of m, most significant first: digits[0] = b_{l-1}."""

    m: int
    p: int
    digits: tuple
    kind: ExpansionKind
    q: int

    def leading_product(self) -> int:
        """(b_{l-1}+1)(b_{l-2}+1)...(b_{l-q}+1)."""
        out = 1
        for b in self.digits[: self.q]:
            out *= b + 1
        return out


def padic_classify(m: int, p: int, l: int) -> PadicProfile:
    """Classify m < p^l as a zero, non-zero or full p-adic expansion."""
    if not 0 < m < p ** l:
        raise DomainError(f"need 0 < m < p^l = {p ** l}, got m = {m}")
    digits = []
    rest = m
    for _ in range(l):
        rest, b = divmod(rest, p)
        digits.append(b)
    digits = tuple(reversed(digits))
    # q = length of the leading run of nonzero digits b_{l-1}, b_{l-2}, ...
    q = 0
    while q < l and digits[q]:
        q += 1
    if q == l:
        kind = ExpansionKind.FULL
    elif any(digits[q + 1:]):
        kind = ExpansionKind.NONZERO
    else:
        kind = ExpansionKind.ZERO
    return PadicProfile(m, p, digits, kind, q)


# -- polynomials over R -----------------------------------------------------

class RingPoly:
    """Polynomial in x with coefficients in R, stored as 2k slot polynomials.

    ``slots[s]`` is the F_p[x] polynomial multiplying the monomial of slot s,
    so f = sum_s m_s * slots[s](x).  ``coeff(i)`` returns the R coefficient of x^i.
    """

    __slots__ = ("params", "slots", "_hash")

    def __init__(self, params: RingParams, slots: Sequence[FpPoly]):
        if len(slots) != params.nslots:
            raise StructuralError(f"expected {params.nslots} slot polynomials")
        fixed = []
        for f in slots:
            if not isinstance(f, FpPoly):
                f = FpPoly(params.p, f)
            elif f.p != params.p:
                raise StructuralError("slot polynomial over the wrong field")
            fixed.append(f)
        self.params = params
        self.slots = tuple(fixed)
        self._hash = None

    @classmethod
    def zero(cls, params: RingParams) -> "RingPoly":
        return cls(params, [FpPoly.zero(params.p)] * params.nslots)

    @classmethod
    def constant(cls, c: RingElement) -> "RingPoly":
        return cls(c.params, [FpPoly(c.params.p, (a,)) for a in c.coeffs])

    @classmethod
    def from_fp(cls, params: RingParams, f: FpPoly, slot: int = 0) -> "RingPoly":
        slots = [FpPoly.zero(params.p)] * params.nslots
        slots[slot] = f
        return cls(params, slots)

    @classmethod
    def from_coeffs(cls, params: RingParams, coeffs: Sequence[RingElement]) -> "RingPoly":
        cols = [[c.coeffs[s] for c in coeffs] for s in range(params.nslots)]
        return cls(params, [FpPoly(params.p, col) for col in cols])

    @classmethod
    def x_power(cls, params: RingParams, e: int) -> "RingPoly":
        return cls.from_fp(params, FpPoly.monomial(e, params.p))

    def coeff(self, i: int) -> RingElement:
        return RingElement(self.params, tuple(f[i] for f in self.slots))

    @property
    def coeffs(self) -> tuple:
        return tuple(self.coeff(i) for i in range(self.literal_length))

    @property
    def literal_length(self) -> int:
        return max(len(f.coeffs) for f in self.slots)

    @property
    def literal_degree(self):
        d = self.literal_length - 1
        return d if d >= 0 else NEG_INF

    @property
    def paper_degree(self):
        """Degree of the residue image mu(f) in F_p[x]."""
        return self.slots[0].degree

    def mu(self) -> FpPoly:
        return self.slots[0]

    def is_zero(self) -> bool:
        return all(f.is_zero() for f in self.slots)

    def __bool__(self):
        return not self.is_zero()

    def __eq__(self, other):
        if not isinstance(other, RingPoly):
            return NotImplemented
        return self.params == other.params and self.slots == other.slots

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.params, self.slots))
        return self._hash

    def _same(self, other: "RingPoly"):
        if other.params != self.params:
            raise StructuralError(f"ring mismatch: {self.params} vs {other.params}")

    def __add__(self, other):
        if isinstance(other, RingElement):
            other = RingPoly.constant(other)
        self._same(other)
        return RingPoly(self.params, [a + b for a, b in zip(self.slots, other.slots)])

    def __neg__(self):
        return RingPoly(self.params, [-a for a in self.slots])

    def __sub__(self, other):
        if isinstance(other, RingElement):
            other = RingPoly.constant(other)
        return self + (-other)

    def __mul__(self, other):
        params = self.params
        if isinstance(other, int):
            return RingPoly(params, [a * other for a in self.slots])
        if isinstance(other, FpPoly):
            return RingPoly(params, [a * other for a in self.slots])
        if isinstance(other, RingElement):
            other = RingPoly.constant(other)
        if not isinstance(other, RingPoly):
            return NotImplemented
        self._same(other)
        p = params.p
        out = [FpPoly.zero(p)] * params.nslots
        table = params._mul_table
        for s, a in enumerate(self.slots):
            if a.is_zero():
                continue
            for t, b in enumerate(other.slots):
                r = table.get((s, t))
                if r is not None and not b.is_zero():
                    out[r] = out[r] + a * b
        return RingPoly(params, out)

    __rmul__ = __mul__

    def __pow__(self, e: int):
        result = RingPoly.constant(self.params.one())
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def reduce_cyclic(self, n: int) -> "RingPoly":
        """Image in R[x]/<x^n - 1>."""
        return RingPoly(self.params, [f.reduce_cyclic(n) for f in self.slots])

    def mul_cyclic(self, other, n: int) -> "RingPoly":
        return (self * other).reduce_cyclic(n)

    def is_regular(self) -> bool:
        return poly_is_regular(self)

    def to_str(self) -> str:
        """Expression string: ascending powers of x, R coefficients in slot order."""
        terms = []
        for e in range(self.literal_length):
            c = self.coeff(e)
            if c.is_zero():
                continue
            body = c.to_str()
            nonzero = sum(1 for a in c.coeffs if a)
            if e == 0:
                terms.append(body)
                continue
            xs = "x" if e == 1 else f"x^{e}"
            if body == "1":
                terms.append(xs)
            elif nonzero == 1:
                terms.append(f"{body}*{xs}")
            else:
                terms.append(f"({body})*{xs}")
        return "+".join(terms) if terms else "0"

    def __str__(self):
        return self.to_str()

    def __repr__(self):
        return f"RingPoly({self.to_str()!r}, p={self.params.p}, k={self.params.k})"


def poly_is_regular(f: RingPoly) -> bool:
    """A polynomial over a finite local ring is regular iff some coefficient is a unit."""
    return not f.mu().is_zero()


def poly_divmod(f: RingPoly, g: RingPoly):
    """Divide f by a regular g: f = g*q + r with literal degree of r below deg mu(g).

    g is first scaled by the inverse of its coefficient at x^d (d = deg mu(g)),
    then split as h + N with h monic of degree d and N carrying the nilpotent
    coefficients above x^d.  Dividing by h and feeding -N*q back in pushes the
    quotient one step deeper into the maximal ideal each round, so the loop
    stops after at most k + 1 rounds.
    """
    f._same(g)
    if not poly_is_regular(g):
        raise DomainError("divisor is not regular (all coefficients lie in <u, v>)")
    params = g.params
    d = g.paper_degree
    w = g.coeff(d).inverse()
    gs = g * w
    h_slots = [FpPoly(params.p, s.coeffs[: d + 1]) for s in gs.slots]
    n_slots = [FpPoly(params.p, (0,) * (d + 1) + s.coeffs[d + 1:]) for s in gs.slots]
    h = RingPoly(params, h_slots)
    nil = RingPoly(params, n_slots)

    total_q = RingPoly.zero(params)
    rem = f
    for _ in range(params.nslots + 2):
        q, rem = _divmod_monic(rem, h, d)
        if q.is_zero():
            break
        total_q = total_q + q
        rem = rem - nil * q
    else:
        raise AssertionError("division by a regular polynomial did not terminate")
    return total_q * w, rem


def _divmod_monic(f: RingPoly, h: RingPoly, d: int):
    """Long division by h whose coefficient at x^d is 1 and which has nothing above."""
    params = f.params
    coeffs = [f.coeff(i) for i in range(f.literal_length)]
    hc = [h.coeff(i) for i in range(d + 1)]
    q = [params.zero()] * max(len(coeffs) - d, 0)
    for i in range(len(coeffs) - 1, d - 1, -1):
        c = coeffs[i]
        if c.is_zero():
            continue
        q[i - d] = c
        for j in range(d + 1):
            coeffs[i - d + j] = coeffs[i - d + j] - c * hc[j]
    return RingPoly.from_coeffs(params, q), RingPoly.from_coeffs(params, coeffs[:d])
