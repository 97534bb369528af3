"""Arithmetic in F_p and in R = F_p[u, v] / <u^k, v^2, uv - vu>.

An element of R is stored as 2k residues mod p.  Slot ``s`` holds the
coefficient of ``u^i v^j`` with ``s = j*k + i``, so the slots read

    1, u, ..., u^(k-1), v, uv, ..., u^(k-1) v

and dropping the v block (the projection onto F_p[u]/<u^k>) is a prefix slice.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Iterator, Sequence

from .errors import DomainError, StructuralError


def is_prime(p: int) -> bool:
    if p < 2:
        return False
    d = 2
    while d * d <= p:
        if p % d == 0:
            return False
        d += 1
    return True


@dataclass(frozen=True)
class RingParams:
    """Parameters (p, k) of the ring R_{u^k, v^2, p}."""

    p: int
    k: int

    def __post_init__(self):
        if not isinstance(self.p, int) or not is_prime(self.p):
            raise DomainError(f"p must be prime, got {self.p!r}")
        if not isinstance(self.k, int) or self.k < 1:
            raise DomainError(f"k must be a positive integer, got {self.k!r}")

    @property
    def nslots(self) -> int:
        return 2 * self.k

    @property
    def size(self) -> int:
        return self.p ** (2 * self.k)

    def slot(self, i: int, j: int) -> int:
        """Slot index of the monomial u^i v^j."""
        return j * self.k + i

    def monomial_of(self, s: int) -> tuple[int, int]:
        """(u-degree, v-degree) of slot ``s``."""
        return s % self.k, s // self.k

    @cached_property
    def _mul_table(self):
        # (s, t) -> slot of the product monomial, or None when it vanishes
        k = self.k
        table = {}
        for s in range(2 * k):
            i1, j1 = s % k, s // k
            for t in range(2 * k):
                i2, j2 = t % k, t // k
                i, j = i1 + i2, j1 + j2
                if i < k and j < 2:
                    table[s, t] = j * k + i
        return table

    def elements(self) -> Iterator["RingElement"]:
        """Every element of R (p^{2k} of them)."""
        n = self.nslots
        for idx in range(self.size):
            coeffs = []
            for _ in range(n):
                idx, c = divmod(idx, self.p)
                coeffs.append(c)
            yield RingElement(self, tuple(coeffs))

    def zero(self) -> "RingElement":
        return RingElement(self, (0,) * self.nslots)

    def one(self) -> "RingElement":
        return self.scalar(1)

    def scalar(self, c: int) -> "RingElement":
        coeffs = [0] * self.nslots
        coeffs[0] = c % self.p
        return RingElement(self, tuple(coeffs))

    def monomial(self, i: int, j: int, c: int = 1) -> "RingElement":
        """c * u^i * v^j; zero when the monomial vanishes in R."""
        coeffs = [0] * self.nslots
        if i < self.k and j < 2:
            coeffs[self.slot(i, j)] = c % self.p
        return RingElement(self, tuple(coeffs))

    @property
    def u(self) -> "RingElement":
        return self.monomial(1, 0)

    @property
    def v(self) -> "RingElement":
        return self.monomial(0, 1)

    def __str__(self):
        return f"F_{self.p}[u,v]/<u^{self.k},v^2,uv-vu>"


@dataclass(frozen=True)
class RingElement:
    """One element of R, as 2k canonical residues in [0, p)."""

    params: RingParams
    coeffs: tuple

    def __post_init__(self):
        if len(self.coeffs) != self.params.nslots:
            raise StructuralError(
                f"expected {self.params.nslots} coefficients, got {len(self.coeffs)}"
            )
        p = self.params.p
        if any(not 0 <= c < p for c in self.coeffs):
            object.__setattr__(self, "coeffs", tuple(c % p for c in self.coeffs))

    @classmethod
    def from_coeffs(cls, params: RingParams, coeffs: Sequence[int]) -> "RingElement":
        return cls(params, tuple(c % params.p for c in coeffs))

    def _check(self, other: "RingElement"):
        if not isinstance(other, RingElement):
            return NotImplemented
        if other.params != self.params:
            raise StructuralError(f"ring mismatch: {self.params} vs {other.params}")
        return None

    def _coerce(self, other):
        if isinstance(other, int):
            return self.params.scalar(other)
        if self._check(other) is NotImplemented:
            return None
        return other

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        p = self.params.p
        return RingElement(self.params, tuple((a + b) % p for a, b in zip(self.coeffs, other.coeffs)))

    __radd__ = __add__

    def __neg__(self):
        p = self.params.p
        return RingElement(self.params, tuple((-a) % p for a in self.coeffs))

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, int):
            p = self.params.p
            return RingElement(self.params, tuple(a * other % p for a in self.coeffs))
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        p = self.params.p
        out = [0] * self.params.nslots
        table = self.params._mul_table
        for s, a in enumerate(self.coeffs):
            if not a:
                continue
            for t, b in enumerate(other.coeffs):
                if b:
                    r = table.get((s, t))
                    if r is not None:
                        out[r] += a * b
        return RingElement(self.params, tuple(c % p for c in out))

    __rmul__ = __mul__

    def __pow__(self, e: int):
        if e < 0:
            return self.inverse() ** (-e)
        result = self.params.one()
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def __bool__(self):
        return any(self.coeffs)

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def is_unit(self) -> bool:
        """Units are exactly the elements outside the maximal ideal <u, v>."""
        return self.coeffs[0] != 0

    def inverse(self) -> "RingElement":
        if not self.is_unit():
            raise DomainError(f"{self} is not a unit")
        p = self.params.p
        c0_inv = pow(self.coeffs[0], -1, p)
        # self = c0 (1 + nil) with nil in <u, v>; <u, v>^(k+1) = 0
        nil = self * c0_inv - self.params.one()
        minus_nil = -nil
        term = self.params.one()
        total = self.params.one()
        for _ in range(self.params.nslots):
            term = term * minus_nil
            if term.is_zero():
                break
            total = total + term
        return total * c0_inv

    @property
    def residue(self) -> int:
        """Image in the residue field R/<u, v> = F_p."""
        return self.coeffs[0]

    @property
    def a_part(self) -> tuple:
        """Coefficients of the v-free part a in a + v b."""
        return self.coeffs[: self.params.k]

    @property
    def b_part(self) -> tuple:
        """Coefficients of b in a + v b."""
        return self.coeffs[self.params.k:]

    def to_str(self) -> str:
        terms = []
        for s, c in enumerate(self.coeffs):
            if not c:
                continue
            i, j = self.params.monomial_of(s)
            factors = []
            if i:
                factors.append("u" if i == 1 else f"u^{i}")
            if j:
                factors.append("v")
            if not factors:
                terms.append(str(c))
            elif c == 1:
                terms.append("*".join(factors))
            else:
                terms.append("*".join([str(c)] + factors))
        return "+".join(terms) if terms else "0"

    def __str__(self):
        return self.to_str()

    def __repr__(self):
        return f"RingElement({self.to_str()!r}, p={self.params.p}, k={self.params.k})"


def units(params: RingParams) -> Iterable[RingElement]:
    return (a for a in params.elements() if a.is_unit())
