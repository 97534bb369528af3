"""Exact row reduction over F_p.

``RowSpace`` keeps its basis in reduced row echelon form at all times, so
membership tests and coordinate solves are a single sweep over the pivots.
"""

from __future__ import annotations

from typing import Iterable, Sequence


class RowSpace:
    """Subspace of F_p^width with an incrementally maintained RREF basis."""

    def __init__(self, p: int, width: int, rows: Iterable[Sequence[int]] = ()):
        self.p = p
        self.width = width
        self._rows: dict[int, list[int]] = {}
        for r in rows:
            self.add(r)

    def __len__(self):
        return len(self._rows)

    @property
    def dimension(self) -> int:
        return len(self._rows)

    @property
    def pivots(self) -> list[int]:
        return sorted(self._rows)

    def rows(self) -> list[tuple]:
        return [tuple(self._rows[c]) for c in sorted(self._rows)]

    def row(self, pivot: int) -> list[int]:
        return self._rows[pivot]

    def reduce(self, vec: Sequence[int]) -> list[int]:
        """Remainder of vec after clearing every pivot column."""
        p = self.p
        v = [c % p for c in vec]
        for c in sorted(self._rows):
            a = v[c]
            if a:
                row = self._rows[c]
                v = [(x - a * y) % p for x, y in zip(v, row)]
        return v

    def __contains__(self, vec) -> bool:
        return not any(self.reduce(vec))

    def add(self, vec: Sequence[int]) -> bool:
        """Insert vec; return True when the dimension grew."""
        if len(vec) != self.width:
            raise ValueError(f"vector of length {len(vec)} in a space of width {self.width}")
        p = self.p
        v = self.reduce(vec)
        piv = next((i for i, c in enumerate(v) if c), None)
        if piv is None:
            return False
        inv = pow(v[piv], -1, p)
        v = [c * inv % p for c in v]
        for c, row in self._rows.items():
            a = row[piv]
            if a:
                self._rows[c] = [(x - a * y) % p for x, y in zip(row, v)]
        self._rows[piv] = v
        return True

    def coordinates(self, vec: Sequence[int]):
        """Coefficients (pivot -> scalar) expressing vec in the basis, or None."""
        coords = {}
        p = self.p
        for c in sorted(self._rows):
            a = vec[c] % p
            if a:
                coords[c] = a
        total = [0] * self.width
        for c, a in coords.items():
            for i, y in enumerate(self._rows[c]):
                if y:
                    total[i] += a * y
        if any((x - y) % p for x, y in zip(total, vec)):
            return None
        return coords

    def copy(self) -> "RowSpace":
        out = RowSpace(self.p, self.width)
        out._rows = {c: list(r) for c, r in self._rows.items()}
        return out

    def key(self) -> tuple:
        """Canonical hashable form (the RREF itself)."""
        return tuple(self.rows())

    def __eq__(self, other):
        if not isinstance(other, RowSpace):
            return NotImplemented
        return self.p == other.p and self.width == other.width and self.key() == other.key()

    def __hash__(self):
        return hash(self.key())


def rref(rows: Iterable[Sequence[int]], p: int, width: int):
    """(basis rows, pivot columns) of the row space of ``rows``."""
    space = RowSpace(p, width, rows)
    return space.rows(), space.pivots


def matrix_rank(rows: Sequence[Sequence[int]], p: int) -> int:
    if not rows:
        return 0
    return RowSpace(p, len(rows[0]), rows).dimension
