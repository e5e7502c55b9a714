"""Exact mod-2 combinatorics and bit-packed GF(2) linear algebra.

Binomial and multinomial parities are computed from binary expansions
(Lucas' theorem); matrices over GF(2) pack each row into a Python int,
bit j of row i being the (i, j) entry.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence


def binom_parity(n: int, m: int) -> int:
    """C(n, m) mod 2: odd iff the bits of m are a subset of the bits of n.

    Defined for all n, m >= 0; returns 0 when m > n (m then has a bit
    outside n).
    """
    if n < 0 or m < 0:
        raise ValueError("binom_parity requires non-negative arguments")
    return 1 if m & ~n == 0 else 0


def multinomial_parity(parts: Iterable[int]) -> int:
    """Multinomial(sum(parts); parts) mod 2.

    Odd iff the binary expansions of the parts are pairwise disjoint,
    equivalently iff the parts add without carries.
    """
    seen = 0
    for p in parts:
        if p < 0:
            raise ValueError("multinomial_parity requires non-negative parts")
        if seen & p:
            return 0
        seen |= p
    return 1


@dataclass(frozen=True)
class F2Matrix:
    """Bit-packed matrix over GF(2).

    ``data[i]`` is an int whose bit j is the entry in row i, column j.
    """

    rows: int
    cols: int
    data: tuple[int, ...]

    def __post_init__(self) -> None:
        if self.rows < 0 or self.cols < 0:
            raise ValueError("negative dimensions")
        if len(self.data) != self.rows:
            raise ValueError("row count does not match data length")
        limit = 1 << self.cols
        for r in self.data:
            if r < 0 or r >= limit:
                raise ValueError("row value out of range for column count")

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[int]], cols: int | None = None) -> "F2Matrix":
        if cols is None:
            cols = len(rows[0]) if rows else 0
        data = []
        for row in rows:
            if len(row) != cols:
                raise ValueError("ragged rows")
            data.append(sum((1 << j) for j, v in enumerate(row) if v & 1))
        return cls(len(rows), cols, tuple(data))

    @classmethod
    def identity(cls, n: int) -> "F2Matrix":
        return cls(n, n, tuple(1 << i for i in range(n)))

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "F2Matrix":
        return cls(rows, cols, (0,) * rows)

    def entry(self, i: int, j: int) -> int:
        return (self.data[i] >> j) & 1

    def column(self, j: int) -> int:
        """Column j as a bitmask over row indices."""
        out = 0
        for i, r in enumerate(self.data):
            if (r >> j) & 1:
                out |= 1 << i
        return out

    def transpose(self) -> "F2Matrix":
        return F2Matrix(self.cols, self.rows, tuple(self.column(j) for j in range(self.cols)))

    def apply(self, v: int) -> int:
        """Matrix times column vector; v is a bitmask over columns."""
        out = 0
        for i, r in enumerate(self.data):
            if (r & v).bit_count() & 1:
                out |= 1 << i
        return out

    def matmul(self, other: "F2Matrix") -> "F2Matrix":
        if self.cols != other.rows:
            raise ValueError("dimension mismatch in matmul")
        data = []
        for r in self.data:
            acc = 0
            t = r
            while t:
                j = (t & -t).bit_length() - 1
                acc ^= other.data[j]
                t &= t - 1
            data.append(acc)
        return F2Matrix(self.rows, other.cols, tuple(data))

    def rank(self) -> int:
        return len(_rref(list(self.data), self.cols)[0])

    def is_zero(self) -> bool:
        return all(r == 0 for r in self.data)


def _rref(work: list[int], cols: int) -> tuple[list[int], list[int]]:
    """Reduced row echelon form; returns (nonzero rows, pivot columns)."""
    pivots: list[int] = []
    r = 0
    for c in range(cols):
        piv = None
        for i in range(r, len(work)):
            if (work[i] >> c) & 1:
                piv = i
                break
        if piv is None:
            continue
        work[r], work[piv] = work[piv], work[r]
        for i in range(len(work)):
            if i != r and ((work[i] >> c) & 1):
                work[i] ^= work[r]
        pivots.append(c)
        r += 1
        if r == len(work):
            break
    return work[:r], pivots


def f2_rank_kernel(m: F2Matrix) -> tuple[int, tuple[int, ...]]:
    """Rank and a kernel basis of m.

    Kernel vectors are bitmasks over column indices, returned in reduced
    echelon form (one vector per free column, ascending) so output is
    deterministic.  rank + len(kernel) == cols and m @ v == 0 for each v.
    """
    rref, pivots = _rref(list(m.data), m.cols)
    pivot_set = set(pivots)
    kernel = []
    for free in range(m.cols):
        if free in pivot_set:
            continue
        v = 1 << free
        for row, p in zip(rref, pivots):
            if (row >> free) & 1:
                v |= 1 << p
        kernel.append(v)
    return len(pivots), tuple(kernel)


def f2_solve(m: F2Matrix, target: int) -> int | None:
    """One solution x of m @ x == target, or None if inconsistent.

    ``target`` is a bitmask over row indices; the returned x is a bitmask
    over column indices with free variables set to zero.
    """
    if target < 0 or target >> m.rows:
        raise ValueError("target out of range for row count")
    aug = [row | (((target >> i) & 1) << m.cols) for i, row in enumerate(m.data)]
    rref, pivots = _rref(aug, m.cols + 1)
    x = 0
    for row, p in zip(rref, pivots):
        if p == m.cols:
            return None
        if (row >> m.cols) & 1:
            x |= 1 << p
    return x


class SpanSolver:
    """Incremental membership/coordinates in the span of GF(2) vectors.

    Vectors are int bitmasks.  Rows are reduced as they are added and the
    combination producing each reduced row is tracked, so ``coordinates``
    can express a member vector in terms of the inserted generators.
    """

    def __init__(self) -> None:
        self._rows: list[tuple[int, int]] = []  # (reduced vector, combination mask)
        self._count = 0

    def add(self, v: int) -> bool:
        """Insert v; returns True if it enlarged the span."""
        combo = 1 << self._count
        self._count += 1
        v, combo = self._reduce(v, combo)
        if v == 0:
            return False
        self._rows.append((v, combo))
        self._rows.sort(key=lambda rc: rc[0].bit_length(), reverse=True)
        return True

    def _reduce(self, v: int, combo: int) -> tuple[int, int]:
        # stored rows have pairwise distinct leading bits, so each xor
        # strictly shortens v and the loop terminates
        changed = True
        while changed and v:
            changed = False
            for row, rcombo in self._rows:
                if v.bit_length() == row.bit_length():
                    v ^= row
                    combo ^= rcombo
                    changed = True
                    break
        return v, combo

    @property
    def rank(self) -> int:
        return len(self._rows)

    def coordinates(self, v: int) -> int | None:
        """Combination mask over inserted vectors reproducing v, or None."""
        v, combo = self._reduce(v, 0)
        return combo if v == 0 else None

    def contains(self, v: int) -> bool:
        return self.coordinates(v) is not None
