"""Dense linear algebra over GF(2).

Matrices are immutable, bit-packed: row i is a Python int whose bit j is
the entry in column j.  XOR on ints gives word-parallel row elimination,
which is what the determinant/corank/inverse loops in the invariant and
search code spend their time on.

The 0x0 matrix is legal and has determinant 1 and corank 0 (the empty
product convention; single-vertex graphs need it).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence


class SingularMatrixError(ValueError):
    """Raised when an inverse of a matrix with determinant 0 is requested."""


@dataclass(frozen=True)
class Gf2Matrix:
    """A square matrix over the two-element field.

    Attributes:
        n: dimension.
        rows: n ints; bit j of rows[i] is entry (i, j).
    """

    n: int
    rows: tuple[int, ...]

    def __post_init__(self) -> None:
        if self.n < 0:
            raise ValueError("negative dimension")
        if len(self.rows) != self.n:
            raise ValueError("row count does not match dimension")
        mask = (1 << self.n) - 1
        for r in self.rows:
            if r < 0 or r & ~mask:
                raise ValueError("row has bits outside the matrix")

    # -- construction ------------------------------------------------------

    @classmethod
    def from_lists(cls, entries: Sequence[Sequence[int]]) -> Gf2Matrix:
        n = len(entries)
        rows = []
        for row in entries:
            if len(row) != n:
                raise ValueError("matrix is not square")
            packed = 0
            for j, e in enumerate(row):
                if e & 1:
                    packed |= 1 << j
            rows.append(packed)
        return cls(n, tuple(rows))

    @classmethod
    def zero(cls, n: int) -> Gf2Matrix:
        return cls(n, (0,) * n)

    @classmethod
    def identity(cls, n: int) -> Gf2Matrix:
        return cls(n, tuple(1 << i for i in range(n)))

    # -- element access ----------------------------------------------------

    def get(self, i: int, j: int) -> int:
        self._check_index(i)
        self._check_index(j)
        return (self.rows[i] >> j) & 1

    def to_lists(self) -> list[list[int]]:
        return [[(r >> j) & 1 for j in range(self.n)] for r in self.rows]

    def is_symmetric(self) -> bool:
        return all(
            self.get(i, j) == self.get(j, i)
            for i in range(self.n)
            for j in range(i + 1, self.n)
        )

    def diagonal(self) -> tuple[int, ...]:
        return tuple((self.rows[i] >> i) & 1 for i in range(self.n))

    # -- arithmetic --------------------------------------------------------

    def __add__(self, other: Gf2Matrix) -> Gf2Matrix:
        """Entrywise sum over GF(2), i.e. XOR."""
        if self.n != other.n:
            raise ValueError("dimension mismatch")
        return Gf2Matrix(self.n, tuple(a ^ b for a, b in zip(self.rows, other.rows)))

    def __matmul__(self, other: Gf2Matrix) -> Gf2Matrix:
        if self.n != other.n:
            raise ValueError("dimension mismatch")
        rows = []
        for r in self.rows:
            acc = 0
            v = r
            while v:
                low = v & -v
                acc ^= other.rows[low.bit_length() - 1]
                v ^= low
            rows.append(acc)
        return Gf2Matrix(self.n, tuple(rows))

    def transpose(self) -> Gf2Matrix:
        rows = [0] * self.n
        for i, r in enumerate(self.rows):
            v = r
            while v:
                low = v & -v
                rows[low.bit_length() - 1] |= 1 << i
                v ^= low
        return Gf2Matrix(self.n, tuple(rows))

    # -- rank / determinant / inverse --------------------------------------

    def rank(self) -> int:
        pivots: list[tuple[int, int]] = []
        for r in self.rows:
            for bit, pivot_row in pivots:
                if (r >> bit) & 1:
                    r ^= pivot_row
            if r:
                pivots.append((r.bit_length() - 1, r))
        return len(pivots)

    def corank(self) -> int:
        return self.n - self.rank()

    def determinant(self) -> int:
        """det over GF(2); equals 1 exactly when the matrix has full rank."""
        return 1 if self.rank() == self.n else 0

    def inverse(self) -> Gf2Matrix:
        """Inverse by Gauss-Jordan on an augmented block.

        Raises:
            SingularMatrixError: if the determinant is 0.
        """
        n = self.n
        aug = [self.rows[i] | (1 << (n + i)) for i in range(n)]
        for col in range(n):
            pivot = next((k for k in range(col, n) if (aug[k] >> col) & 1), None)
            if pivot is None:
                raise SingularMatrixError("matrix has determinant 0")
            aug[col], aug[pivot] = aug[pivot], aug[col]
            for k in range(n):
                if k != col and (aug[k] >> col) & 1:
                    aug[k] ^= aug[col]
        return Gf2Matrix(n, tuple(r >> n for r in aug))

    # -- structural edits --------------------------------------------------

    def delete_rows_cols(self, indices: Iterable[int]) -> Gf2Matrix:
        """Remove the named rows and their matching columns.

        Deleting every index gives the 0x0 matrix.
        """
        removed = set()
        for i in indices:
            self._check_index(i)
            removed.add(i)
        kept = [i for i in range(self.n) if i not in removed]
        rows = []
        for i in kept:
            packed = 0
            for new_j, j in enumerate(kept):
                if (self.rows[i] >> j) & 1:
                    packed |= 1 << new_j
            rows.append(packed)
        return Gf2Matrix(len(kept), tuple(rows))

    def flip_diagonal_entry(self, i: int) -> Gf2Matrix:
        self._check_index(i)
        rows = list(self.rows)
        rows[i] ^= 1 << i
        return Gf2Matrix(self.n, tuple(rows))

    # -- misc --------------------------------------------------------------

    def render(self) -> str:
        """Debug rendering: '0'/'1' characters, one row per line."""
        return "\n".join(
            "".join(str((r >> j) & 1) for j in range(self.n)) for r in self.rows
        )

    def _check_index(self, i: int) -> None:
        if not 0 <= i < self.n:
            raise IndexError(f"index {i} out of range for dimension {self.n}")
