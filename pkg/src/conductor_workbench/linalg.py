"""Generic matrix helpers over exact rings.

Entries may be :class:`~conductor_workbench.series.LocalRingElement` or
algebra elements; anything with ``+``, ``-``, ``*`` and ``is_exact_zero()``
works.  Determinants use Laplace expansion memoized over column subsets,
which is exact and fast enough for the ranks this package handles.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import ValidationError


@dataclass(frozen=True)
class DVRMatrix:
    """A rows x cols matrix over a ring handle with an exact valuation.

    ``ring`` is a :class:`BaseDVR` or an :class:`ExtensionData`; both expose
    ``val``, ``div``, ``zero``, ``one`` and ``is_exact_zero``.
    """

    ring: object
    rows: int
    cols: int
    entries: tuple

    def __post_init__(self):
        if len(self.entries) != self.rows * self.cols:
            raise ValidationError(
                f"matrix needs {self.rows * self.cols} entries, got {len(self.entries)}")

    @classmethod
    def from_rows(cls, ring, row_lists):
        rows = len(row_lists)
        cols = len(row_lists[0]) if rows else 0
        if any(len(r) != cols for r in row_lists):
            raise ValidationError("ragged matrix rows")
        return cls(ring, rows, cols, tuple(x for r in row_lists for x in r))

    def entry(self, i, j):
        return self.entries[i * self.cols + j]

    def row_lists(self):
        c = self.cols
        return [list(self.entries[i * c:(i + 1) * c]) for i in range(self.rows)]

    def transpose(self):
        return DVRMatrix.from_rows(
            self.ring, [[self.entry(i, j) for i in range(self.rows)] for j in range(self.cols)])

    def __matmul__(self, other):
        if self.ring != other.ring or self.cols != other.rows:
            raise ValidationError("matrix shapes/rings do not match for multiplication")
        return DVRMatrix.from_rows(
            self.ring, mat_mul(self.row_lists(), other.row_lists(), self.ring.zero()))


def mat_mul(a, b, zero):
    n, k = len(a), len(b)
    m = len(b[0]) if k else 0
    out = [[zero for _ in range(m)] for _ in range(n)]
    for i in range(n):
        for l in range(k):
            x = a[i][l]
            if x.is_exact_zero():
                continue
            brow = b[l]
            orow = out[i]
            for j in range(m):
                if not brow[j].is_exact_zero():
                    orow[j] = orow[j] + x * brow[j]
    return out


def identity_rows(n, zero, one):
    return [[one if i == j else zero for j in range(n)] for i in range(n)]


def matrix_det(rows, zero, one):
    """Determinant by memoized Laplace expansion along successive rows."""
    n = len(rows)
    if n == 0:
        return one
    if any(len(r) != n for r in rows):
        raise ValidationError("determinant of a non-square matrix")
    memo = {}

    def rec(r, mask):
        if r == n:
            return one
        key = mask
        got = memo.get(key)
        if got is not None:
            return got
        acc = zero
        negate = False
        for c in range(n):
            if not (mask >> c) & 1:
                continue
            entry = rows[r][c]
            if not entry.is_exact_zero():
                term = entry * rec(r + 1, mask & ~(1 << c))
                acc = acc + (-term if negate else term)
            negate = not negate
        memo[key] = acc
        return acc

    return rec(0, (1 << n) - 1)
