"""Smith normal form, elementary divisors and cokernel lengths.

Works uniformly over any ring handle with an exact valuation and exact
division (the truncated-series base ring, or an extension with its normalized
valuation).  The pivot is always an entry of minimal valuation, ties broken by
lowest (row, col) index; over a valuation ring such a pivot divides every
remaining entry, so one elimination pass per pivot suffices and the divisor
valuations come out ascending.

A block that vanishes at working precision stops the reduction: if every
residual entry is an exact zero the matrix is genuinely rank-deficient there,
otherwise a rank decision would be a guess and the caller gets a
:class:`PrecisionError`.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import PrecisionError, ValidationError
from .linalg import DVRMatrix, identity_rows


class _InfiniteLength:
    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "infinite"

    def __str__(self):
        return "infinite"


#: Sentinel for a cokernel with a free part (never a large number).
INFINITE = _InfiniteLength()


@dataclass(frozen=True)
class ElementaryDivisors:
    """Valuations of the nonzero elementary divisors, plus the zero block.

    ``zero_block`` counts diagonal slots whose entries vanished at working
    precision; ``zero_block_exact`` records whether that block consisted of
    exact zeros (a genuine rank deficiency) or merely unresolved ones.
    """

    valuations: tuple
    zero_block: int = 0
    zero_block_exact: bool = True

    @property
    def rank(self):
        return len(self.valuations)

    def total(self):
        return sum(self.valuations)


def _snf_core(ring, work, rows, cols, track=False):
    V = identity_rows(cols, ring.zero(), ring.one()) if track else None
    Vinv = identity_rows(cols, ring.zero(), ring.one()) if track else None
    divisors = []
    k = 0
    limit = min(rows, cols)
    while k < limit:
        piv_v = None
        piv_pos = None
        for i in range(k, rows):
            for j in range(k, cols):
                v = ring.val(work[i][j])
                if v is not None and (piv_v is None or v < piv_v):
                    piv_v = v
                    piv_pos = (i, j)
        if piv_pos is None:
            exact = all(ring.is_exact_zero(work[i][j])
                        for i in range(k, rows) for j in range(k, cols))
            return divisors, limit - k, exact, V, Vinv
        pi, pj = piv_pos
        if pi != k:
            work[pi], work[k] = work[k], work[pi]
        if pj != k:
            for row in work:
                row[pj], row[k] = row[k], row[pj]
            if track:
                for row in V:
                    row[pj], row[k] = row[k], row[pj]
                Vinv[pj], Vinv[k] = Vinv[k], Vinv[pj]
        pivot = work[k][k]
        for i in range(k + 1, rows):
            entry = work[i][k]
            if ring.is_exact_zero(entry):
                continue
            q = ring.div(entry, pivot)
            prow = work[k]
            irow = work[i]
            for j in range(k, cols):
                irow[j] = irow[j] - q * prow[j]
        for j in range(k + 1, cols):
            entry = work[k][j]
            if ring.is_exact_zero(entry):
                continue
            q = ring.div(entry, pivot)
            for i in range(k, rows):
                work[i][j] = work[i][j] - q * work[i][k]
            if track:
                for row in V:
                    row[j] = row[j] - q * row[k]
                qrow = Vinv[j]
                Vinv[k] = [a + q * b for a, b in zip(Vinv[k], qrow)]
        divisors.append(piv_v)
        k += 1
    return divisors, 0, True, V, Vinv


def smith_normal_form(M: DVRMatrix) -> ElementaryDivisors:
    """Elementary divisor valuations of M; their sum is v(det M) for square
    full-rank M."""
    divisors, zero_block, exact, _, _ = _snf_core(M.ring, M.row_lists(), M.rows, M.cols)
    return ElementaryDivisors(tuple(divisors), zero_block, exact)


def smith_with_column_transform(M: DVRMatrix):
    """Smith reduction tracking the column transform.

    Returns ``(divisors, V, Vinv)`` where V is unimodular, the reduction used
    M -> (row ops) M V, and the columns of V at indices >= rank form a
    saturated basis of ker(M).
    """
    divisors, zero_block, exact, V, Vinv = _snf_core(
        M.ring, M.row_lists(), M.rows, M.cols, track=True)
    ed = ElementaryDivisors(tuple(divisors), zero_block, exact)
    return ed, V, Vinv


def matrix_rank(M: DVRMatrix) -> int:
    """Rank over the fraction field, via the count of nonzero divisors."""
    ed = smith_normal_form(M)
    if ed.zero_block and not ed.zero_block_exact:
        raise PrecisionError(
            "rank is ambiguous: a residual block vanishes at working precision")
    return ed.rank


def matrix_rank_lower_bound(M: DVRMatrix):
    """(pivot count, ambiguous): a certified lower bound for the rank.

    The bound is exact when ``ambiguous`` is False; otherwise entries of
    valuation beyond the working precision could hide further pivots.  Callers
    with structural upper bounds (d.d = 0 in a complex) can still certify
    ranks from the lower bounds alone.
    """
    ed = smith_normal_form(M)
    return ed.rank, bool(ed.zero_block and not ed.zero_block_exact)


def cokernel_length(M: DVRMatrix):
    """Length of coker(M: O^cols -> O^rows): the divisor valuation sum when the
    cokernel is torsion, INFINITE when it has a free part."""
    if M.cols < M.rows:
        return INFINITE
    ed = smith_normal_form(M)
    if ed.zero_block:
        if ed.zero_block_exact:
            return INFINITE
        raise PrecisionError(
            "cannot distinguish a zero block from divisors beyond the working precision")
    if ed.rank < M.rows:
        return INFINITE
    return ed.total()


def kernel_data(M: DVRMatrix):
    """Saturated kernel basis of M plus the change-of-basis data.

    Returns ``(rank, V, Vinv)``; kernel basis vectors are the columns of V at
    indices >= rank, and Vinv expresses vectors in the V basis.  ``rank`` is
    the pivot count; callers working inside a validated generically exact
    complex already know it equals the true rank.
    """
    ed, V, Vinv = smith_with_column_transform(M)
    return ed.rank, V, Vinv


def unimodular_check(ring, V, Vinv):
    """Debug helper: V @ Vinv must be the identity at working precision."""
    from .linalg import mat_mul
    n = len(V)
    prod = mat_mul(V, Vinv, ring.zero())
    one = ring.one()
    for i in range(n):
        for j in range(n):
            want = one if i == j else ring.zero()
            if not (prod[i][j] - want).is_zero_at_precision():
                raise ValidationError("column transform bookkeeping is inconsistent")
    return True
