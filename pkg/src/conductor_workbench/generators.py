"""Seeded random generators for property suites and the bundled demo runs.

Complexes are produced generically exact by construction: direct sums of
two-term full-rank blocks, conjugated degreewise by random unimodular
matrices.  The chi and gamma computations share no code with this recipe, so
checking their equality on such complexes exercises both paths end to end.
"""

from __future__ import annotations

import random
from fractions import Fraction

from .complexes import BoundedComplex, direct_sum, zero_matrix
from .errors import ValidationError
from .fields import PrimeField, RationalFunctionField, RatFunc
from .galois import GLattice, int_det, mat_int_mul
from .linalg import DVRMatrix, mat_mul
from .series import BaseDVR


def random_field_element(ring: BaseDVR, rng: random.Random, nonzero=False):
    K = ring.field
    if isinstance(K, PrimeField):
        lo = 1 if nonzero else 0
        return rng.randrange(lo, K.p)
    if isinstance(K, RationalFunctionField):
        while True:
            coeffs = tuple(rng.randrange(K.p) for _ in range(rng.choice((1, 1, 2))))
            val = K.from_poly(coeffs)
            if not nonzero or not K.is_zero(val):
                return val
    raise ValidationError("unknown coefficient field")


def random_series(ring: BaseDVR, rng: random.Random, max_val=3, min_val=0, unit=False):
    """A sparse series supported in [min_val, max_val]; ``unit`` forces valuation 0."""
    K = ring.field
    coeffs = [K.zero] * ring.precision
    lo = 0 if unit else min_val
    support = rng.sample(range(lo, max_val + 1), k=min(rng.randint(1, 2), max_val - lo + 1))
    for j in support:
        coeffs[j] = random_field_element(ring, rng)
    if unit:
        coeffs[0] = random_field_element(ring, rng, nonzero=True)
    elif all(K.is_zero(c) for c in coeffs):
        coeffs[min_val] = random_field_element(ring, rng, nonzero=True)
    return ring.element(coeffs)


def random_unimodular_pair(ring: BaseDVR, rng: random.Random, n: int, ops=None, max_val=3):
    """(U, U^-1) as products of elementary operations, both with exact entries.

    The inverse is accumulated by replaying the inverse operation on the other
    factor, so no series inversion (and no precision loss) is involved; row
    scalings use field constants, whose inverses are exact.
    """
    U = [[ring.one() if i == j else ring.zero() for j in range(n)] for i in range(n)]
    Uinv = [[ring.one() if i == j else ring.zero() for j in range(n)] for i in range(n)]
    if n <= 1:
        return U, Uinv
    K = ring.field
    for _ in range(ops if ops is not None else 2 * n):
        kind = rng.randrange(3)
        i, j = rng.sample(range(n), 2)
        if kind == 0:
            U[i], U[j] = U[j], U[i]
            for row in Uinv:  # (P U)^-1 = U^-1 P^-1 swaps columns
                row[i], row[j] = row[j], row[i]
        elif kind == 1:
            q = random_series(ring, rng, max_val=max_val)
            U[i] = [a + q * b for a, b in zip(U[i], U[j])]
            for row in Uinv:
                row[j] = row[j] - q * row[i]
        else:
            c = random_field_element(ring, rng, nonzero=True)
            u = ring.from_field(c)
            uinv = ring.from_field(K.inv(c))
            U[i] = [u * a for a in U[i]]
            for row in Uinv:
                row[i] = uinv * row[i]
    return U, Uinv


def random_unimodular(ring: BaseDVR, rng: random.Random, n: int, ops=None, max_val=3):
    return random_unimodular_pair(ring, rng, n, ops, max_val)[0]


def random_torsion_block(ring: BaseDVR, rng: random.Random, size: int, max_val=3):
    """A size x size matrix with unit determinant times pi^(sum of diagonal vals)."""
    rows = [[ring.zero()] * size for _ in range(size)]
    for i in range(size):
        v = rng.randint(0, max_val)
        rows[i][i] = random_series(ring, rng, max_val=0, unit=True) * ring.pi(v)
        for j in range(i + 1, size):
            if rng.random() < 0.5:
                rows[i][j] = random_series(ring, rng, max_val=max_val)
    return rows


def random_generically_exact_complex(ring: BaseDVR, rng: random.Random,
                                     max_terms=4, max_block=2, max_val=3) -> BoundedComplex:
    """A generically exact complex in degrees 1..n with ranks <= 2*max_block."""
    n = rng.randint(2, max_terms)
    blocks = [rng.randint(0, max_block) for _ in range(n - 1)]
    if not any(blocks):
        blocks[rng.randrange(n - 1)] = 1
    pieces = []
    for i, s in enumerate(blocks):
        if s == 0:
            continue
        ranks = [0] * n
        ranks[i] = ranks[i + 1] = s
        diffs = []
        for d in range(n - 1):
            if d == i:
                diffs.append(DVRMatrix.from_rows(ring, random_torsion_block(ring, rng, s, max_val)))
            else:
                diffs.append(zero_matrix(ring, ranks[d + 1], ranks[d]))
        pieces.append(BoundedComplex(ring, tuple(ranks), tuple(diffs)))
    out = pieces[0]
    for piece in pieces[1:]:
        out = direct_sum(out, piece)
    # conjugate degreewise by unimodular changes of basis
    transforms = [random_unimodular_pair(ring, rng, out.ranks[r]) for r in range(n)]
    diffs = []
    for d in range(n - 1):
        u_next, _ = transforms[d + 1]
        _, uinv_here = transforms[d]
        rows = mat_mul(mat_mul(u_next, out.differentials[d].row_lists(), ring.zero()),
                       uinv_here, ring.zero())
        diffs.append(DVRMatrix.from_rows(ring, rows) if out.ranks[d] and out.ranks[d + 1]
                     else zero_matrix(ring, out.ranks[d + 1], out.ranks[d]))
    return BoundedComplex(ring, out.ranks, tuple(diffs))


# ---------------------------------------------------------------------------
# integer-lattice generators


def random_int_unimodular(rng: random.Random, n: int, ops=None, bound=2):
    m = [[1 if i == j else 0 for j in range(n)] for i in range(n)]
    if n <= 1:
        return m
    for _ in range(ops if ops is not None else 3 * n):
        i, j = rng.sample(range(n), 2)
        if rng.random() < 0.2:
            m[i], m[j] = m[j], m[i]
            m[i] = [-x for x in m[i]]
        else:
            q = rng.randint(-bound, bound)
            m[i] = [a + q * b for a, b in zip(m[i], m[j])]
    return m


def random_glattice(rng: random.Random, group, max_extra_rank=2) -> GLattice:
    """The regular lattice plus a trivial summand, in a scrambled basis."""
    L = GLattice.regular(group)
    extra = rng.randint(0, max_extra_rank)
    if extra:
        L = L.direct_sum(GLattice.trivial(group, extra))
    u = random_int_unimodular(rng, L.rank)
    uinv = _invert_int_unimodular(u)
    mats = [mat_int_mul(mat_int_mul(u, L.act(g)), uinv) for g in range(group.order)]
    return GLattice(group, L.rank, mats)


def _invert_int_unimodular(m):
    n = len(m)
    work = [[Fraction(x) for x in row] for row in m]
    inv = [[Fraction(1) if i == j else Fraction(0) for j in range(n)] for i in range(n)]
    for k in range(n):
        piv = next(i for i in range(k, n) if work[i][k])
        work[k], work[piv] = work[piv], work[k]
        inv[k], inv[piv] = inv[piv], inv[k]
        scale = 1 / work[k][k]
        work[k] = [x * scale for x in work[k]]
        inv[k] = [x * scale for x in inv[k]]
        for i in range(n):
            if i != k and work[i][k]:
                q = work[i][k]
                work[i] = [a - q * b for a, b in zip(work[i], work[k])]
                inv[i] = [a - q * b for a, b in zip(inv[i], inv[k])]
    out = [[int(x) for x in row] for row in inv]
    if any(Fraction(out[i][j]) != inv[i][j] for i in range(n) for j in range(n)):
        raise ValidationError("unimodular inverse came out fractional")
    return out


def random_equivariant_sublattice(rng: random.Random, L: GLattice):
    """A finite-index equivariant sublattice via a group-ring endomorphism.

    Returns (sublattice_rep, injection_matrix); the injection columns are the
    images of the sublattice basis inside L.
    """
    group = L.group
    while True:
        coeffs = [rng.randint(-2, 2) for _ in range(group.order)]
        phi = [[0] * L.rank for _ in range(L.rank)]
        for g, c in enumerate(coeffs):
            if not c:
                continue
            mg = L.act(g)
            for i in range(L.rank):
                for j in range(L.rank):
                    phi[i][j] += c * mg[i][j]
        d = int_det(phi)
        if d != 0:
            break
    phi_inv = [[Fraction(x) for x in row] for row in phi]
    inv = _fraction_inverse(phi_inv)
    mats = []
    for g in range(group.order):
        conj = _fraction_mat_mul(_fraction_mat_mul(inv, L.act(g)), phi)
        imat = [[int(x) for x in row] for row in conj]
        if any(Fraction(imat[i][j]) != conj[i][j]
               for i in range(L.rank) for j in range(L.rank)):
            raise ValidationError("sublattice action is not integral; phi was not central")
        mats.append(imat)
    return GLattice(group, L.rank, mats), phi


def _fraction_inverse(m):
    n = len(m)
    work = [row[:] for row in m]
    inv = [[Fraction(1) if i == j else Fraction(0) for j in range(n)] for i in range(n)]
    for k in range(n):
        piv = next(i for i in range(k, n) if work[i][k])
        work[k], work[piv] = work[piv], work[k]
        inv[k], inv[piv] = inv[piv], inv[k]
        scale = 1 / work[k][k]
        work[k] = [x * scale for x in work[k]]
        inv[k] = [x * scale for x in inv[k]]
        for i in range(n):
            if i != k and work[i][k]:
                q = work[i][k]
                work[i] = [a - q * b for a, b in zip(work[i], work[k])]
                inv[i] = [a - q * b for a, b in zip(inv[i], inv[k])]
    return inv


def _fraction_mat_mul(a, b):
    n, k = len(a), len(b)
    m = len(b[0])
    return [[sum(Fraction(a[i][l]) * b[l][j] for l in range(k)) for j in range(m)]
            for i in range(n)]


def random_exact_lattice_triple(rng: random.Random, group):
    """(sub, total, quotient, injection, surjection): rationally exact by construction.

    The summands are permutation lattices Z[G/H] for random subgroups H, glued
    as a direct sum and rewritten in a scrambled basis.
    """
    subgroups = _all_subgroups(group)
    A = GLattice.permutation(group, rng.choice(subgroups))
    B = GLattice.permutation(group, rng.choice(subgroups))
    total_plain = A.direct_sum(B)
    u = random_int_unimodular(rng, total_plain.rank)
    uinv = _invert_int_unimodular(u)
    mats = [mat_int_mul(mat_int_mul(u, total_plain.act(g)), uinv)
            for g in range(group.order)]
    total = GLattice(group, total_plain.rank, mats)
    inj = [[u[i][j] for j in range(A.rank)] for i in range(total.rank)]
    surj = [row[:] for row in uinv[A.rank:]]
    return A, total, B, inj, surj


def _all_subgroups(group):
    """All subgroups, by closing each subset of a generating run (small groups only)."""
    found = {frozenset({group.identity})}
    elements = list(range(group.order))
    for g in elements:
        new = set()
        for s in found:
            new.add(_close_subgroup(group, s | {g}))
        found |= new
    # close under pairwise joins a few times for safety on small orders
    for _ in range(2):
        extra = set()
        for s1 in found:
            for s2 in found:
                extra.add(_close_subgroup(group, s1 | s2))
        found |= extra
    return [tuple(sorted(s)) for s in sorted(found, key=lambda s: (len(s), sorted(s)))]


def _close_subgroup(group, seed):
    s = set(seed) | {group.identity}
    changed = True
    while changed:
        changed = False
        for a in list(s):
            for b in list(s):
                c = group.mul(a, b)
                if c not in s:
                    s.add(c)
                    changed = True
    return frozenset(s)
