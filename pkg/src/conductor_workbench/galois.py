"""Finite groups acting on lattices, ramification filtrations, Artin conductors.

Everything here is exact integer / rational arithmetic.  The conductor of a
rational representation V with lower-numbered filtration {G_i} is

    a(V) = sum_{i >= 0} (|G_i| / |G_0|) * codim V^{G_i},

the classical normalization: the regular lattice of a totally ramified
extension then satisfies a = sum (|G_i| - 1) = v(disc), which the test suite
checks against independently computed discriminants.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .algebras import ExtensionData
from .errors import PrecisionError, ValidationError

# ---------------------------------------------------------------------------
# integer linear algebra (Smith form over Z, kernels, ranks)


def _int_smith(rows, track=False):
    """Diagonalize over Z; returns (divisors, V, Vinv) with V unimodular
    column transform.  Divisors are nonnegative and form a divisibility chain."""
    work = [list(r) for r in rows]
    m = len(work)
    n = len(work[0]) if m else 0
    V = [[1 if i == j else 0 for j in range(n)] for i in range(n)] if track else None
    Vinv = [[1 if i == j else 0 for j in range(n)] for i in range(n)] if track else None
    divisors = []
    k = 0

    def col_op(j, src, q):  # col_j -= q * col_src
        for row in work:
            row[j] -= q * row[src]
        if track:
            for row in V:
                row[j] -= q * row[src]
            for t in range(n):
                Vinv[src][t] += q * Vinv[j][t]

    def col_swap(a, b):
        for row in work:
            row[a], row[b] = row[b], row[a]
        if track:
            for row in V:
                row[a], row[b] = row[b], row[a]
            Vinv[a], Vinv[b] = Vinv[b], Vinv[a]

    while k < min(m, n):
        piv = None
        for i in range(k, m):
            for j in range(k, n):
                if work[i][j] and (piv is None or abs(work[i][j]) < abs(work[piv[0]][piv[1]])):
                    piv = (i, j)
        if piv is None:
            break
        while True:
            i, j = piv
            if i != k:
                work[i], work[k] = work[k], work[i]
            if j != k:
                col_swap(j, k)
            p = work[k][k]
            dirty = False
            for i in range(k + 1, m):
                if work[i][k]:
                    q = work[i][k] // p
                    for t in range(k, n):
                        work[i][t] -= q * work[k][t]
                    if work[i][k]:
                        dirty = True
            for j in range(k + 1, n):
                if work[k][j]:
                    q = work[k][j] // p
                    col_op(j, k, q)
                    if work[k][j]:
                        dirty = True
            if not dirty:
                # ensure pivot divides the rest of the block
                offender = None
                for i in range(k + 1, m):
                    for j in range(k + 1, n):
                        if work[i][j] % p:
                            offender = i
                            break
                    if offender is not None:
                        break
                if offender is None:
                    break
                for t in range(k, n):
                    work[k][t] += work[offender][t]
            piv = None
            for i in range(k, m):
                for j in range(k, n):
                    if work[i][j] and (piv is None
                                       or abs(work[i][j]) < abs(work[piv[0]][piv[1]])):
                        piv = (i, j)
        divisors.append(abs(work[k][k]))
        k += 1
    return divisors, V, Vinv


def int_elementary_divisors(rows):
    return _int_smith(rows)[0]


def int_rank(rows):
    return len(_int_smith(rows)[0])


def int_kernel_basis(rows):
    """Primitive basis of the integer kernel (list of vectors)."""
    m = len(rows)
    n = len(rows[0]) if m else 0
    if m == 0 or n == 0:
        return [[1 if i == j else 0 for i in range(n)] for j in range(n)]
    divisors, V, _ = _int_smith(rows, track=True)
    rank = len(divisors)
    return [[V[i][j] for i in range(n)] for j in range(rank, n)]


def int_det(rows):
    n = len(rows)
    if n == 0:
        return 1
    if any(len(r) != n for r in rows):
        raise ValidationError("determinant of a non-square matrix")
    work = [[Fraction(x) for x in r] for r in rows]
    det = Fraction(1)
    for k in range(n):
        piv = next((i for i in range(k, n) if work[i][k]), None)
        if piv is None:
            return 0
        if piv != k:
            work[k], work[piv] = work[piv], work[k]
            det = -det
        det *= work[k][k]
        inv = 1 / work[k][k]
        for i in range(k + 1, n):
            if work[i][k]:
                factor = work[i][k] * inv
                work[i] = [a - factor * b for a, b in zip(work[i], work[k])]
    if det.denominator != 1:
        raise ValidationError("integer determinant came out fractional")
    return int(det)


def mat_int_mul(a, b):
    n, k = len(a), len(b)
    m = len(b[0]) if k else 0
    return [[sum(a[i][l] * b[l][j] for l in range(k)) for j in range(m)] for i in range(n)]


# ---------------------------------------------------------------------------
# groups and lattices


class FiniteGroup:
    """A finite group by multiplication table; elements are indices 0..m-1."""

    def __init__(self, table, element_names=None):
        self.table = tuple(tuple(r) for r in table)
        self.order = len(self.table)
        self.element_names = tuple(element_names) if element_names else tuple(
            str(i) for i in range(self.order))
        self.identity = self._find_identity()
        self._validate()

    def _find_identity(self):
        for e in range(self.order):
            if all(self.table[e][g] == g and self.table[g][e] == g
                   for g in range(self.order)):
                return e
        raise ValidationError("multiplication table has no identity")

    def _validate(self):
        m = self.order
        rng = range(m)
        for row in self.table:
            if sorted(row) != list(rng):
                raise ValidationError("multiplication table rows must be permutations")
        for g in rng:
            if all(self.table[g][h] != self.identity for h in rng):
                raise ValidationError(f"element {g} has no inverse")
        for a in rng:
            for b in rng:
                ab = self.table[a][b]
                for c in rng:
                    if self.table[ab][c] != self.table[a][self.table[b][c]]:
                        raise ValidationError("multiplication table is not associative")

    def mul(self, a, b):
        return self.table[a][b]

    def inv(self, a):
        for b in range(self.order):
            if self.table[a][b] == self.identity:
                return b
        raise ValidationError("element has no inverse")

    def is_subgroup(self, subset):
        s = set(subset)
        if self.identity not in s:
            return False
        return all(self.table[a][b] in s for a in s for b in s)

    def is_normal(self, subset, ambient=None):
        s = set(subset)
        amb = set(ambient) if ambient is not None else set(range(self.order))
        return all(self.table[self.table[g][h]][self.inv(g)] in s
                   for g in amb for h in s)

    @classmethod
    def cyclic(cls, n):
        return cls([[(i + j) % n for j in range(n)] for i in range(n)])

    @classmethod
    def direct_product(cls, g, h):
        m = g.order * h.order

        def idx(a, b):
            return a * h.order + b

        table = [[0] * m for _ in range(m)]
        names = [None] * m
        for a1 in range(g.order):
            for b1 in range(h.order):
                names[idx(a1, b1)] = f"({g.element_names[a1]},{h.element_names[b1]})"
                for a2 in range(g.order):
                    for b2 in range(h.order):
                        table[idx(a1, b1)][idx(a2, b2)] = idx(
                            g.mul(a1, a2), h.mul(b1, b2))
        return cls(table, names)

    @classmethod
    def klein_four(cls):
        return cls.direct_product(cls.cyclic(2), cls.cyclic(2))

    def __repr__(self):
        return f"FiniteGroup(order={self.order})"


class GLattice:
    """An integral representation: rank-r lattice with G acting by matrices."""

    def __init__(self, group: FiniteGroup, rank: int, matrices, validate=True):
        self.group = group
        self.rank = rank
        self.matrices = tuple(tuple(tuple(row) for row in m) for m in matrices)
        if len(self.matrices) != group.order:
            raise ValidationError("need one matrix per group element")
        if validate:
            self.validate()

    def validate(self):
        ident = [[1 if i == j else 0 for j in range(self.rank)] for i in range(self.rank)]
        if [list(r) for r in self.matrices[self.group.identity]] != ident:
            raise ValidationError("identity element must act as the identity matrix")
        for g, mg in enumerate(self.matrices):
            if int_det([list(r) for r in mg]) not in (1, -1):
                raise ValidationError(f"element {g} does not act invertibly over Z")
            for h in range(self.group.order):
                prod = mat_int_mul([list(r) for r in mg],
                                   [list(r) for r in self.matrices[h]])
                if prod != [list(r) for r in self.matrices[self.group.mul(g, h)]]:
                    raise ValidationError("action matrices do not define a homomorphism")
        return True

    def act(self, g):
        return [list(r) for r in self.matrices[g]]

    @classmethod
    def regular(cls, group: FiniteGroup):
        m = group.order
        mats = []
        for g in range(m):
            mat = [[0] * m for _ in range(m)]
            for h in range(m):
                mat[group.mul(g, h)][h] = 1
            mats.append(mat)
        return cls(group, m, mats)

    @classmethod
    def trivial(cls, group: FiniteGroup, rank=1):
        ident = [[1 if i == j else 0 for j in range(rank)] for i in range(rank)]
        return cls(group, rank, [ident] * group.order)

    @classmethod
    def permutation(cls, group: FiniteGroup, subgroup):
        """Z[G/H] with G permuting the left cosets of H."""
        sub = sorted(set(subgroup))
        if not group.is_subgroup(sub):
            raise ValidationError("given subset is not a subgroup")
        cosets = []
        seen = set()
        for g in range(group.order):
            if g in seen:
                continue
            coset = frozenset(group.mul(g, h) for h in sub)
            seen |= coset
            cosets.append(coset)
        index = {c: i for i, c in enumerate(cosets)}
        mats = []
        for g in range(group.order):
            mat = [[0] * len(cosets) for _ in range(len(cosets))]
            for i, c in enumerate(cosets):
                target = frozenset(group.mul(g, x) for x in c)
                mat[index[target]][i] = 1
            mats.append(mat)
        return cls(group, len(cosets), mats)

    def direct_sum(self, other: "GLattice"):
        if other.group is not self.group:
            raise ValidationError("direct sum requires a common group")
        r1, r2 = self.rank, other.rank
        mats = []
        for g in range(self.group.order):
            a, b = self.act(g), other.act(g)
            mat = [row + [0] * r2 for row in a]
            mat += [[0] * r1 + row for row in b]
            mats.append(mat)
        return GLattice(self.group, r1 + r2, mats, validate=False)


@dataclass(frozen=True)
class SaturatedSublattice:
    """A primitive (saturated) sublattice, stored as a list of basis vectors."""

    ambient_rank: int
    basis: tuple  # tuple of length-ambient_rank vectors

    @property
    def rank(self):
        return len(self.basis)

    def basis_matrix(self):
        """ambient_rank x rank matrix whose columns are the basis vectors."""
        return [[vec[i] for vec in self.basis] for i in range(self.ambient_rank)]

    def is_primitive(self):
        if not self.basis:
            return True
        return all(d == 1 for d in int_elementary_divisors(self.basis_matrix()))


class RamificationData:
    """A descending lower-numbered chain G_0 >= G_1 >= ... >= G_k = {1}."""

    def __init__(self, group: FiniteGroup, chain):
        self.group = group
        self.chain = tuple(tuple(sorted(set(s))) for s in chain)
        self.validate()

    def validate(self):
        if not self.chain:
            return True
        for i, s in enumerate(self.chain):
            if not self.group.is_subgroup(s):
                raise ValidationError(f"filtration step {i} is not a subgroup")
            if not self.group.is_normal(s, self.chain[0]):
                raise ValidationError(f"filtration step {i} is not normal in G_0")
        for a, b in zip(self.chain, self.chain[1:]):
            if not set(a) >= set(b):
                raise ValidationError("filtration must be descending")
        if set(self.chain[-1]) != {self.group.identity}:
            raise ValidationError("filtration must end with the trivial subgroup")
        return True

    def __repr__(self):
        return f"RamificationData(sizes={[len(s) for s in self.chain]})"


# ---------------------------------------------------------------------------
# operations


def fixed_sublattice(L: GLattice, subgroup) -> SaturatedSublattice:
    """Primitive basis of the sublattice fixed by every element of the subgroup."""
    elems = [g for g in set(subgroup) if g != L.group.identity]
    if not elems:
        basis = [[1 if i == j else 0 for i in range(L.rank)] for j in range(L.rank)]
        return SaturatedSublattice(L.rank, tuple(tuple(v) for v in basis))
    stacked = []
    for g in elems:
        mat = L.act(g)
        for i in range(L.rank):
            row = list(mat[i])
            row[i] -= 1
            stacked.append(row)
    kernel = int_kernel_basis(stacked)
    return SaturatedSublattice(L.rank, tuple(tuple(v) for v in kernel))


def artin_conductor(L: GLattice, R: RamificationData) -> Fraction:
    """a(L tensor Q) for the lower-numbered filtration, an exact rational >= 0."""
    if R.group is not L.group:
        raise ValidationError("lattice and filtration use different groups")
    if not R.chain:
        return Fraction(0)
    g0 = len(R.chain[0])
    total = Fraction(0)
    for subset in R.chain:
        codim = L.rank - fixed_sublattice(L, subset).rank
        if codim:
            total += Fraction(len(subset), g0) * codim
    return total


def torus_conductor_formula(lattice: GLattice, R: RamificationData,
                            lattice_kind: str = "cocharacters") -> Fraction:
    """(1/2) a(lattice tensor Q): the base change conductor of the corresponding
    torus when the residue field is perfect.

    Character and cocharacter lattices give the same value (dual
    representations have fixed spaces of equal dimension), so either is
    accepted; the flag only documents the caller's intent.
    """
    if lattice_kind not in ("characters", "cocharacters"):
        raise ValidationError("lattice_kind must be 'characters' or 'cocharacters'")
    return artin_conductor(lattice, R) / 2


def ramification_filtration_from_extension(E: ExtensionData):
    """Lower-numbered filtration of a totally ramified Galois monogenic extension.

    Uses i(sigma) = v_L(sigma(pi_L) - pi_L) and G_i = {sigma : i(sigma) >= i+1},
    which is the classical recipe when the ring is generated by the
    uniformizer.  Returns (FiniteGroup, RamificationData); group element g
    corresponds to E.embeddings[g].
    """
    if E.f != 1:
        raise ValidationError("filtration requires a totally ramified extension (f = 1)")
    n = E.rank
    # monogenicity by the uniformizer: powers of pi_L must span the order
    pows = [E.one()]
    for _ in range(n - 1):
        pows.append(pows[-1] * E.uniformizer)
    from .linalg import matrix_det
    rows = [[p.coords[i] for p in pows] for i in range(n)]
    det = matrix_det(rows, E.base.zero(), E.base.one())
    dv = det.valuation()
    if dv is None:
        raise PrecisionError("monogenicity test degenerates at working precision")
    if dv != 0:
        raise ValidationError("the uniformizer does not generate the order")

    maps = E.embeddings
    table = []
    for a, sa in enumerate(maps):
        row = []
        for b, sb in enumerate(maps):
            comp = sa.compose(sb)
            match = next((c for c, sc in enumerate(maps)
                          if comp.agrees_with(sc)), None)
            if match is None:
                raise ValidationError("embeddings do not close under composition")
            row.append(match)
        table.append(row)
    group = FiniteGroup(table)

    breaks = {}
    for g, sigma in enumerate(maps):
        if g == group.identity:
            continue
        diff = sigma(E.uniformizer) - E.uniformizer
        v = E.val(diff)
        if v is None:
            raise PrecisionError(
                "conjugate of the uniformizer is too close to it at working precision")
        breaks[g] = v
    if not breaks:
        return group, RamificationData(group, ((group.identity,),))

    chain = []
    i = 0
    while True:
        level = tuple(sorted([group.identity] + [g for g, v in breaks.items() if v >= i + 1]))
        chain.append(level)
        if len(level) == 1:
            break
        i += 1
    data = RamificationData(group, chain)
    if len(data.chain[0]) != E.e:
        raise ValidationError("G_0 does not have order e; extension data inconsistent")
    return group, data


def _check_equivariant(big: GLattice, small: GLattice, matrix):
    """matrix: small -> big must satisfy rho_big(g) m = m rho_small(g)."""
    for g in range(big.group.order):
        left = mat_int_mul(big.act(g), matrix)
        right = mat_int_mul(matrix, small.act(g))
        if left != right:
            raise ValidationError("map is not equivariant")


def isogeny_invariance_check(L1: GLattice, L2: GLattice, injection,
                             R: RamificationData) -> bool:
    """Executable witness that a(-) only depends on the rational representation.

    ``injection``: L1.rank x L2.rank integer matrix embedding L2 into L1 with
    finite index.  Always returns True for valid input.
    """
    if L1.group is not L2.group:
        raise ValidationError("lattices use different groups")
    inj = [list(r) for r in injection]
    if len(inj) != L1.rank or any(len(r) != L2.rank for r in inj):
        raise ValidationError("injection has the wrong shape")
    if L1.rank != L2.rank or int_det(inj) == 0:
        raise ValidationError("injection must have finite index (nonzero determinant)")
    _check_equivariant(L1, L2, inj)
    return artin_conductor(L1, R) == artin_conductor(L2, R)


def additivity_from_formula(sub: GLattice, total: GLattice, quotient: GLattice,
                            R: RamificationData, injection, surjection) -> Fraction:
    """(1/2)(a(total) - a(sub) - a(quotient)) for a rationally exact triple.

    Always 0: the Artin conductor is additive on short exact sequences of
    rational representations.  The maps are validated, not trusted.
    """
    inj = [list(r) for r in injection]
    surj = [list(r) for r in surjection]
    if len(inj) != total.rank or any(len(r) != sub.rank for r in inj):
        raise ValidationError("injection has the wrong shape")
    if len(surj) != quotient.rank or any(len(r) != total.rank for r in surj):
        raise ValidationError("surjection has the wrong shape")
    if sub.rank + quotient.rank != total.rank:
        raise ValidationError("ranks are not additive; triple cannot be exact")
    if int_rank(inj) != sub.rank or int_rank(surj) != quotient.rank:
        raise ValidationError("maps do not have full rank")
    if any(any(x for x in row) for row in mat_int_mul(surj, inj)):
        raise ValidationError("composite of the given maps is nonzero")
    _check_equivariant(total, sub, inj)
    _check_equivariant(quotient, total, surj)
    a_t = artin_conductor(total, R)
    a_s = artin_conductor(sub, R)
    a_q = artin_conductor(quotient, R)
    return (a_t - a_s - a_q) / 2
