"""Finite flat algebras over the base ring, presented by structure constants.

An extension ring O_L of the base O_K is a free module with a distinguished
monomial basis in a set of generators, a multiplication table, a designated
uniformizer, ramification data (e, f) and an explicit list of embeddings given
by generator images.  Uniformizers and embeddings are caller-supplied and
validated here, never root-found: in the wildly ramified residue
characteristic 2 cases this package is built for, Hensel lifting is not
available, but all conjugates are writable in closed form (the roots of a
quadratic differ by its linear coefficient).
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import NotDivisibleError, PrecisionError, ValidationError
from .linalg import DVRMatrix, matrix_det
from .series import BaseDVR, LocalRingElement


class FiniteFlatAlgebra:
    """Commutative O_K-algebra, free of finite rank, with basis element 0 = 1."""

    def __init__(self, base: BaseDVR, labels, table, monomials, generators):
        self.base = base
        self.rank = len(labels)
        self.labels = tuple(labels)
        self.table = tuple(tuple(tuple(vec) for vec in row) for row in table)
        self.monomials = tuple(tuple(m) for m in monomials)
        self.generators = tuple(generators)  # (name, ascending poly coeffs as elements here)
        if len(self.table) != self.rank or any(len(r) != self.rank for r in self.table):
            raise ValidationError("structure constant table must be rank x rank")

    # -- elements ------------------------------------------------------------

    def element(self, coords) -> "AlgebraElement":
        coords = tuple(coords)
        if len(coords) != self.rank:
            raise ValidationError(f"element needs {self.rank} coordinates")
        return AlgebraElement(self, coords)

    def zero(self):
        return self.element([self.base.zero()] * self.rank)

    def one(self):
        z = self.base.zero()
        return self.element([self.base.one()] + [z] * (self.rank - 1))

    def basis_element(self, i):
        z = self.base.zero()
        return self.element([self.base.one() if j == i else z for j in range(self.rank)])

    def from_base(self, c) -> "AlgebraElement":
        if isinstance(c, int):
            c = self.base.from_int(c)
        z = self.base.zero()
        return self.element([c] + [z] * (self.rank - 1))

    def generator_element(self, k) -> "AlgebraElement":
        target = tuple(1 if g == k else 0 for g in range(len(self.generators)))
        for i, mono in enumerate(self.monomials):
            if mono == target:
                return self.basis_element(i)
        raise ValidationError("generator is not a basis monomial")

    def coerce(self, x) -> "AlgebraElement":
        if isinstance(x, AlgebraElement):
            if x.algebra is not self:
                raise ValidationError("element belongs to a different algebra")
            return x
        if isinstance(x, (LocalRingElement, int)):
            return self.from_base(x)
        raise ValidationError(f"cannot coerce {type(x).__name__} into the algebra")

    # -- structure checks ------------------------------------------------------

    def validate(self):
        """Check commutativity, associativity and the unit axiom at working precision."""
        n = self.rank
        for i in range(n):
            for j in range(i):
                if any(not (a - b).is_zero_at_precision()
                       for a, b in zip(self.table[i][j], self.table[j][i])):
                    raise ValidationError(f"structure constants not symmetric at ({i},{j})")
        one = self.one()
        for j in range(n):
            bj = self.basis_element(j)
            if not (one * bj - bj).is_zero_at_precision():
                raise ValidationError("basis element 0 is not a multiplicative identity")
        for i in range(n):
            bi = self.basis_element(i)
            for j in range(i, n):
                bj = self.basis_element(j)
                ij = bi * bj
                for k in range(n):
                    bk = self.basis_element(k)
                    if not ((ij * bk) - (bi * (bj * bk))).is_zero_at_precision():
                        raise ValidationError(
                            f"associativity fails on basis triple ({i},{j},{k})")
        return True

    def multiplication_matrix(self, x) -> list:
        """Rows of the matrix of y -> x*y in the distinguished basis."""
        x = self.coerce(x)
        cols = [(x * self.basis_element(j)).coords for j in range(self.rank)]
        return [[cols[j][i] for j in range(self.rank)] for i in range(self.rank)]

    def trace(self, x) -> LocalRingElement:
        x = self.coerce(x)
        acc = self.base.zero()
        for j in range(self.rank):
            acc = acc + (x * self.basis_element(j)).coords[j]
        return acc

    def norm(self, x) -> LocalRingElement:
        rows = self.multiplication_matrix(x)
        return matrix_det(rows, self.base.zero(), self.base.one())

    def __repr__(self):
        return f"FiniteFlatAlgebra(rank={self.rank}, basis={self.labels})"


class AlgebraElement:
    __slots__ = ("algebra", "coords")

    def __init__(self, algebra, coords):
        self.algebra = algebra
        self.coords = tuple(coords)

    def _binop_other(self, other):
        if isinstance(other, (LocalRingElement, int)):
            return self.algebra.from_base(other)
        if isinstance(other, AlgebraElement):
            if other.algebra is not self.algebra:
                raise ValidationError("elements belong to different algebras")
            return other
        return None

    def __add__(self, other):
        other = self._binop_other(other)
        if other is None:
            return NotImplemented
        return AlgebraElement(self.algebra, tuple(a + b for a, b in zip(self.coords, other.coords)))

    __radd__ = __add__

    def __neg__(self):
        return AlgebraElement(self.algebra, tuple(-a for a in self.coords))

    def __sub__(self, other):
        other = self._binop_other(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (LocalRingElement, int)):
            if isinstance(other, int):
                other = self.algebra.base.from_int(other)
            return AlgebraElement(self.algebra, tuple(other * a for a in self.coords))
        if not isinstance(other, AlgebraElement):
            return NotImplemented
        if other.algebra is not self.algebra:
            raise ValidationError("elements belong to different algebras")
        A = self.algebra
        out = [A.base.zero()] * A.rank
        for i, xi in enumerate(self.coords):
            if xi.is_exact_zero():
                continue
            for j, yj in enumerate(other.coords):
                if yj.is_exact_zero():
                    continue
                c = xi * yj
                vec = A.table[i][j]
                for k in range(A.rank):
                    if not vec[k].is_exact_zero():
                        out[k] = out[k] + c * vec[k]
        return AlgebraElement(A, tuple(out))

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            raise ValidationError("negative powers are not algebra elements")
        out = self.algebra.one()
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def is_exact_zero(self):
        return all(c.is_exact_zero() for c in self.coords)

    def is_zero_at_precision(self):
        return all(c.is_zero_at_precision() for c in self.coords)

    def __eq__(self, other):
        return (isinstance(other, AlgebraElement) and other.algebra is self.algebra
                and other.coords == self.coords)

    def __hash__(self):
        return hash((id(self.algebra), self.coords))

    def render(self):
        A = self.algebra
        terms = []
        for i, c in enumerate(self.coords):
            if c.is_zero_at_precision() and c.prec is None:
                continue
            body = c.render()
            if i == 0:
                terms.append(body)
            elif body == "1":
                terms.append(A.labels[i])
            else:
                if " + " in body:
                    body = f"({body})"
                terms.append(f"{body}*{A.labels[i]}")
        return " + ".join(terms) if terms else "0"

    def __repr__(self):
        return self.render()


# ---------------------------------------------------------------------------
# constructors


def monogenic_algebra(base: BaseDVR, poly, label: str = "x") -> FiniteFlatAlgebra:
    """O_K[x]/(f) for a monic polynomial f, with basis 1, x, ..., x^(n-1).

    ``poly`` lists the coefficients in ascending order, constant term first;
    the leading coefficient must be exactly 1.  Negation in the reduction
    x^n = -(c_0 + ... + c_{n-1} x^{n-1}) is applied through the coefficient
    ring, so residue characteristic 2 needs no special casing.
    """

    coeffs = [base.from_int(c) if isinstance(c, int) else c for c in poly]
    n = len(coeffs) - 1
    if n < 1:
        raise ValidationError("polynomial must have degree >= 1")
    if not (coeffs[-1] - base.one()).is_exact_zero():
        raise ValidationError("polynomial must be monic")

    zero = base.zero()
    if n == 1:
        # the base ring itself, with x identified with -c_0
        algebra = FiniteFlatAlgebra(base, ("1",), (((base.one(),),),), ((),), ())
        return algebra

    def xtimes(vec):
        top = vec[n - 1]
        out = [zero] + list(vec[:n - 1])
        if not top.is_exact_zero():
            for k in range(n):
                out[k] = out[k] - top * coeffs[k]
        return tuple(out)

    pows = [tuple(base.one() if k == i else zero for k in range(n)) for i in range(n)]
    for _ in range(n - 1):
        pows.append(xtimes(pows[-1]))

    table = [[pows[i + j] for j in range(n)] for i in range(n)]
    labels = ["1"] + [label if i == 1 else f"{label}^{i}" for i in range(1, n)]
    monomials = [(i,) for i in range(n)]
    algebra = FiniteFlatAlgebra(base, labels, table, monomials, ())
    lifted = tuple(algebra.from_base(c) for c in coeffs)
    algebra.generators = ((label, lifted),)
    return algebra


def tower_algebra(inner: FiniteFlatAlgebra, poly, label: str = "y") -> FiniteFlatAlgebra:
    """inner[y]/(g) for monic g with coefficients in ``inner``.

    The basis is the set of products b_i * y^j of the inner basis with powers
    of the new generator; a degree-1 polynomial returns ``inner`` unchanged.
    """

    base = inner.base
    coeffs = [inner.coerce(c) for c in poly]
    d = len(coeffs) - 1
    if d < 1:
        raise ValidationError("polynomial must have degree >= 1")
    if not (coeffs[-1] - inner.one()).is_exact_zero():
        raise ValidationError("polynomial must be monic")
    if d == 1:
        return inner

    n1 = inner.rank
    n = n1 * d
    izero = inner.zero()

    def yshift(vec):
        # vec: list of d inner elements (coefficients of y^j); multiply by y
        top = vec[d - 1]
        out = [izero] + list(vec[:d - 1])
        if not top.is_exact_zero():
            for k in range(d):
                out[k] = out[k] - top * coeffs[k]
        return out

    ypows = [[inner.one() if j == m else izero for j in range(d)] for m in range(d)]
    for _ in range(d - 1):
        ypows.append(yshift(ypows[-1]))

    def flat(i, j):
        return i + n1 * j

    table = [[None] * n for _ in range(n)]
    for i in range(n1):
        for j in range(d):
            for k in range(n1):
                prod_inner = inner.element(inner.table[i][k])
                for l in range(d):
                    vec = [base.zero()] * n
                    for jj, h in enumerate(ypows[j + l]):
                        if h.is_exact_zero():
                            continue
                        contrib = prod_inner * h
                        for ii in range(n1):
                            vec[flat(ii, jj)] = vec[flat(ii, jj)] + contrib.coords[ii]
                    table[flat(i, j)][flat(k, l)] = tuple(vec)

    labels = []
    monomials = []
    for j in range(d):
        for i in range(n1):
            inner_label = inner.labels[i]
            if j == 0:
                lab = inner_label
            else:
                ypart = label if j == 1 else f"{label}^{j}"
                lab = ypart if inner_label == "1" else f"{inner_label}*{ypart}"
            labels.append(lab)
            monomials.append(inner.monomials[i] + (j,))

    algebra = FiniteFlatAlgebra(base, labels, table, monomials, ())

    def lift(x: AlgebraElement) -> AlgebraElement:
        vec = [base.zero()] * n
        for i in range(n1):
            vec[flat(i, 0)] = x.coords[i]
        return algebra.element(vec)

    gens = [(name, tuple(lift(c) for c in cs)) for name, cs in inner.generators]
    gens.append((label, tuple(lift(c) for c in coeffs)))
    algebra.generators = tuple(gens)
    return algebra


# ---------------------------------------------------------------------------
# ring maps given by generator images


class RingMap:
    """An O_K-algebra map determined by images of the source's generators."""

    def __init__(self, source: FiniteFlatAlgebra, target: FiniteFlatAlgebra, gen_images):
        self.source = source
        self.target = target
        self.gen_images = tuple(target.coerce(g) for g in gen_images)
        if len(self.gen_images) != len(source.generators):
            raise ValidationError("need one image per generator")
        images = []
        for mono in source.monomials:
            acc = target.one()
            for g, e in zip(self.gen_images, mono):
                if e:
                    acc = acc * g ** e
            images.append(acc)
        self.basis_images = tuple(images)

    def __call__(self, x) -> AlgebraElement:
        x = self.source.coerce(x)
        acc = self.target.zero()
        for c, img in zip(x.coords, self.basis_images):
            if not c.is_exact_zero():
                acc = acc + img * c
        return acc

    def compose(self, inner: "RingMap") -> "RingMap":
        if inner.target is not self.source:
            raise ValidationError("maps are not composable")
        return RingMap(inner.source, self.target, [self(g) for g in inner.gen_images])

    def agrees_with(self, other: "RingMap") -> bool:
        return all((a - b).is_zero_at_precision()
                   for a, b in zip(self.basis_images, other.basis_images))

    @classmethod
    def identity(cls, algebra):
        return cls(algebra, algebra,
                   [algebra.generator_element(k) for k in range(len(algebra.generators))])


def tower_inclusion(inner: FiniteFlatAlgebra, tower: FiniteFlatAlgebra) -> RingMap:
    """The canonical map inner -> tower for a tower built over ``inner``."""
    k = len(inner.generators)
    if tuple(g[0] for g in tower.generators[:k]) != tuple(g[0] for g in inner.generators):
        raise ValidationError("tower does not extend the given inner algebra")
    return RingMap(inner, tower, [tower.generator_element(i) for i in range(k)])


# ---------------------------------------------------------------------------
# extensions with valuation data


class ExtensionData:
    """A finite flat extension with uniformizer, (e, f) and validated embeddings.

    Maximality of the presented order is an input assumption (recorded in
    ``assumption_notes``), taken from the construction of the data rather than
    re-proven here.
    """

    def __init__(self, algebra: FiniteFlatAlgebra, uniformizer, e: int, f: int,
                 embeddings, *, name: str = "E", tower_base: "ExtensionData | None" = None,
                 assume_maximal: bool = True, assumption_notes=(), validate: bool = True):
        self.algebra = algebra
        self.uniformizer = algebra.coerce(uniformizer)
        self.e = e
        self.f = f
        self.embeddings = tuple(embeddings)
        self.name = name
        self.tower_base = tower_base
        self.assume_maximal = assume_maximal
        self.assumption_notes = tuple(assumption_notes)
        if validate:
            self.validate()

    @property
    def rank(self):
        return self.algebra.rank

    @property
    def base(self):
        return self.algebra.base

    # -- ring-with-valuation protocol ----------------------------------------

    def zero(self):
        return self.algebra.zero()

    def one(self):
        return self.algebra.one()

    def is_exact_zero(self, x):
        return x.is_exact_zero()

    def render(self, x):
        return x.render()

    def val(self, x):
        """Valuation normalized so the designated uniformizer has valuation 1."""
        x = self.algebra.coerce(x)
        nv = self.algebra.norm(x).valuation()
        if nv is None:
            return None
        if nv % self.f:
            raise ValidationError(
                "norm valuation is not divisible by the residue degree; "
                "the extension data is inconsistent")
        return nv // self.f

    def div(self, x, y):
        """Exact division x/y inside the algebra (solve y*z = x coordinatewise)."""
        x = self.algebra.coerce(x)
        y = self.algebra.coerce(y)
        A = self.algebra
        base = A.base
        rows = A.multiplication_matrix(y)
        det = matrix_det(rows, base.zero(), base.one())
        if det.valuation() is None:
            if det.is_exact_zero():
                raise ZeroDivisionError("division by a zero divisor")
            raise PrecisionError("divisor norm vanishes at working precision")
        n = A.rank
        # z = adj(M_y) x / det(M_y); integrality of every coordinate is exactly
        # divisibility of x by y in the algebra
        cof_cols = []
        for j in range(n):
            col = []
            for i in range(n):
                minor = [[rows[r][c] for c in range(n) if c != i] for r in range(n) if r != j]
                m = matrix_det(minor, base.zero(), base.one())
                col.append(-m if (i + j) % 2 else m)
            cof_cols.append(col)
        # adj[i][j] = cofactor(j, i); compute adj @ x.coords
        out = []
        for i in range(n):
            acc = base.zero()
            for j in range(n):
                acc = acc + cof_cols[j][i] * x.coords[j]
            try:
                out.append(acc.divide(det))
            except NotDivisibleError:
                raise NotDivisibleError(
                    "element is not divisible in the extension ring") from None
        return A.element(out)

    # -- validation -----------------------------------------------------------

    def validate(self):
        A = self.algebra
        A.validate()
        if self.e < 1 or self.f < 1 or self.e * self.f != A.rank:
            raise ValidationError(
                f"e*f = {self.e}*{self.f} does not match rank {A.rank}")
        if A.rank > 1:
            v = self.val(self.uniformizer)
            if v is None:
                raise PrecisionError(
                    "uniformizer valuation exceeds the working precision; increase it")
            if v != 1:
                raise ValidationError(
                    f"claimed uniformizer has valuation {v}, expected 1")
            self._check_residue_degree()
        if len(self.embeddings) != A.rank:
            raise ValidationError(
                f"{len(self.embeddings)} embeddings supplied, rank is {A.rank}")
        for idx, sigma in enumerate(self.embeddings):
            self._check_embedding_roots(idx, sigma)
        for i in range(len(self.embeddings)):
            for j in range(i):
                if self.embeddings[i].agrees_with(self.embeddings[j]):
                    diff_exact = all(
                        (a - b).is_exact_zero() for a, b in zip(
                            self.embeddings[i].basis_images,
                            self.embeddings[j].basis_images))
                    if diff_exact:
                        raise ValidationError(f"embeddings {j} and {i} coincide")
                    raise PrecisionError(
                        f"embeddings {j} and {i} are indistinguishable at the "
                        "working precision")
        return True

    def _check_embedding_roots(self, idx, sigma: RingMap):
        if sigma.source is not self.algebra:
            raise ValidationError(f"embedding {idx} has the wrong source")
        for g, (name, poly) in enumerate(self.algebra.generators):
            img = sigma.gen_images[g]
            acc = sigma.target.zero()
            for k, c in enumerate(poly):
                acc = acc + sigma(c) * img ** k
            if not acc.is_zero_at_precision():
                raise ValidationError(
                    f"embedding {idx} sends generator {name} to a non-root "
                    f"(residual {acc.render()})")

    def _check_residue_degree(self):
        """dim_kappa of algebra/(uniformizer) must equal f."""
        A = self.algebra
        K = A.base.field
        rows = A.multiplication_matrix(self.uniformizer)
        red = [[e.coeffs[0] for e in row] for row in rows]
        rank = _field_rank(red, K)
        if A.rank - rank != self.f:
            raise ValidationError(
                f"residue degree check failed: quotient dimension {A.rank - rank}, "
                f"claimed f = {self.f}")

    def __repr__(self):
        return f"ExtensionData({self.name}: rank {self.rank}, e={self.e}, f={self.f})"


def _field_rank(rows, K):
    rows = [list(r) for r in rows]
    m = len(rows)
    n = len(rows[0]) if m else 0
    rank = 0
    col = 0
    while rank < m and col < n:
        piv = None
        for i in range(rank, m):
            if not K.is_zero(rows[i][col]):
                piv = i
                break
        if piv is None:
            col += 1
            continue
        rows[rank], rows[piv] = rows[piv], rows[rank]
        inv = K.inv(rows[rank][col])
        rows[rank] = [K.mul(inv, x) for x in rows[rank]]
        for i in range(m):
            if i != rank and not K.is_zero(rows[i][col]):
                factor = rows[i][col]
                rows[i] = [K.sub(a, K.mul(factor, b)) for a, b in zip(rows[i], rows[rank])]
        rank += 1
        col += 1
    return rank


def tower_compositum(inner: ExtensionData, polynomial, *, uniformizer, e: int, f: int,
                     embeddings, name: str = "E", label: str = "y",
                     assume_maximal: bool = True, assumption_notes=()) -> ExtensionData:
    """A validated extension tower over an existing one.

    ``polynomial`` is monic with coefficients in the inner algebra.  The
    uniformizer and the embedding generator-images are caller-supplied (as
    expression strings in the generator names, or as algebra elements) and are
    validated, never root-found: Hensel lifting is unavailable in the wildly
    ramified characteristic-2 situations this package exists for, but every
    conjugate is writable in closed form.  A degree-1 polynomial returns the
    inner extension unchanged.
    """
    algebra = tower_algebra(inner.algebra, polynomial, label)
    if algebra is inner.algebra:
        return inner
    from .workbench import parse_expression, _algebra_env

    env = _algebra_env(algebra, algebra.base)

    def resolve(x, where):
        if isinstance(x, str):
            x = parse_expression(x, env, where)
        return algebra.coerce(x)

    maps = []
    for k, images in enumerate(embeddings):
        if isinstance(images, RingMap):
            maps.append(images)
            continue
        maps.append(RingMap(algebra, algebra,
                            [resolve(im, f"embeddings[{k}]") for im in images]))
    return ExtensionData(algebra, resolve(uniformizer, "uniformizer"), e, f, maps,
                         name=name, tower_base=inner, assume_maximal=assume_maximal,
                         assumption_notes=tuple(assumption_notes))


def trivial_extension(base: BaseDVR, name: str = "K") -> ExtensionData:
    """The base ring seen as a rank-1 extension of itself."""
    algebra = FiniteFlatAlgebra(base, ("1",), (((base.one(),),),), ((),), ())
    ident = RingMap.identity(algebra)
    return ExtensionData(algebra, algebra.from_base(base.pi()), 1, 1, (ident,), name=name)


# ---------------------------------------------------------------------------
# spec-level operations


def algebra_norm(x: AlgebraElement) -> LocalRingElement:
    """Determinant of the multiplication-by-x matrix; multiplicative mod pi^N."""
    return x.algebra.norm(x)


def algebra_valuation(x, E: ExtensionData):
    """v_L(x), normalized so the uniformizer of E has valuation 1.

    Returns None when x is 0 at the working precision (valuation >= e*N is all
    that is known).
    """
    return E.val(x)


def discriminant_of_algebra(A: FiniteFlatAlgebra) -> LocalRingElement:
    """Determinant of the trace form matrix (Tr(b_i b_j))."""
    n = A.rank
    rows = []
    for i in range(n):
        bi = A.basis_element(i)
        rows.append([A.trace(bi * A.basis_element(j)) for j in range(n)])
    return matrix_det(rows, A.base.zero(), A.base.one())


def embeddings_of(E: ExtensionData, M: ExtensionData):
    """The rank-many embeddings E -> M, derived from E's own embedding data.

    When M was built as a tower over E the canonical inclusion is composed
    with E's self-embeddings; for M = E the self-embeddings are returned.
    """
    if M is E:
        return E.embeddings
    chain = []
    step = M
    while step is not None and step is not E:
        chain.append(step)
        step = step.tower_base
    if step is not E:
        raise ValidationError(
            f"no known inclusion of {E.name} into {M.name}; build M as a tower over E")
    incl = None
    lower = E.algebra
    for ext in reversed(chain):
        up = tower_inclusion(lower, ext.algebra)
        incl = up if incl is None else up.compose(incl)
        lower = ext.algebra
    return tuple(incl.compose(sigma) for sigma in E.embeddings)


def embeddings_matrix(E: ExtensionData, M: ExtensionData | None = None) -> DVRMatrix:
    """The matrix realizing O_E tensor O_M -> O_M^n: row i applies embedding i
    to E's basis."""
    M = E if M is None else M
    maps = embeddings_of(E, M)
    rows = [[sigma(E.algebra.basis_element(j)) for j in range(E.rank)] for sigma in maps]
    return DVRMatrix.from_rows(M, rows)


# ---------------------------------------------------------------------------
# polynomial discriminant (independent cross-check for monogenic algebras)


def polynomial_derivative(coeffs, base: BaseDVR):
    return [base.from_int(k) * coeffs[k] for k in range(1, len(coeffs))]


def _exact_degree(coeffs):
    for d in range(len(coeffs) - 1, -1, -1):
        c = coeffs[d]
        if c.is_exact_zero():
            continue
        if c.is_zero_at_precision():
            raise PrecisionError("polynomial degree is ambiguous at working precision")
        return d
    return -1


def polynomial_resultant(f, g, base: BaseDVR) -> LocalRingElement:
    """Res(f, g) via the Sylvester determinant, using exact degrees."""
    df, dg = _exact_degree(f), _exact_degree(g)
    if df < 0 or dg < 0:
        return base.zero()
    if df == 0 and dg == 0:
        return base.one()
    size = df + dg
    zero = base.zero()
    rows = []
    for i in range(dg):
        row = [zero] * size
        for k in range(df + 1):
            row[i + k] = f[df - k]
        rows.append(row)
    for i in range(df):
        row = [zero] * size
        for k in range(dg + 1):
            row[i + k] = g[dg - k]
        rows.append(row)
    return matrix_det(rows, zero, base.one())


def polynomial_discriminant(coeffs, base: BaseDVR) -> LocalRingElement:
    """disc(f) = (-1)^(n(n-1)/2) Res(f, f') for monic f."""
    n = _exact_degree(coeffs)
    res = polynomial_resultant(coeffs, polynomial_derivative(coeffs, base), base)
    return -res if (n * (n - 1) // 2) % 2 else res
