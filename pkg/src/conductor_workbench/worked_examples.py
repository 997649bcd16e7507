"""Built-in extension and lattice data for the bundled example suites.

The main fixture lives over kappa = F_2(t): the element c = t has residue not
a square, which is all the quadratic family X^2 + pi^i X + c needs.  K_i is
unramified of residue degree 2 (the residue extension is inseparable), the
compositum L = K_1 K_2 has e = f = 2, and F is the subfield generated by
beta = pi*a1 + a2.  Uniformizers and all conjugates are written down in closed
form and validated; maximality of each presented order follows from the
irreducibility of the defining polynomial modulo pi (for the K_i and F) and
from the Eisenstein tower step for L, and is recorded as an assumption note.
"""

from __future__ import annotations

from dataclasses import dataclass

from .algebras import (ExtensionData, RingMap, monogenic_algebra, tower_algebra,
                       trivial_extension)
from .conductor import InducedTorusSpec, ResolutionSpec
from .errors import ValidationError
from .fields import PrimeField, RationalFunctionField
from .galois import FiniteGroup, GLattice, RamificationData
from .series import BaseDVR

MAXIMALITY_NOTE = ("assumed: the presented order is the full valuation ring "
                   "(defining polynomial irreducible modulo pi / Eisenstein tower step)")
SEPARABLE_CLOSURE_NOTE = ("residue field F_2(t) is not separably closed; the shipped "
                          "computations only use that t is not a residue square")


def standard_base(precision: int = 32) -> BaseDVR:
    """F_2(t)[[pi]] at the given precision."""
    return BaseDVR(RationalFunctionField(2), precision)


def quadratic_family_extension(base: BaseDVR, i: int, name: str | None = None) -> ExtensionData:
    """K_i = K[x]/(x^2 + pi^i x + t): unramified with inseparable residue step."""
    K = base.field
    if not isinstance(K, RationalFunctionField) or K.p != 2:
        raise ValidationError("the quadratic family lives over F_2(t)")
    t = base.from_field(K.t)
    poly = [t, base.pi(i), base.one()]
    A = monogenic_algebra(base, poly, f"a{i}")
    a = A.generator_element(0)
    embeddings = (RingMap(A, A, [a]), RingMap(A, A, [a + base.pi(i)]))
    return ExtensionData(A, A.from_base(base.pi()), 1, 2, embeddings,
                         name=name or f"K{i}",
                         assumption_notes=(MAXIMALITY_NOTE, SEPARABLE_CLOSURE_NOTE))


def beta_subfield_extension(base: BaseDVR, name: str = "F") -> ExtensionData:
    """F = K(beta) with beta = pi*a1 + a2, minimal polynomial x^2 + pi^2 x + (pi^2 t + t)."""
    K = base.field
    t = base.from_field(K.t)
    poly = [base.pi(2) * t + t, base.pi(2), base.one()]
    A = monogenic_algebra(base, poly, "b")
    b = A.generator_element(0)
    embeddings = (RingMap(A, A, [b]), RingMap(A, A, [b + base.pi(2)]))
    return ExtensionData(A, A.from_base(base.pi()), 1, 2, embeddings,
                         name=name,
                         assumption_notes=(MAXIMALITY_NOTE, SEPARABLE_CLOSURE_NOTE))


def compositum_extension(base: BaseDVR, K1: ExtensionData | None = None,
                         name: str = "L") -> ExtensionData:
    """L = K_1 K_2 with basis (1, a1, a2, a1*a2) and uniformizer a1 + a2."""
    K1 = K1 or quadratic_family_extension(base, 1)
    A1 = K1.algebra
    t = base.from_field(base.field.t)
    poly = [A1.from_base(t), A1.from_base(base.pi(2)), A1.one()]
    AL = tower_algebra(A1, poly, "a2")
    a1 = AL.generator_element(0)
    a2 = AL.generator_element(1)
    pi1 = AL.from_base(base.pi())
    pi2 = AL.from_base(base.pi(2))
    embeddings = tuple(
        RingMap(AL, AL, [a1 + pi1 if da else a1, a2 + pi2 if db else a2])
        for da, db in ((0, 0), (1, 0), (0, 1), (1, 1)))
    return ExtensionData(AL, a1 + a2, 2, 2, embeddings, name=name, tower_base=K1,
                         assumption_notes=(MAXIMALITY_NOTE, SEPARABLE_CLOSURE_NOTE))


def compositum_eisenstein_presentation(base: BaseDVR, K1: ExtensionData | None = None,
                                       name: str = "L_tower") -> ExtensionData:
    """The same ring presented as K_1[g]/(g^2 + pi^2 g + (pi + pi^2) a1).

    Here g = a1 + a2 is a root of an Eisenstein polynomial over K_1, which is
    what certifies that the order is the full valuation ring.
    """
    K1 = K1 or quadratic_family_extension(base, 1)
    A1 = K1.algebra
    a1 = A1.generator_element(0)
    pi = base.pi()
    poly = [a1 * pi + a1 * base.pi(2), A1.from_base(base.pi(2)), A1.one()]
    AE = tower_algebra(A1, poly, "g")
    a1E = AE.generator_element(0)
    g = AE.generator_element(1)
    pi1 = AE.from_base(pi)
    pi2 = AE.from_base(base.pi(2))
    embeddings = (
        RingMap(AE, AE, [a1E, g]),
        RingMap(AE, AE, [a1E, g + pi2]),
        RingMap(AE, AE, [a1E + pi1, g + pi1]),
        RingMap(AE, AE, [a1E + pi1, g + pi1 + pi2]),
    )
    return ExtensionData(AE, g, 2, 2, embeddings, name=name, tower_base=K1,
                         assumption_notes=(MAXIMALITY_NOTE, SEPARABLE_CLOSURE_NOTE))


# ---------------------------------------------------------------------------
# the quartic counterexample bundle


@dataclass(frozen=True)
class CounterexampleData:
    base: BaseDVR
    trivial: ExtensionData
    K1: ExtensionData
    K2: ExtensionData
    F: ExtensionData
    L: ExtensionData
    group: FiniteGroup
    character_lattice: GLattice         # rank 2, the non-split action
    sub_lattice: GLattice               # rank 1, sigma1 acts by -1
    quotient_lattice: GLattice          # rank 1, sigma2 acts by -1
    injection: tuple                    # sub -> total column
    surjection: tuple
    product_embedding: tuple            # sub (+) quotient -> total, finite index
    resolution: ResolutionSpec
    filtrations: dict


def quartic_counterexample(precision: int = 32) -> CounterexampleData:
    """All data for the non-additivity / isogeny-failure example over F_2(t)."""
    base = standard_base(precision)
    K1 = quadratic_family_extension(base, 1)
    K2 = quadratic_family_extension(base, 2)
    F = beta_subfield_extension(base)
    L = compositum_extension(base, K1)

    # Gal(L/K) as Klein four; element order matches L.embeddings:
    # 0 = id, 1 = sigma1 (moves a1), 2 = sigma2 (moves a2), 3 = sigma1 sigma2
    table = [[0, 1, 2, 3], [1, 0, 3, 2], [2, 3, 0, 1], [3, 2, 1, 0]]
    group = FiniteGroup(table, ("id", "s1", "s2", "s1s2"))

    ident = [[1, 0], [0, 1]]
    rho_s1 = [[-1, 1], [0, 1]]
    rho_s2 = [[1, -1], [0, -1]]
    rho_s12 = [[-1, 0], [0, -1]]
    character_lattice = GLattice(group, 2, [ident, rho_s1, rho_s2, rho_s12])
    sub_lattice = GLattice(group, 1, [[[1]], [[-1]], [[1]], [[-1]]])
    quotient_lattice = GLattice(group, 1, [[[1]], [[1]], [[-1]], [[-1]]])
    injection = ((1,), (0,))
    surjection = ((0, 1),)
    product_embedding = ((1, 1), (0, 2))  # columns (1,0) and (1,2), index 2

    resolution = ResolutionSpec(
        inner=InducedTorusSpec(F, "Res_F"),
        outer=InducedTorusSpec(L, "Res_L"),
        name="T",
        exactness_note=("assumed: the sequence of models induced by "
                        "0 -> Res_F Gm -> Res_L Gm -> T -> 0 is exact"),
        witness_lattice=character_lattice)

    full = (0, 1, 2, 3)
    filtrations = {
        "wild-two-steps": RamificationData(group, [full, full, (0,)]),
        "tame": RamificationData(group, [full, (0,)]),
        "mixed": RamificationData(group, [full, (0, 1), (0,)]),
    }
    return CounterexampleData(
        base=base, trivial=trivial_extension(base), K1=K1, K2=K2, F=F, L=L,
        group=group, character_lattice=character_lattice,
        sub_lattice=sub_lattice, quotient_lattice=quotient_lattice,
        injection=injection, surjection=surjection,
        product_embedding=product_embedding,
        resolution=resolution, filtrations=filtrations)


# ---------------------------------------------------------------------------
# generated pool of totally ramified Galois monogenic extensions


def tame_quadratic(p: int, unit: int, precision: int = 24) -> ExtensionData:
    """x^2 - u*pi over F_p[[pi]], p odd: tamely ramified, Galois via x -> -x."""
    if p == 2:
        raise ValidationError("tame quadratics need odd residue characteristic")
    base = BaseDVR(PrimeField(p), precision)
    u = base.from_int(unit)
    A = monogenic_algebra(base, [-(u * base.pi()), base.zero(), base.one()], "x")
    x = A.generator_element(0)
    embeddings = (RingMap(A, A, [x]), RingMap(A, A, [-x]))
    return ExtensionData(A, x, 2, 1, embeddings, name=f"tame2(p={p},u={unit})",
                         assumption_notes=(MAXIMALITY_NOTE,))


def wild_quadratic(base: BaseDVR, a: int, const_unit=None,
                   name: str | None = None) -> ExtensionData:
    """x^2 + pi^a x + pi*u over a characteristic-2 base: Eisenstein, roots differ by pi^a."""
    if base.field.characteristic != 2:
        raise ValidationError("this family needs residue characteristic 2")
    if a < 1:
        raise ValidationError("need a >= 1 for an Eisenstein polynomial")
    u = base.one() if const_unit is None else const_unit
    A = monogenic_algebra(base, [base.pi() * u, base.pi(a), base.one()], "x")
    x = A.generator_element(0)
    embeddings = (RingMap(A, A, [x]), RingMap(A, A, [x + base.pi(a)]))
    return ExtensionData(A, x, 2, 1, embeddings,
                         name=name or f"wild2(a={a})",
                         assumption_notes=(MAXIMALITY_NOTE,))


def tame_cyclic_quartic(p: int, unit: int, precision: int = 24) -> ExtensionData:
    """x^4 - u*pi built as a tower of two square roots; needs a 4th root of unity."""
    field = PrimeField(p)
    i4 = next((r for r in range(2, p) if (r * r) % p == p - 1), None)
    if i4 is None:
        raise ValidationError(f"F_{p} has no primitive 4th root of unity")
    base = BaseDVR(field, precision)
    u = base.from_int(unit)
    A1 = monogenic_algebra(base, [-(u * base.pi()), base.zero(), base.one()], "x")
    x1 = A1.generator_element(0)
    AT = tower_algebra(A1, [-x1, A1.zero(), A1.one()], "l")
    x = AT.generator_element(0)
    lam = AT.generator_element(1)
    embeddings = tuple(
        RingMap(AT, AT, [pow(i4, 2 * k, p) * x, pow(i4, k, p) * lam])
        for k in range(4))
    return ExtensionData(AT, lam, 4, 1, embeddings,
                         name=f"tame4(p={p},u={unit})",
                         assumption_notes=(MAXIMALITY_NOTE,))


def tame_cyclic_cubic(p: int, unit: int, precision: int = 24) -> ExtensionData:
    """x^3 - u*pi; needs a primitive cube root of unity in F_p."""
    field = PrimeField(p)
    z3 = next((r for r in range(2, p) if pow(r, 3, p) == 1 and r != 1), None)
    if z3 is None:
        raise ValidationError(f"F_{p} has no primitive cube root of unity")
    base = BaseDVR(field, precision)
    u = base.from_int(unit)
    A = monogenic_algebra(base, [-(u * base.pi()), base.zero(), base.zero(), base.one()], "x")
    x = A.generator_element(0)
    embeddings = tuple(RingMap(A, A, [pow(z3, k, p) * x]) for k in range(3))
    return ExtensionData(A, x, 3, 1, embeddings,
                         name=f"tame3(p={p},u={unit})",
                         assumption_notes=(MAXIMALITY_NOTE,))


def generated_extension_pool(precision: int = 24):
    """>= 20 totally ramified Galois monogenic extensions for the cross-checks:
    tame quadratics, wild (Eisenstein) quadratics in characteristic 2, and
    tame composites of degree up to 4 built as towers."""
    pool = []
    for p, units in ((3, (1, 2)), (5, (1, 2, 3)), (7, (1, 3)), (13, (1, 2))):
        for u in units:
            pool.append(tame_quadratic(p, u, precision))
    base2 = BaseDVR(PrimeField(2), precision)
    for a in (1, 2, 3, 4):
        pool.append(wild_quadratic(base2, a, name=f"wild2(F2,a={a})"))
    pool.append(wild_quadratic(base2, 2, const_unit=base2.one() + base2.pi(),
                               name="wild2(F2,a=2,u=1+pi)"))
    base2t = standard_base(precision)
    t = base2t.from_field(base2t.field.t)
    for a in (1, 2, 3):
        pool.append(wild_quadratic(base2t, a, name=f"wild2(F2(t),a={a})"))
    pool.append(wild_quadratic(base2t, 1, const_unit=t,
                               name="wild2(F2(t),a=1,u=t)"))
    for p, units in ((5, (1, 2)), (13, (1,))):
        for u in units:
            pool.append(tame_cyclic_quartic(p, u, precision))
    for p, u in ((7, 1), (13, 2)):
        pool.append(tame_cyclic_cubic(p, u, precision))
    return pool
