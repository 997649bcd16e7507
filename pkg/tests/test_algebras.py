import pytest

from conductor_workbench.algebras import (ExtensionData, RingMap, algebra_norm,
                                          algebra_valuation, discriminant_of_algebra,
                                          embeddings_matrix, monogenic_algebra,
                                          polynomial_discriminant, tower_algebra,
                                          tower_compositum, trivial_extension)
from conductor_workbench.errors import ValidationError
from conductor_workbench.series import dvr_valuation
from conductor_workbench.worked_examples import (compositum_eisenstein_presentation,
                                                 compositum_extension,
                                                 quadratic_family_extension,
                                                 standard_base)


def test_monogenic_reduction_char2(f2t_base):
    # x^2 = pi x + t: the reduction applies literal negation, which in
    # characteristic 2 is the identity
    t = f2t_base.from_field(f2t_base.field.t)
    A = monogenic_algebra(f2t_base, [t, f2t_base.pi(), f2t_base.one()], "x")
    x = A.generator_element(0)
    sq = x * x
    assert sq.coords[0] == t
    assert sq.coords[1] == f2t_base.pi()


def test_monogenic_rejects_non_monic(f2t_base):
    with pytest.raises(ValidationError):
        monogenic_algebra(f2t_base, [f2t_base.one(), f2t_base.pi(2)])


def test_monogenic_degree_one_is_base(f2t_base):
    A = monogenic_algebra(f2t_base, [f2t_base.pi(), f2t_base.one()])
    assert A.rank == 1


def test_norm_examples(f2t_base, counterexample):
    # scalar u in a rank-n algebra has norm u^n
    A = counterexample.L.algebra
    u = f2t_base.one() + f2t_base.pi()
    assert algebra_norm(A.from_base(u)) == u ** 4
    # multiplication matrix of a1 in K1 is [[0, t],[1, pi]] with determinant t
    K1 = counterexample.K1
    a1 = K1.algebra.generator_element(0)
    t = f2t_base.from_field(f2t_base.field.t)
    assert algebra_norm(a1) == t
    # the uniformizer of L has norm valuation f * v_L = 2
    nv = algebra_norm(counterexample.L.uniformizer).valuation()
    assert nv == 2


def test_norm_multiplicative(counterexample):
    L = counterexample.L
    a1 = L.algebra.generator_element(0)
    a2 = L.algebra.generator_element(1)
    x = a1 + L.algebra.from_base(L.base.pi())
    y = a1 * a2 + L.algebra.one()
    lhs = algebra_norm(x * y)
    rhs = algebra_norm(x) * algebra_norm(y)
    assert (lhs - rhs).is_zero_at_precision()


def test_algebra_valuation_examples(counterexample):
    L = counterexample.L
    pi = L.algebra.from_base(L.base.pi())
    assert algebra_valuation(pi, L) == 2
    assert algebra_valuation(L.algebra.generator_element(0), L) == 0
    assert algebra_valuation(L.uniformizer, L) == 1


def test_discriminant_examples(counterexample, f2t_base):
    assert discriminant_of_algebra(counterexample.K1.algebra).valuation() == 2
    assert discriminant_of_algebra(counterexample.F.algebra).valuation() == 4
    assert discriminant_of_algebra(counterexample.L.algebra).valuation() == 12


def test_monogenic_discriminant_matches_resultant(f2t_base, f3_base):
    t = f2t_base.from_field(f2t_base.field.t)
    polys = [
        (f2t_base, [t, f2t_base.pi(), f2t_base.one()]),
        (f2t_base, [f2t_base.pi(2) * t + t, f2t_base.pi(2), f2t_base.one()]),
        (f3_base, [-f3_base.pi(), f3_base.zero(), f3_base.one()]),
        (f3_base, [f3_base.pi(), f3_base.one(), f3_base.pi(3), f3_base.one()]),
    ]
    for base, coeffs in polys:
        A = monogenic_algebra(base, coeffs)
        trace_form = discriminant_of_algebra(A)
        poly_disc = polynomial_discriminant(coeffs, base)
        assert (trace_form - poly_disc).is_zero_at_precision()


def test_embeddings_matrix_golden_rows(counterexample):
    # rows are (1, a1, a2, d), (1, a1+pi, a2, d+pi a2), (1, a1, a2+pi^2,
    # d+pi^2 a1), (1, a1+pi, a2+pi^2, d+pi^2 a1+pi a2+pi^3)
    L = counterexample.L
    A = L.algebra
    base = L.base
    pi = A.from_base(base.pi())
    pi2 = A.from_base(base.pi(2))
    pi3 = A.from_base(base.pi(3))
    a1 = A.generator_element(0)
    a2 = A.generator_element(1)
    d = a1 * a2
    M = embeddings_matrix(L, L)
    expected = [
        [A.one(), a1, a2, d],
        [A.one(), a1 + pi, a2, d + pi * a2],
        [A.one(), a1, a2 + pi2, d + pi2 * a1],
        [A.one(), a1 + pi, a2 + pi2, d + pi2 * a1 + pi * a2 + pi3],
    ]
    for i in range(4):
        for j in range(4):
            assert (M.entry(i, j) - expected[i][j]).is_zero_at_precision(), (i, j)


def test_embeddings_matrix_trivial_and_sub(counterexample):
    triv = counterexample.trivial
    M = embeddings_matrix(triv, triv)
    assert (M.rows, M.cols) == (1, 1)
    assert (M.entry(0, 0) - triv.one()).is_zero_at_precision()

    K1, L = counterexample.K1, counterexample.L
    MK = embeddings_matrix(K1, L)
    a1 = L.algebra.generator_element(0)
    pi = L.algebra.from_base(L.base.pi())
    assert (MK.entry(0, 1) - a1).is_zero_at_precision()
    assert (MK.entry(1, 1) - (a1 + pi)).is_zero_at_precision()


def test_square_of_embedding_determinant_is_discriminant(counterexample):
    from conductor_workbench.linalg import matrix_det
    for E, M in [(counterexample.K1, counterexample.K1),
                 (counterexample.K1, counterexample.L),
                 (counterexample.F, counterexample.F),
                 (counterexample.L, counterexample.L)]:
        mat = embeddings_matrix(E, M)
        det = matrix_det(mat.row_lists(), M.zero(), M.one())
        v_det = M.val(det)
        v_disc = discriminant_of_algebra(E.algebra).valuation()
        assert 2 * v_det == M.e * v_disc, (E.name, M.name)


def test_tower_compositum_eisenstein(f2t_base, counterexample):
    # gamma = a1 + a2 satisfies the Eisenstein polynomial over K1, rank 4,
    # e = f = 2, and the alternative presentation has the same discriminant
    LE = compositum_eisenstein_presentation(f2t_base)
    assert LE.rank == 4 and LE.e == 2 and LE.f == 2
    assert algebra_valuation(LE.uniformizer, LE) == 1
    assert discriminant_of_algebra(LE.algebra).valuation() == 12


def test_tower_compositum_helper(counterexample):
    K1 = counterexample.K1
    A1 = K1.algebra
    base = K1.base
    a1 = A1.generator_element(0)
    poly = [a1 * base.pi() + a1 * base.pi(2), A1.from_base(base.pi(2)), A1.one()]
    L = tower_compositum(
        K1, poly, label="g", uniformizer="g", e=2, f=2,
        embeddings=[["a1", "g"], ["a1", "g + pi^2"],
                    ["a1 + pi", "g + pi"], ["a1 + pi", "g + pi + pi^2"]],
        name="L_expr")
    assert L.rank == 4
    assert algebra_valuation(L.uniformizer, L) == 1


def test_tower_degree_one_returns_inner(counterexample):
    K1 = counterexample.K1
    same = tower_compositum(K1, [K1.algebra.generator_element(0), K1.algebra.one()],
                            uniformizer="pi", e=1, f=2, embeddings=[])
    assert same is K1


def test_invalid_embedding_rejected(f2t_base):
    t = f2t_base.from_field(f2t_base.field.t)
    A = monogenic_algebra(f2t_base, [t, f2t_base.pi(), f2t_base.one()], "a")
    a = A.generator_element(0)
    good = RingMap(A, A, [a])
    bad = RingMap(A, A, [a + A.one()])  # a+1 is not a root
    with pytest.raises(ValidationError, match="non-root"):
        ExtensionData(A, A.from_base(f2t_base.pi()), 1, 2, (good, bad))


def test_ef_mismatch_rejected(f2t_base):
    t = f2t_base.from_field(f2t_base.field.t)
    A = monogenic_algebra(f2t_base, [t, f2t_base.pi(), f2t_base.one()], "a")
    a = A.generator_element(0)
    maps = (RingMap(A, A, [a]), RingMap(A, A, [a + f2t_base.pi()]))
    with pytest.raises(ValidationError, match="e\\*f"):
        ExtensionData(A, A.from_base(f2t_base.pi()), 2, 2, maps)


def test_residue_degree_validated(f2t_base):
    t = f2t_base.from_field(f2t_base.field.t)
    A = monogenic_algebra(f2t_base, [t, f2t_base.pi(), f2t_base.one()], "a")
    a = A.generator_element(0)
    maps = (RingMap(A, A, [a]), RingMap(A, A, [a + f2t_base.pi()]))
    with pytest.raises(ValidationError, match="residue degree|valuation"):
        ExtensionData(A, A.from_base(f2t_base.pi()), 2, 1, maps)


def test_structure_constant_checks(f2t_base):
    from conductor_workbench.algebras import FiniteFlatAlgebra
    one, zero, pi = f2t_base.one(), f2t_base.zero(), f2t_base.pi()
    # b1*b1 = b1 requires b0 coefficient bookkeeping; break symmetry on purpose
    table = [[(one, zero), (zero, one)], [(pi, zero), (zero, zero)]]
    A = FiniteFlatAlgebra(f2t_base, ("1", "x"), table, ((0,), (1,)), ())
    with pytest.raises(ValidationError, match="symmetric"):
        A.validate()


def test_extension_division(counterexample):
    L = counterexample.L
    gam = L.uniformizer
    pi = L.algebra.from_base(L.base.pi())
    q = L.div(pi * gam, gam)
    assert (q - pi).is_zero_at_precision()
    from conductor_workbench.errors import NotDivisibleError
    with pytest.raises(NotDivisibleError):
        L.div(gam, pi)  # v_L(gamma)=1 < v_L(pi)=2
