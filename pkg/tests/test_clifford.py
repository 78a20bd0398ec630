import random
from fractions import Fraction

import numpy as np
import pytest

from cliffinv.classify import enumerate_sdde
from cliffinv.clifford import (
    UnitaryMatrix,
    act,
    average,
    bfs_closure,
    check_xp_lemma,
    clifford_group,
    definition_generators,
    gen_dS,
    gen_hadamard,
    gen_perm,
    parabolic_generators,
    parabolic_subgroup,
    phase_gate,
    closure_generators,
    xp_lemma_sides,
)
from cliffinv.codes import LinearCode, index2_de_extensions, subcodes_with_allones
from cliffinv.cyclo import Cyclo8
from cliffinv.enumerators import ccwe, nu_direct
from cliffinv.errors import CapExceeded, SingularMatrix
from cliffinv.polynomial import ConjMonomial, ConjPolynomial

from _oracles import eval_poly, matrix_to_complex


def random_poly(rng, m, degree=(2, 1), terms=4):
    q = 1 << m
    out = {}
    for _ in range(terms):
        a = [0] * q
        b = [0] * q
        for _ in range(degree[0]):
            a[rng.randrange(q)] += 1
        for _ in range(degree[1]):
            b[rng.randrange(q)] += 1
        c = Cyclo8(*(Fraction(rng.randint(-3, 3)) for _ in range(4)))
        out[ConjMonomial(tuple(a), tuple(b))] = c
    return ConjPolynomial(m, degree, out)


@pytest.mark.parametrize("m", [1, 2])
def test_generators_are_unitary(m):
    for g in closure_generators(m) + definition_generators(m):
        assert g.is_unitary()


def test_hadamard_entries():
    h = gen_hadamard(1)
    assert h.entry(0, 0) * h.entry(0, 0) == Fraction(1, 2)
    assert h.entry(1, 1) == -h.entry(0, 0)
    assert (h @ h).is_identity()


def test_phase_gate_and_dS():
    assert phase_gate(1).entry(1, 1) == Cyclo8(0, 0, 1)
    with pytest.raises(ValueError):
        gen_dS([[0, 1], [0, 0]])
    d = gen_dS([[0, 1], [1, 0]])
    assert d.entry(3, 3) == -1 and d.entry(1, 1) == 1


def test_gen_perm():
    with pytest.raises(SingularMatrix):
        gen_perm([[1, 1], [1, 1]])
    t = gen_perm([[1, 0], [0, 1]], [1, 0])
    assert t.entry(2, 0) == 1 and t.entry(0, 0) == 0


def test_genus_one_orders():
    assert clifford_group(1).order == 192
    assert parabolic_subgroup(1).order == 32
    assert bfs_closure(definition_generators(1)).order == 192


def test_genus_two_parabolic_order():
    assert parabolic_subgroup(2).order == 3072


def test_all_genus_one_elements_unitary_and_distinct():
    G = clifford_group(1)
    assert all(g.is_unitary() for g in G)
    assert len({g.key() for g in G}) == 192


def test_definition_generators_lie_in_closed_group():
    keys = {g.key() for g in clifford_group(1)}
    assert all(g.key() in keys for g in definition_generators(1))


def test_closure_cap():
    with pytest.raises(CapExceeded):
        bfs_closure(closure_generators(1), cap=50)


def test_act_matches_float_substitution():
    rng = random.Random(7)
    G = clifford_group(1)
    for _ in range(20):
        U = G[rng.randrange(len(G))]
        p = random_poly(rng, 1)
        x = np.array([complex(rng.gauss(0, 1), rng.gauss(0, 1)) for _ in range(2)])
        lhs = eval_poly(act(U, p), x)
        rhs = eval_poly(p, matrix_to_complex(U).T @ x)
        assert abs(lhs - rhs) < 1e-8


def test_act_is_a_left_action():
    rng = random.Random(11)
    G = clifford_group(1)
    for _ in range(10):
        A, B = G[rng.randrange(192)], G[rng.randrange(192)]
        p = random_poly(rng, 1, (2, 2))
        assert act(A, act(B, p)) == act(A @ B, p)
        assert act(UnitaryMatrix.identity(1), p) == p


def test_monomial_average_matches_elementwise_sum():
    rng = random.Random(5)
    P = parabolic_subgroup(1)
    p = random_poly(rng, 1, (2, 2), terms=6)
    total = ConjPolynomial.zero(1, (2, 2))
    for g in P:
        total = total + act(g, p)
    assert average(P, p) == total.scale(Fraction(1, len(P)))


def test_average_lands_in_invariant_space(g11):
    p = ConjPolynomial(1, (2, 2), {ConjMonomial((2, 0), (2, 0)): 1})
    avg = average(clifford_group(1), p)
    f2 = ccwe(g11, 1) ** 2
    # the (2,2) invariant space is one-dimensional, spanned by f1^2
    mono = next(iter(f2.terms))
    ratio = avg.coefficient(mono) / f2.coefficient(mono)
    assert avg == f2.scale(ratio)
    assert all(act(g, avg) == avg for g in closure_generators(1))


@pytest.mark.parametrize("m", [1, 2])
@pytest.mark.parametrize("split", [(1, 1), (2, 2), (3, 3), (4, 4)])
def test_ccwe_invariance(m, split):
    for cls in enumerate_sdde(*split):
        p = ccwe(cls.representative, m)
        for g in closure_generators(m):
            assert act(g, p) == p


def test_nonselfdual_code_is_not_invariant():
    C = LinearCode.span(2, 2, [0b1111])
    p = ccwe(C, 1)
    assert act(gen_hadamard(1), p) != p


@pytest.mark.parametrize("m", [1, 2])
def test_nu_is_parabolic_invariant(g44, m):
    gens = parabolic_generators(m)
    for D in subcodes_with_allones(g44):
        nu = nu_direct(D, m)
        assert all(act(g, nu) == nu for g in gens)


# ---------------------------------------------------------------- X_P lemma


def _xp_float(C, m, x):
    """(1/|P|) sum_g p((g h)^T x), evaluated in floating point."""
    p = ccwe(C, m)
    h = matrix_to_complex(gen_hadamard(m))
    vals = [eval_poly(p, (matrix_to_complex(g) @ h).T @ x) for g in parabolic_subgroup(m)]
    return sum(vals) / len(vals)


def _xp_predicted(C, m, x, self_coef):
    r = C.n // 2 - C.dim
    val = self_coef * eval_poly(ccwe(C, m), x)
    for D in index2_de_extensions(C):
        val += eval_poly(ccwe(D, m), x) / (2**r * (2**m - 1))
    return val


@pytest.mark.parametrize("m,dim", [(1, 1), (1, 2), (2, 2), (1, 4)])
def test_xp_lemma_float_oracle(g44, m, dim):
    rng = np.random.default_rng(0)
    C = next(D for D in subcodes_with_allones(g44) if D.dim == dim)
    r = 4 - dim
    x = rng.normal(size=1 << m) + 1j * rng.normal(size=1 << m)
    lhs_float = _xp_float(C, m, x)
    lhs_exact, _, _ = xp_lemma_sides(C, m)
    assert abs(eval_poly(lhs_exact, x) - lhs_float) < 1e-8 * max(1, abs(lhs_float))
    e = (2**r - 1) * (2 ** (r - 1) + 1) if r else 0
    coef = (1 - e / (2**m - 1)) / 2**r
    assert abs(_xp_predicted(C, m, x, coef) - lhs_float) < 1e-8 * max(1, abs(lhs_float))


def test_xp_lemma_self_dual_case(g44):
    for m in (1, 2):
        assert check_xp_lemma(g44, m)
        assert check_xp_lemma(g44, m, coefficient="de-overcodes")


@pytest.mark.parametrize("m", [1, 2])
def test_xp_lemma_de_overcode_coefficient(m):
    for cls in enumerate_sdde(4, 4):
        for C in subcodes_with_allones(cls.representative):
            assert check_xp_lemma(C, m, coefficient="de-overcodes")


def test_all_overcode_coefficient_disagrees_for_positive_defect(g44):
    one = LinearCode.span(4, 4, [0xFF])
    lhs, rhs, r = xp_lemma_sides(one, 1)
    assert r == 3 and lhs != rhs


def test_xp_lemma_preconditions():
    with pytest.raises(ValueError):
        check_xp_lemma(LinearCode.span(2, 2, [0b1100]), 1)
    with pytest.raises(ValueError):
        check_xp_lemma(LinearCode.span(4, 4, [0xFF]), 1, coefficient="other")


def test_fwe_level_action_commutes_with_projection(g44):
    from cliffinv.clifford import act_fwe
    from cliffinv.enumerators import fwe, project_pi

    rng = random.Random(2)
    G = clifford_group(1)
    C = LinearCode.span(2, 2, [0b1100, 0b0110])
    v = fwe(C, 1)
    for _ in range(8):
        U = G[rng.randrange(len(G))]
        assert project_pi(act_fwe(U, v)) == act(U, project_pi(v))
    # the full enumerator of a doubly-even self-dual code is fixed slot-wise
    w = fwe(g44, 1)
    assert all(act_fwe(g, w) == w for g in closure_generators(1))


@pytest.mark.slow
def test_genus_two_group_contains_definition_generators():
    G = clifford_group(2)
    assert G.order == 92160
    keys = {G[i].key() for i in range(len(G))}
    assert all(g.key() in keys for g in definition_generators(2))
    rng = random.Random(9)
    assert all(G[rng.randrange(len(G))].is_unitary() for _ in range(200))
