import random
from itertools import product

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from cliffinv.codes import LinearCode, dual, glue, subcodes_with_allones, subspaces
from cliffinv.cyclo import Cyclo8
from cliffinv.enumerators import (
    FweVector,
    ccwe,
    fwe,
    macwilliams_transform,
    nu_by_inversion,
    nu_direct,
    project_pi,
)
from cliffinv.errors import CapExceeded
from cliffinv.polynomial import ConjMonomial, ConjPolynomial
from cliffinv.verify import random_code


def test_ccwe_of_g11(g11):
    p = ccwe(g11, 1)
    # codewords 00 and 11 give x0 xbar0 + x1 xbar1
    assert p.terms == {
        ConjMonomial((1, 0), (1, 0)): 1,
        ConjMonomial((0, 1), (0, 1)): 1,
    }
    assert p.degree == (1, 1)


def test_ccwe_genus_zero(g44):
    p = ccwe(g44, 0)
    # a single empty 0-row matrix
    assert p.terms == {ConjMonomial((4,), (4,)): 1}


@pytest.mark.parametrize("m", [1, 2, 3])
def test_ccwe_equals_projected_fwe(g44, m):
    assert ccwe(g44, m) == project_pi(fwe(g44, m))
    assert ccwe(g44, m).coefficient_sum() == 16**m


@settings(max_examples=25, deadline=None)
@given(st.integers(0, 10**6), st.integers(1, 2))
def test_ccwe_matches_projection_on_random_codes(seed, m):
    C = random_code(random.Random(seed), 6)
    assert ccwe(C, m) == project_pi(fwe(C, m))


@pytest.mark.parametrize("m", [1, 2])
def test_ccwe_is_multiplicative_under_glue(g11, g44, m):
    assert ccwe(glue(g11, g44), m) == ccwe(g11, m) * ccwe(g44, m)
    assert ccwe(glue(g44, g11), m) == ccwe(g11, m) * ccwe(g44, m)


@pytest.mark.parametrize("m", [1, 2])
def test_nu_direct_vs_inversion(g44, m):
    for D in subcodes_with_allones(g44):
        assert nu_by_inversion(D, m) == nu_direct(D, m)


@pytest.mark.parametrize("m", [1, 2])
def test_ccwe_is_sum_of_nu_over_subcodes(g44, m):
    # the partial-sum identity inverted by the Moebius step
    total = ConjPolynomial.zero(m, (4, 4))
    for D in subcodes_with_allones(g44):
        total = total + nu_direct(D, m)
    assert total == ccwe(g44, m)


def test_nu_vanishes_above_rank(g44):
    # span(M, 1) has dimension at most m + 1
    assert nu_direct(g44, 1).is_zero()
    assert not nu_direct(g44, 3).is_zero()


def test_inversion_requires_allones():
    with pytest.raises(ValueError):
        nu_by_inversion(LinearCode.span(2, 2, [0b1100]), 1)


@settings(max_examples=30, deadline=None)
@given(st.integers(0, 10**6), st.integers(1, 2))
def test_macwilliams_dual_and_involution(seed, m):
    C = random_code(random.Random(seed))
    D = dual(C)
    w = macwilliams_transform(fwe(C, m), C.size**m)
    assert w == fwe(D, m)
    assert macwilliams_transform(w, D.size**m) == fwe(C, m)


def test_macwilliams_brute_force_oracle():
    C = LinearCode.span(2, 1, [0b110])
    v = fwe(C, 1)
    w = macwilliams_transform(v, C.size)
    for u in range(8):
        expect = sum((-1) ** bin(c & u).count("1") for c in C.codewords())
        assert w.terms.get((u,), Cyclo8()) == Cyclo8(expect) / C.size


def test_macwilliams_self_dual_fixed_point(g44):
    for m in (1, 2):
        v = fwe(g44, m)
        assert macwilliams_transform(v, 16**m) == v


def test_term_cap(g44):
    with pytest.raises(CapExceeded):
        ccwe(g44, 3, cap=100)
    with pytest.raises(CapExceeded):
        macwilliams_transform(fwe(g44, 1), 16, cap=10)


def test_fwe_vector_shape_check():
    with pytest.raises(ValueError):
        FweVector(2, 1, 1, {(1,): 1})


def test_fwe_counts():
    C = LinearCode.span(2, 2, [0b1010, 0b0101])
    v = fwe(C, 2)
    assert len(v) == 16
    assert set(v.terms) == set(product(C.codewords(), repeat=2))
