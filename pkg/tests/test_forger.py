import random
from fractions import Fraction

import numpy as np
import pytest

from cliffinv.clifford import GroupList, UnitaryMatrix, clifford_group, gen_hadamard, phase_gate
from cliffinv.cyclo import Cyclo8
from cliffinv.forger import (
    BiSeries,
    char_poly,
    char_polys_batched,
    compare_with_codes,
    forger_series,
    golden_series,
    series_reciprocal,
)

from _oracles import matrix_to_complex, to_complex

X1_TEXT = (
    "1 + t*tb + t^2*tb^2 + t^3*tb^3 + 2*t^4*tb^4 + 2*t^5*tb^5 + 3*t^6*tb^6"
    " + 3*t^7*tb^7 + 4*t^8*tb^8 + t^8 + tb^8"
)


def test_char_poly_examples():
    assert char_poly(UnitaryMatrix.identity(1)) == [1, -2, 1]
    assert char_poly(phase_gate(1)) == [1, Cyclo8(-1, 0, -1), Cyclo8(0, 0, 1)]
    assert char_poly(gen_hadamard(1)) == [1, 0, -1]


def test_batched_char_poly_matches_expansion_and_numpy():
    rng = random.Random(1)
    G = clifford_group(1)
    idx = [rng.randrange(len(G)) for _ in range(30)]
    batched = char_polys_batched(G.nums[idx])
    for row, i in zip(batched, idx):
        U = G[i]
        den = U.den
        exact = [Cyclo8.from_ints(c, den**k) for k, c in enumerate(row.tolist())]
        assert exact == char_poly(U)
        # numpy: coefficients of det(tI - U) reversed give det(I - tU)
        ref = np.poly(matrix_to_complex(U))
        assert np.allclose([to_complex(c) for c in exact], ref)


def test_series_reciprocal():
    assert series_reciprocal([1, -1], 3) == [1, 1, 1, 1]
    assert series_reciprocal([1], 2) == [1, 0, 0]
    with pytest.raises(ValueError):
        series_reciprocal([2, 1], 2)
    rng = random.Random(4)
    for _ in range(10):
        p = [Cyclo8(1)] + [Cyclo8(*(rng.randint(-2, 2) for _ in range(4))) for _ in range(3)]
        q = series_reciprocal(p, 6)
        prod = [sum((p[j] * q[k - j] for j in range(min(k, 3) + 1)), Cyclo8()) for k in range(7)]
        assert prod == [1] + [0] * 6


def test_trivial_group_counts_all_monomials():
    ident = UnitaryMatrix.identity(1)
    G = GroupList(1, ident.num[None].copy(), np.array([1]))
    s = forger_series(G, 3, 4)
    for a in range(4):
        for b in range(5):
            assert s[a, b] == (a + 1) * (b + 1)


def test_genus_one_series():
    s = forger_series(clifford_group(1))
    assert s.render() == X1_TEXT
    assert s == golden_series(1)
    assert s.is_integral() and s.is_hermitian()
    assert s[0, 0] == 1


def test_selection_rule_genus_one():
    # zeta * I lies in X_1, so alpha(N1, N2) = 0 unless N1 = N2 mod 8
    s = forger_series(clifford_group(1))
    for (a, b), c in s.terms().items():
        assert (a - b) % 8 == 0 and c > 0


def test_series_text_round_trip():
    s = BiSeries.parse(X1_TEXT, 8, 8)
    assert s.render() == X1_TEXT
    assert s[8, 0] == 1 and s[6, 6] == 3 and s[1, 2] == 0
    assert BiSeries.parse("1 + 1/2*t*tb", 2, 2)[1, 1] == Fraction(1, 2)


def test_csv():
    s = BiSeries.parse("1 + t*tb", 1, 1)
    assert s.to_csv() == "N1,N2,coefficient\n0,0,1\n0,1,0\n1,0,0\n1,1,1\n"


def test_compare_with_codes_examples():
    x1, x2 = golden_series(1), golden_series(2)
    counts = {(1, 1): 1, (2, 2): 1, (3, 3): 1, (4, 4): 2, (5, 5): 2, (6, 6): 4}
    rep = compare_with_codes(x1, counts, 1, next_series=x2)
    assert rep.ok, rep.violations
    assert (1, 1) in rep.equalities and (2, 2) in rep.equalities
    rep2 = compare_with_codes(x2, counts, 2)
    assert rep2.ok
    assert any("(6,6)" in o for o in rep2.observations)
    bad = compare_with_codes(x2, {(6, 6): 3}, 2)
    assert not bad.ok


@pytest.mark.slow
def test_genus_two_series():
    G = clifford_group(2)
    assert G.order == 92160
    s = forger_series(G)
    assert s == golden_series(2)
    assert s.is_integral() and s.is_hermitian()
