from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from cliffinv.cyclo import I, INV_SQRT2, SQRT2, ZETA, Cyclo8, as_rational
from cliffinv.errors import NotRational

from _oracles import to_complex

fracs = st.fractions(min_value=-20, max_value=20, max_denominator=12)
elems = st.builds(Cyclo8, fracs, fracs, fracs, fracs)
nonzero = elems.filter(bool)


def test_zeta_relations():
    assert ZETA**8 == 1
    assert ZETA**4 == -1
    assert ZETA**2 == I
    assert SQRT2 * SQRT2 == 2
    assert INV_SQRT2 * SQRT2 == 1
    assert Cyclo8.zeta_power(11) == ZETA**3


def test_normal_form_is_unique():
    a = Cyclo8(Fraction(1, 2), Fraction(2, 4))
    b = Cyclo8.from_ints([2, 2, 0, 0], 4)
    assert a == b and hash(a) == hash(b)
    assert a.numerators == (1, 1, 0, 0) and a.denominator == 2


def test_rational_hash_matches_fraction():
    assert hash(Cyclo8(Fraction(3, 7))) == hash(Fraction(3, 7))
    assert Cyclo8(5) == 5
    assert {Cyclo8(2): "x"}[2] == "x"


@given(elems, elems, elems)
def test_ring_axioms(a, b, c):
    assert (a + b) * c == a * c + b * c
    assert (a * b) * c == a * (b * c)
    assert a * b == b * a
    assert a - a == 0


@given(nonzero)
def test_inverse(a):
    assert a * a.inverse() == 1
    assert a / a == 1


@given(elems, elems)
def test_conjugation_is_a_field_automorphism(a, b):
    assert (a * b).conj() == a.conj() * b.conj()
    assert (a + b).conj() == a.conj() + b.conj()
    assert a.conj().conj() == a


@given(elems)
def test_norm_is_product_of_galois_conjugates(a):
    n = a.norm()
    assert isinstance(n, Fraction)
    assert n == as_rational(a.galois(1) * a.galois(3) * a.galois(5) * a.galois(7))
    assert (n == 0) == (a == 0)
    # a * conj(a) is real, hence fixed by conjugation, though only in Q(sqrt 2)
    r = a * a.conj()
    assert r.conj() == r


@given(elems, elems)
@settings(max_examples=50)
def test_matches_complex_arithmetic(a, b):
    assert abs(to_complex(a * b) - to_complex(a) * to_complex(b)) < 1e-9
    assert abs(to_complex(a.conj()) - to_complex(a).conjugate()) < 1e-9


@given(elems)
def test_text_round_trip(a):
    assert Cyclo8.parse(str(a)) == a


def test_zero_division():
    with pytest.raises(ZeroDivisionError):
        Cyclo8().inverse()


def test_as_rational():
    assert as_rational(Cyclo8(Fraction(5, 3))) == Fraction(5, 3)
    assert as_rational(SQRT2 * SQRT2) == 2
    with pytest.raises(NotRational):
        as_rational(SQRT2)


def test_short_str():
    assert Cyclo8(Fraction(-1, 2)).short_str() == "-1/2"
    assert ZETA.short_str() == "(0 + 1*z + 0*z^2 + 0*z^3)"
