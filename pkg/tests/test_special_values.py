from fractions import Fraction

import pytest

from zetaladder.special_values import special_value, zeta_neg_int


@pytest.mark.parametrize(
    "k, value",
    [(0, Fraction(-1, 2)), (1, Fraction(-1, 12)), (3, Fraction(1, 120)), (2, Fraction(0))],
)
def test_known_values(k, value):
    assert zeta_neg_int(k) == value


def test_k11():
    assert zeta_neg_int(11) == Fraction(691, 32760)


def test_trivial_zeros():
    for k in range(2, 41, 2):
        assert zeta_neg_int(k) == 0


def test_more_odd_values():
    assert zeta_neg_int(5) == Fraction(-1, 252)
    assert zeta_neg_int(7) == Fraction(1, 240)


def test_record():
    sv = special_value(1)
    assert (sv.k, sv.value) == (1, Fraction(-1, 12))


def test_bad_input():
    with pytest.raises(ValueError):
        zeta_neg_int(-1)
    with pytest.raises(TypeError):
        zeta_neg_int(1.5)
