from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from kstab.rationals import format_decimal, format_rational, parse_rational, rat

rationals = st.fractions(
    min_value=Fraction(-10**6), max_value=Fraction(10**6), max_denominator=10**6
)


def test_parse_examples():
    assert parse_rational("11/16") == Fraction(11, 16)
    assert parse_rational("465/2048") == Fraction(465, 2048)
    assert parse_rational("-3") == Fraction(-3)
    assert parse_rational(" 7/2 ") == Fraction(7, 2)


def test_format_examples():
    assert format_rational(Fraction(5, 16)) == "5/16"
    assert format_rational(Fraction(4, 2)) == "2"
    assert format_rational(Fraction(-1, 3)) == "-1/3"


@pytest.mark.parametrize("bad", ["", "1/0", "a/b", "1.5", "1/2/3"])
def test_parse_rejects_malformed(bad):
    with pytest.raises(ValueError):
        parse_rational(bad)


@given(rationals)
def test_round_trip(q):
    assert parse_rational(format_rational(q)) == q


def test_rat_coercions():
    assert rat(3) == Fraction(3)
    assert rat("281/32256") == Fraction(281, 32256)
    assert rat(Fraction(1, 6)) == Fraction(1, 6)
    with pytest.raises(TypeError):
        rat(0.5)


def test_format_decimal_significant_digits():
    assert format_decimal(Fraction(1, 3)) == "0.333333333333"
    assert format_decimal(Fraction(84365, 114688)) == "0.735604422433"
    assert format_decimal(Fraction(2)) == "2"
