import pytest

from algseries import GF, QQ, BiPoly, parse_poly, parse_ratfun, parse_unipoly
from algseries.errors import (NegativeExponent, ParseError, UnknownSymbol,
                              ZeroDenominator)

from conftest import F2, F5, random_bipoly


def test_example1_polynomial():
    P = parse_poly("(1+X)^3*Y^2+(1+X)^2*Y+X", F2)
    expected = BiPoly.from_terms(F2, [
        ((1, 0), 1), ((0, 1), 1), ((2, 1), 1),
        ((0, 2), 1), ((1, 2), 1), ((2, 2), 1), ((3, 2), 1),
    ])
    assert P == expected


def test_zero_and_simple():
    assert parse_poly("0", QQ).is_zero()
    P = parse_poly("X + Y^2", QQ)
    assert P.terms == {(1, 0): 1, (0, 2): 1}


def test_integer_literals_reduce_mod_p():
    assert parse_poly("5*X+6", F2) == parse_poly("X", F2)
    assert parse_poly("7", F5) == BiPoly.constant(F5, 2)


def test_juxtaposition_and_unary_minus():
    assert parse_poly("(1+X)Y", QQ) == parse_poly("(1+X)*Y", QQ)
    assert parse_poly("2X", QQ) == parse_poly("2*X", QQ)
    assert parse_poly("-X+Y", QQ) == parse_poly("Y-X", QQ)
    assert parse_poly("X(-2)", QQ) == parse_poly("-2*X", QQ)


def test_whitespace_ignored():
    assert parse_poly(" ( 1 + X ) ^ 2 ", QQ) == parse_poly("(1+X)^2", QQ)


def test_parse_errors_carry_offsets():
    cases = ["X^", "X+", "(1+X", "X^Y", "1+*2", "X$Y", ""]
    for text in cases:
        with pytest.raises(ParseError) as err:
            parse_poly(text, QQ)
        assert 0 <= err.value.offset <= len(text)


def test_negative_exponent():
    with pytest.raises(NegativeExponent) as err:
        parse_poly("X^-2", QQ)
    assert err.value.offset == 2


def test_unknown_symbol():
    with pytest.raises(UnknownSymbol) as err:
        parse_poly("X+Z", QQ)
    assert err.value.offset == 2
    with pytest.raises(UnknownSymbol):
        parse_poly("x", QQ)  # case-sensitive


def test_parse_ratfun():
    r = parse_ratfun("X/(1+X)^4", F2)
    assert r.arity == 1
    assert r.num.to_text() == "X"
    assert r.den == parse_unipoly("1+X^4", F2)  # (1+X)^4 over F_2

    assert parse_ratfun("1", QQ).is_one()
    r = parse_ratfun("(X^2+X)/X", F2)
    assert r.num == parse_unipoly("X+1", F2)
    assert r.den.degree == 0

    with pytest.raises(ZeroDenominator):
        parse_ratfun("X/0", QQ)
    with pytest.raises(ParseError):
        parse_ratfun("X/Y/X", QQ)


def test_parse_unipoly_variable():
    m = parse_unipoly("t^2+t+1", F2, var="t")
    assert m.coeffs == (1, 1, 1)
    assert m.var == "t"
    with pytest.raises(UnknownSymbol):
        parse_unipoly("X^2", F2, var="t")


def test_print_parse_roundtrip(rng):
    for field in (F2, F5, QQ):
        for _ in range(200):
            # coefficients denotable by the grammar: residues / ints
            poly = random_bipoly(field, rng, max_deg=4, max_terms=5)
            text = poly.to_text()
            assert parse_poly(text, field) == poly


def test_univariate_roundtrip(rng):
    for _ in range(50):
        poly = random_bipoly(QQ, rng, max_deg=4, max_terms=4)
        text = poly.to_text()
        assert parse_poly(text, QQ) == poly
