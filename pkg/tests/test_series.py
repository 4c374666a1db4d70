import pytest

from algseries import (GF, QQ, BiPoly, TruncSeries1, TruncSeries2,
                       diagonal_series, eval_bipoly_at_series, parse_poly,
                       series_expand_ratio)
from algseries.errors import InsufficientPrecision, ZeroConstantTerm

from conftest import F2, F4, binomial, random_bipoly


class TestTruncSeries1:
    def test_min_order_arithmetic(self):
        a = TruncSeries1(QQ, [1, 2, 3], 2)
        b = TruncSeries1(QQ, [1, 1], 1)
        assert (a + b).order == 1
        assert (a * b).coeffs == (1, 3)

    def test_inverse(self):
        geom = TruncSeries1(QQ, [1, -1], 5)
        inv = geom.inverse()
        assert inv.coeffs == (1, 1, 1, 1, 1, 1)
        assert (geom * inv).coeffs == (1, 0, 0, 0, 0, 0)
        with pytest.raises(ZeroConstantTerm):
            TruncSeries1(QQ, [0, 1], 3).inverse()

    def test_spread(self):
        s = TruncSeries1(F2, [1, 1, 0, 1], 3)
        assert s.spread(2).coeffs == (1, 0, 1, 0)


class TestExpandRatio:
    def test_binomial_table(self):
        # 1/(1-X-Y): [X^i Y^j] = C(i+j, j), checked by direct convolution
        S = series_expand_ratio(BiPoly.one(QQ), parse_poly("1-X-Y", QQ), 4)
        for i in range(5):
            for j in range(5 - i):
                assert S.get(i, j) == binomial(i + j, j)

    def test_trivial_one(self):
        S = series_expand_ratio(BiPoly.one(QQ), BiPoly.one(QQ), 3)
        assert S.get(0, 0) == 1 and S.get(1, 0) == 0

    def test_f2_hand_convolution(self):
        S = series_expand_ratio(parse_poly("Y", F2), parse_poly("1+X+Y", F2), 2)
        expected = {(0, 1): 1, (1, 1): 1, (0, 2): 1}
        assert S.terms == expected

    def test_zero_constant_term_rejected(self):
        with pytest.raises(ZeroConstantTerm):
            series_expand_ratio(BiPoly.one(F2), parse_poly("X+Y", F2), 3)

    def test_multiply_back(self, rng):
        for field in (F2, F4, GF(5), QQ):
            for _ in range(10):
                num = random_bipoly(field, rng)
                den = random_bipoly(field, rng)
                den = den + BiPoly.constant(field, field.one) \
                    if not den.terms.get((0, 0)) else den
                T = 8
                S = series_expand_ratio(num, den, T)
                back = S.mul_bipoly(den)
                want = TruncSeries2.from_bipoly(num, T)
                assert back == want


class TestDiagonal:
    def test_all_ones(self):
        S = series_expand_ratio(BiPoly.one(QQ), parse_poly("(1-X)*(1-Y)", QQ), 10)
        assert diagonal_series(S, 5).coeffs == (1,) * 6

    def test_central_binomials(self):
        S = series_expand_ratio(BiPoly.one(QQ), parse_poly("1-X-Y", QQ), 6)
        assert diagonal_series(S, 3).coeffs == (1, 2, 6, 20)

    def test_empty_support(self):
        S = TruncSeries2(QQ, {}, 8)
        assert diagonal_series(S, 4).is_zero()

    def test_precision_guard(self):
        S = series_expand_ratio(BiPoly.one(QQ), parse_poly("1-X-Y", QQ), 6)
        with pytest.raises(InsufficientPrecision):
            diagonal_series(S, 4)

    def test_linearity_in_numerator(self, rng):
        den = parse_poly("1-X-Y", F2)
        for _ in range(10):
            n1 = random_bipoly(F2, rng)
            n2 = random_bipoly(F2, rng)
            d1 = diagonal_series(series_expand_ratio(n1, den, 8), 4)
            d2 = diagonal_series(series_expand_ratio(n2, den, 8), 4)
            d12 = diagonal_series(series_expand_ratio(n1 + n2, den, 8), 4)
            assert d12 == d1 + d2


def test_eval_bipoly_at_series():
    # P(X, f) with f = X + X^2 over Q, P = X + Y^2
    f = TruncSeries1(QQ, [0, 1, 1], 4)
    P = parse_poly("X+Y^2", QQ)
    value = eval_bipoly_at_series(P, f)
    # X + (X + X^2)^2 = X + X^2 + 2X^3 + X^4
    assert value.coeffs == (0, 1, 1, 2, 1)
