import pytest

from algseries import (GF, QQ, BiPoly, FixedPointProblem, parse_poly,
                       eval_bipoly_at_series, fixed_point_coefficients,
                       fs_coefficients, fs_partial_sum)
from algseries.errors import HypothesisViolated

from conftest import (F2, F3, F4, F5, catalan_numbers, random_problem,
                      thue_morse)


def problem(text, field):
    return FixedPointProblem(parse_poly(text, field))


class TestHypotheses:
    def test_rejects_constant_term(self):
        with pytest.raises(HypothesisViolated) as err:
            problem("1+X", QQ)
        assert "P(0,0)" in str(err.value)

    def test_rejects_linear_y(self):
        with pytest.raises(HypothesisViolated) as err:
            problem("Y", QQ)
        assert "P'_Y(0,0)" in str(err.value)

    def test_reports_both(self):
        with pytest.raises(HypothesisViolated) as err:
            problem("1+Y", QQ)
        message = str(err.value)
        assert "P(0,0)" in message and "P'_Y(0,0)" in message

    def test_weight_invariant(self, rng):
        for _ in range(50):
            prob = random_problem(QQ, rng)
            assert all(2 * a + b >= 2 for (a, b) in prob.poly.terms)


class TestFsCoefficients:
    def test_p_equals_x(self):
        f = fs_coefficients(problem("X", QQ), 6)
        assert f.coeffs == (0, 1, 0, 0, 0, 0, 0)

    def test_catalan(self):
        f = fs_coefficients(problem("X+Y^2", QQ), 5)
        assert f.coeffs[1:] == (1, 1, 2, 5, 14)

    def test_catalan_mod_2(self):
        # reduce the rational oracle mod 2: nonzero iff n is a power of two
        f = fs_coefficients(problem("X+Y^2", F2), 8)
        cat = catalan_numbers(8)
        assert list(f.coeffs[1:]) == [c % 2 for c in cat]
        assert f.coeffs[1:] == (1, 1, 0, 1, 0, 0, 0, 1)

    def test_zero_polynomial(self):
        f = fs_coefficients(FixedPointProblem(BiPoly.zero(QQ)), 5)
        assert f.is_zero()


class TestFixedPointOracle:
    def test_p_equals_x(self):
        f = fixed_point_coefficients(problem("X", QQ), 4)
        assert f.coeffs == (0, 1, 0, 0, 0)

    def test_catalan_ten(self):
        f = fixed_point_coefficients(problem("X+Y^2", QQ), 10)
        assert list(f.coeffs[1:]) == catalan_numbers(10)

    def test_thue_morse_fixed_point_form(self):
        # the Thue-Morse equation in fixed-point form: f = (1+X)^3 f^2 + X^2 f + X
        f = fixed_point_coefficients(problem("(1+X)^3*Y^2+X^2*Y+X", F2), 8)
        assert list(f.coeffs) == [thue_morse(n) for n in range(9)]


class TestPartialSums:
    def test_catalan_f2_terms(self):
        prob = problem("X+Y^2", QQ)
        assert fs_partial_sum(prob, 2, 2).raw == -2
        assert fs_partial_sum(prob, 2, 3).raw == 1

    def test_linear_term(self, rng):
        # n=1, m_max=1: only [X]P survives
        for field in (QQ, F2, F3):
            for _ in range(10):
                prob = random_problem(field, rng)
                expect = prob.poly.coefficient(1, 0)
                assert fs_partial_sum(prob, 1, 1).raw == expect

    def test_stabilization(self, rng):
        for field in (QQ, F2, F5):
            for _ in range(10):
                prob = random_problem(field, rng)
                for n in (2, 3, 4):
                    early = fs_partial_sum(prob, n, 2 * n - 1)
                    late = fs_partial_sum(prob, n, 2 * n + 4)
                    assert early == late


class TestOracleAgreement:
    def test_small_corpus_all_fields(self, rng):
        # includes F_4 to exercise the extension path
        for field in (F2, F3, F4, F5, QQ):
            for _ in range(10):
                prob = random_problem(field, rng)
                assert fs_coefficients(prob, 16) == \
                    fixed_point_coefficients(prob, 16)

    def test_substitution_check(self, rng):
        for field in (F2, F5, QQ):
            for _ in range(10):
                prob = random_problem(field, rng)
                f = fs_coefficients(prob, 12)
                assert eval_bipoly_at_series(prob.poly, f) == f
