import pytest

from algseries import (DFAO, GF, RationalFn, TruncSeries1, UniPoly,
                       frobenius_relation, kernel_matrix, null_left_vector,
                       parse_poly, parse_ratfun, verify_relation)
from algseries.annihilator import FrobeniusRelation, relation_from_rationals
from algseries.errors import BaseMismatch, DegreeBlowup, InsufficientPrecision

from conftest import F2, F4, thue_morse


def uni(field, text):
    return parse_poly(text, field).as_unipoly_x()


def tm_automaton():
    return DFAO(2, F2, 0, [(0, 1), (1, 0)], [0, 1])


def tm_series(order=256):
    return TruncSeries1(F2, [thue_morse(n) for n in range(order + 1)], order)


class TestKernelMatrix:
    def test_thue_morse_matrix(self):
        m = kernel_matrix(tm_automaton())
        one, x = UniPoly.one(F2), uni(F2, "X")
        assert m.entries == ((one, x), (x, one))

    def test_single_state_all_loops(self):
        a = DFAO(2, F2, 0, [(0, 0)], [1])
        m = kernel_matrix(a)
        assert m.entries == ((uni(F2, "1+X"),),)

    def test_row_exponents_partition_digits(self):
        # each row's exponent sets partition {0..q-1}
        for a in (tm_automaton(),
                  DFAO(2, F2, 0, [(1, 1), (2, 3), (1, 4), (3, 3), (4, 4)],
                       [0, 0, 0, 1, 0])):
            m = kernel_matrix(a)
            for row in m.entries:
                seen = []
                for entry in row:
                    seen += [k for k, c in enumerate(entry.coeffs) if c]
                assert sorted(seen) == list(range(a.q))

    def test_base_mismatch(self):
        a = DFAO(2, F4, 0, [(0, 0)], [1])
        with pytest.raises(BaseMismatch):
            kernel_matrix(a)

    def test_matrix_identity_on_truncations(self):
        # G_i(X) = sum_j A_ij(X) G_j(X^q) mod X^129 for every state
        for a in (tm_automaton(),
                  DFAO(2, F2, 0, [(1, 1), (2, 3), (1, 4), (3, 3), (4, 4)],
                       [0, 0, 0, 1, 0]),
                  DFAO(3, GF(3), 0, [(0, 1, 1), (1, 0, 2), (2, 2, 0)],
                       [0, 1, 2])):
            m = kernel_matrix(a)
            order = 128
            G = [a.reroot(i).generate(order) for i in range(a.n_states)]
            for i in range(a.n_states):
                acc = TruncSeries1.zeros(a.field, order)
                for j in range(a.n_states):
                    acc = acc + G[j].spread(a.q).mul_poly(m.entries[i][j])
                assert acc == G[i]


class TestNullLeftVector:
    def test_two_equal_rows(self):
        one = RationalFn.one(F2)
        combo = null_left_vector([[one], [one]])
        assert combo is not None
        # c0 * 1 + c1 * 1 = 0 with c != 0
        assert (combo[0] + combo[1]).is_zero()
        assert not (combo[0].is_zero() and combo[1].is_zero())

    def test_x_and_x_squared(self):
        rows = [[RationalFn.from_poly(uni(F2, "X"))],
                [RationalFn.from_poly(uni(F2, "X^2"))]]
        combo = null_left_vector(rows)
        # proportional to (X, 1)
        ratio = combo[0] / combo[1]
        assert ratio == RationalFn.from_poly(uni(F2, "X"))

    def test_independent_rows_give_none(self):
        rows = [[RationalFn.one(F2), RationalFn.zero(F2)],
                [RationalFn.zero(F2), RationalFn.one(F2)]]
        assert null_left_vector(rows) is None

    def test_combination_annihilates(self, rng):
        # more rows than columns always yields a null combination
        for _ in range(10):
            rows = []
            for _ in range(3):
                rows.append([RationalFn.from_poly(
                    UniPoly(F2, [rng.randrange(2) for _ in range(3)]))
                    for _ in range(2)])
            combo = null_left_vector(rows)
            assert combo is not None
            for col in range(2):
                acc = RationalFn.zero(F2)
                for c, row in zip(combo, rows):
                    acc = acc + c * row[col]
                assert acc.is_zero()


class TestFrobeniusRelation:
    def test_thue_morse_golden(self):
        rel = frobenius_relation(tm_automaton())
        assert rel.shift == 0 and rel.q == 2
        assert rel.coeffs == (uni(F2, "X"), uni(F2, "1+X"),
                              uni(F2, "(1+X)^4"))
        assert verify_relation(rel, tm_series())

    def test_fraction_form_clears_to_same_relation(self):
        # f^4 + f^2/(1+X)^3 + X f/(1+X)^4 = 0, cleared by (1+X)^4
        fractions = [parse_ratfun("X/(1+X)^4", F2),
                     parse_ratfun("1/(1+X)^3", F2),
                     parse_ratfun("1", F2)]
        rel = relation_from_rationals(fractions, 2)
        assert rel.coeffs == frobenius_relation(tm_automaton()).coeffs

    def test_constant_zero_automaton(self):
        zero = DFAO(2, F2, 0, [(0, 0)], [0])
        rel = frobenius_relation(zero)
        assert rel.coeffs == (UniPoly.one(F2),)
        assert rel.to_text() == "f = 0"

    def test_minimal_length_for_rational_series(self):
        # u_n = 1 for all n: f = 1/(1+X) over F_2 satisfies f + f^2 * (1+X) = 0
        ones = DFAO(2, F2, 0, [(0, 0)], [1])
        rel = frobenius_relation(ones)
        assert rel.length == 1
        assert verify_relation(rel, ones.generate(256))

    def test_degree_cap(self):
        n = 9
        a = DFAO(2, F2, 0, [((i + 1) % n, (i + 2) % n) for i in range(n)],
                 [i % 2 for i in range(n)])
        with pytest.raises(DegreeBlowup):
            frobenius_relation(a)

    def test_five_state_automaton_relation(self):
        aut = DFAO(2, F2, 0, [(1, 1), (2, 3), (1, 4), (3, 3), (4, 4)],
                   [0, 0, 0, 1, 0])
        rel = frobenius_relation(aut)
        assert verify_relation(rel, aut.generate(256))

    def test_canonicalization_invariance(self, rng):
        # uniform scaling of B and rescaling of the null vector do not
        # change the canonical relation
        rel = frobenius_relation(tm_automaton())
        fractions = [RationalFn.from_poly(c) for c in rel.coeffs]
        scale = parse_ratfun("(1+X)/X^3", F2)
        scaled = [f * scale for f in fractions]
        assert relation_from_rationals(scaled, 2).coeffs == rel.coeffs


def test_relation_from_kernel_pipeline():
    # diagonal automaton of the Example-1 kernel closure minimizes to the
    # 2-state machine and yields the same canonical relation
    from algseries import (diagonal_automaton, furstenberg_rep, parse_poly,
                           rational_kernel)
    rep = furstenberg_rep(parse_poly("(1+X)^3*Y^2+(1+X)^2*Y+X", F2))
    minimized = diagonal_automaton(rational_kernel(rep.num, rep.den)).minimize()
    assert minimized == tm_automaton()
    rel = frobenius_relation(minimized)
    assert rel.coeffs == frobenius_relation(tm_automaton()).coeffs


class TestVerifyRelation:
    def test_thue_morse_true(self):
        rel = frobenius_relation(tm_automaton())
        assert verify_relation(rel, tm_series())

    def test_perturbed_series_false(self):
        rel = frobenius_relation(tm_automaton())
        bumped = list(tm_series().coeffs)
        bumped[1] ^= 1  # f + X
        assert not verify_relation(rel, TruncSeries1(F2, bumped, 256))

    def test_zero_series_true(self):
        rel = frobenius_relation(tm_automaton())
        assert verify_relation(rel, TruncSeries1.zeros(F2, 64))

    def test_insufficient_precision(self):
        rel = FrobeniusRelation((uni(F2, "X^9"), UniPoly.one(F2)), 2)
        with pytest.raises(InsufficientPrecision):
            verify_relation(rel, TruncSeries1.zeros(F2, 4))

    def test_shifted_relation(self):
        # phi = 1/(1+X): phi^2 + (1+X) phi^4 = 0 is the l=1 spread of
        # phi + (1+X) phi^2 = 0
        ones = DFAO(2, F2, 0, [(0, 0)], [1])
        base = frobenius_relation(ones)
        shifted = FrobeniusRelation(base.coeffs, base.q, shift=1)
        # spreading the coefficients is not needed over F_2 for this check:
        # phi^(q^(k+1)) substitution still annihilates
        series = ones.generate(256)
        assert verify_relation(shifted, series) == \
            verify_relation(base, series.spread(2))
