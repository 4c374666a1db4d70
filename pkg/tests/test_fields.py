import pytest
from fractions import Fraction

from algseries import GF, QQ
from algseries.errors import AlgSeriesError

from conftest import ALL_FIELDS, FINITE_FIELDS, F2, F4, F9, random_raw


def test_prime_field_basics():
    assert F2.char == 2 and F2.order == 2
    f5 = GF(5)
    assert f5.add(3, 4) == 2
    assert f5.mul(3, 4) == 2
    assert f5.inv(2) == 3
    assert f5.sub(1, 3) == 3
    assert f5.neg(2) == 3


def test_gf_rejects_non_prime_powers():
    with pytest.raises(AlgSeriesError):
        GF(6)
    with pytest.raises(AlgSeriesError):
        GF(12)
    with pytest.raises(AlgSeriesError):
        GF(1)


def test_extension_f4_structure():
    # t^2 = t + 1 in F_4 with the built-in modulus
    t = 2  # code of t
    assert F4.mul(t, t) == F4.add(t, 1)
    assert F4.order == 4 and F4.char == 2
    for a in range(1, 4):
        assert F4.mul(a, F4.inv(a)) == 1


def test_extension_custom_modulus_checked():
    # t^2 + 1 is reducible over F_2 ((t+1)^2), irreducible over F_3
    with pytest.raises(AlgSeriesError):
        GF(4, modulus=(1, 0, 1))
    f9 = GF(9, modulus=(1, 0, 1))
    assert f9.order == 9
    with pytest.raises(AlgSeriesError):
        GF(9, modulus=(0, 0, 1))  # t^2 is reducible


def test_builtin_moduli_cover_advertised_range():
    for q in (4, 8, 9, 16, 25, 27):
        field = GF(q)
        assert field.order == q
        # spot-check a random product against distributivity
        a, b, c = q - 1, q // 2, 1
        lhs = field.mul(a, field.add(b, c))
        rhs = field.add(field.mul(a, b), field.mul(a, c))
        assert lhs == rhs


def test_field_axioms_and_frobenius(rng):
    for field in ALL_FIELDS:
        p = field.char
        for _ in range(100):
            a = random_raw(field, rng)
            b = random_raw(field, rng)
            assert field.add(a, b) == field.add(b, a)
            assert field.mul(a, b) == field.mul(b, a)
            c = random_raw(field, rng)
            assert field.mul(a, field.add(b, c)) == \
                field.add(field.mul(a, b), field.mul(a, c))
            if a:
                assert field.mul(a, field.inv(a)) == field.one
            if p:
                lhs = field.pow(field.add(a, b), p)
                rhs = field.add(field.pow(a, p), field.pow(b, p))
                assert lhs == rhs


def test_rational_field_exactness():
    assert QQ.div(1, 3) == Fraction(1, 3)
    assert QQ.add(Fraction(1, 3), Fraction(1, 6)) == Fraction(1, 2)
    assert QQ.inv(-2) == Fraction(-1, 2)
    assert QQ.from_literal("3/4") == Fraction(3, 4)
    assert QQ.from_literal("-5") == -5
    assert QQ.to_literal(Fraction(3, 1)) == "3"


def test_element_wrappers():
    a = F2.element(1)
    assert (a + a).raw == 0
    assert (a * a) == a
    assert -a == a
    b = GF(5).element(3)
    assert (b ** 2).raw == 4
    assert (b / b).raw == 1
    assert b != a
    with pytest.raises(AlgSeriesError):
        a + b


def test_literals_roundtrip(rng):
    for field in ALL_FIELDS:
        for _ in range(20):
            a = random_raw(field, rng)
            assert field.from_literal(field.to_literal(a)) == a
    assert F9.from_literal([1, 2]) == F9._encode((1, 2))


def test_descriptor_identity():
    assert GF(2) is F2  # cached
    assert GF(4) == F4
    assert QQ != F2
    assert GF(9, modulus=(1, 0, 1)) == F9  # the built-in modulus is t^2+1
