import math
import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from fmspace.ring import (
    ONE,
    ZERO,
    FieldElem,
    RingElem,
    format_ring,
    parse_linear,
    parse_ring,
)

Q2 = RingElem.qpow(2)
Q4 = RingElem.qpow(4)


def ring_elements(max_terms=4, max_pow=6):
    coefs = st.fractions(
        min_value=Fraction(-9), max_value=Fraction(9), max_denominator=9
    )
    term = st.tuples(
        st.tuples(
            st.integers(min_value=-max_pow, max_value=max_pow),
            st.integers(min_value=-3, max_value=3),
        ),
        coefs,
    )
    return st.lists(term, max_size=max_terms).map(RingElem)


def random_monomial(rng: random.Random) -> RingElem:
    coef = Fraction(rng.randint(1, 9) * rng.choice((-1, 1)), rng.randint(1, 9))
    return RingElem.monomial(coef, rng.randint(-6, 6), rng.randint(-2, 2))


class TestAdd:
    def test_like_terms_merge(self):
        assert Q2 + Q2 == RingElem.monomial(2, 2, 0)

    def test_cancellation_gives_zero(self):
        a = RingElem.monomial(Fraction(1, 8), 4, -1)
        b = RingElem.monomial(Fraction(-1, 8), 4, -1)
        assert (a + b).is_zero
        assert a + b == ZERO

    def test_distinct_monomials_stay(self):
        x = Q2 + RingElem.pipow(-1)
        assert len(list(x.terms())) == 2
        # re-canonicalization is a no-op
        assert RingElem({(j, k): c for j, k, c in x.terms()}) == x

    def test_add_zero_identity(self):
        assert Q4 + ZERO == Q4


class TestMul:
    def test_exponent_addition(self):
        assert Q2 * Q4 == RingElem.qpow(6)

    def test_inverse_monomial(self):
        a = RingElem.monomial(Fraction(-1, 8), 4, -1)  # -q^4/(8 pi)
        b = RingElem.monomial(-8, -4, 1)  # -8 pi q^-4
        assert a * b == ONE

    def test_zero_annihilates(self):
        rng = random.Random(7)
        for _ in range(50):
            assert (random_monomial(rng) * ZERO).is_zero

    def test_mul_one_identity(self):
        assert Q2 * ONE == Q2

    def test_pow(self):
        assert Q2**3 == RingElem.qpow(6)
        assert (Q2**0) == ONE
        assert Q2**-1 == RingElem.qpow(-2)


class TestEval:
    def test_q4_over_64pi2_at_2(self):
        a = RingElem.monomial(Fraction(1, 64), 4, -2)
        assert a.evaluate(2.0) == pytest.approx(16 / (64 * math.pi**2), rel=1e-14)
        assert a.evaluate(2.0) == pytest.approx(0.02533029591, rel=1e-9)

    def test_zero_evaluates_to_zero(self):
        assert ZERO.evaluate(1.7) == 0.0

    def test_plain_square(self):
        assert Q2.evaluate(1.5) == pytest.approx(2.25, abs=0)

    def test_homomorphism(self):
        rng = random.Random(11)
        for _ in range(200):
            a = random_monomial(rng) + random_monomial(rng)
            b = random_monomial(rng) + random_monomial(rng)
            for q in (0.5, 1.3, 2.0):
                lhs = (a * b).evaluate(q)
                rhs = a.evaluate(q) * b.evaluate(q)
                assert lhs == pytest.approx(rhs, rel=1e-12, abs=1e-12)

    def test_mpf_evaluation(self):
        import mpmath

        with mpmath.workdps(40):
            val = RingElem.monomial(1, 0, 2).evaluate(mpmath.mpf(1))
            assert abs(val - mpmath.mp.pi**2) < mpmath.mpf(10) ** -35


class TestFieldElem:
    def test_product_of_inverses(self):
        x = FieldElem(Q2) * FieldElem(ONE, Q2)
        assert x == FieldElem(ONE)

    def test_invert_zero_raises(self):
        with pytest.raises(ZeroDivisionError):
            FieldElem(ZERO).invert()

    def test_quotient_simplifies(self):
        # (q^4/(8 pi)) / (q^2/(4 pi)) = q^2/2, checked by cross-multiplication
        num = FieldElem(RingElem.monomial(Fraction(1, 8), 4, -1))
        den = FieldElem(RingElem.monomial(Fraction(1, 4), 2, -1))
        quotient = num / den
        expected = FieldElem(RingElem.monomial(Fraction(1, 2), 2, 0))
        assert quotient == expected
        assert quotient.num * expected.den == expected.num * quotient.den

    def test_cross_multiplication_equality(self):
        a = FieldElem(Q2 + ONE, Q4)
        b = FieldElem((Q2 + ONE) * Q2, Q4 * Q2)
        assert a == b

    def test_to_ring(self):
        a = FieldElem((Q2 + ONE) * Q4, Q2 + ONE)
        assert a.to_ring() == Q4
        b = FieldElem(ONE, Q2 + ONE)
        assert b.to_ring() is None


class TestDivideExact:
    def test_binomial_division(self):
        a = (Q2 + ONE) * (Q4 + RingElem.pipow(1))
        assert a.divide_exact(Q2 + ONE) == Q4 + RingElem.pipow(1)

    def test_laurent_shift_division(self):
        a = RingElem.qpow(-2) + ONE  # q^-2 (1 + q^2)
        b = Q2 + Q4  # q^2 (1 + q^2)
        assert a.divide_exact(b) == RingElem.qpow(-4)

    def test_not_divisible(self):
        assert ONE.divide_exact(Q2 + ONE) is None


@settings(max_examples=150)
@given(ring_elements(), ring_elements(), ring_elements())
def test_ring_axioms(a, b, c):
    assert a + b == b + a
    assert a * b == b * a
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c


def test_ring_axioms_thousand_random_triples():
    rng = random.Random(2024)
    for _ in range(1000):
        a = random_monomial(rng) + random_monomial(rng)
        b = random_monomial(rng) + random_monomial(rng)
        c = random_monomial(rng)
        assert (a + b) + c == a + (b + c)
        assert (a * b) * c == a * (b * c)
        assert a * (b + c) == a * b + a * c


class TestSerialization:
    def test_round_trip_and_canonical_order(self):
        x = RingElem.monomial(Fraction(-3, 7), 4, -2) + RingElem.monomial(2, -1, 0)
        d = x.to_json_dict()
        assert [(t["q"], t["pi"]) for t in d["terms"]] == [(-1, 0), (4, -2)]
        assert all(isinstance(t["num"], str) for t in d["terms"])
        assert RingElem.from_json_dict(d) == x

    def test_zero_round_trip(self):
        assert RingElem.from_json_dict(ZERO.to_json_dict()).is_zero

    def test_big_integers_survive(self):
        big = 10**30 + 7
        x = RingElem.monomial(Fraction(big, 3), 0, 0)
        assert RingElem.from_json_dict(x.to_json_dict()) == x


class TestParseFormat:
    @pytest.mark.parametrize(
        "text,expected",
        [
            ("0", ZERO),
            ("q^2", Q2),
            ("-q^2/(4pi)", RingElem.monomial(Fraction(-1, 4), 2, -1)),
            ("1/2 + 1/(128 pi^2)", RingElem.monomial(Fraction(1, 2)) + RingElem.monomial(Fraction(1, 128), 0, -2)),
            ("8pi", RingElem.monomial(8, 0, 1)),
            ("2pi/q^2", RingElem.monomial(2, -2, 1)),
            ("-q^6/(32pi^2)", RingElem.monomial(Fraction(-1, 32), 6, -2)),
        ],
    )
    def test_parse(self, text, expected):
        assert parse_ring(text) == expected

    def test_format_round_trips(self):
        rng = random.Random(5)
        for _ in range(100):
            x = random_monomial(rng) + random_monomial(rng)
            assert parse_ring(format_ring(x)) == x

    def test_parse_linear(self):
        combo = parse_linear("q^4 B0 - 2 D2", names={"B0", "D2"})
        assert combo == {"B0": Q4, "D2": RingElem.rational(-2)}
        assert parse_linear("0", names={"B0"}) == {}

    def test_parse_linear_grouped(self):
        combo = parse_linear("(A - B)/2", names={"A", "B"})
        assert combo == {"A": RingElem.rational(1, 2), "B": RingElem.rational(-1, 2)}

    def test_parse_rejects_garbage(self):
        with pytest.raises(ValueError):
            parse_ring("q^2 B0")
        with pytest.raises(ValueError):
            parse_linear("q^2", names={"B0"})
        with pytest.raises(ValueError):
            parse_linear("A B", names={"A", "B"})
