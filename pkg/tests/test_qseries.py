from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from plusforms.qseries import (
    QSeries,
    RATIONAL,
    RingTag,
    NonIntegralCoefficientError,
    RingMismatchError,
)


def q(*coeffs):
    return QSeries.rational(coeffs)


class TestBasics:
    def test_add_identity(self):
        assert (q(1, 1) + q(0, 0)).coeffs == q(1, 1).coeffs

    def test_add_truncates_to_min_precision(self):
        s = q(1, 1, 1) + q(2, -1)
        assert s.precision == 2
        assert s.coeffs == (3, 0)

    def test_add_mod3(self):
        a = QSeries.modular(3, (0, 2))
        s = a + a
        assert s.coeffs == (0, 1)

    def test_mul_difference_of_squares(self):
        s = q(1, 1, 0) * q(1, -1, 0)
        assert s.coeffs == (1, 0, -1)

    def test_mul_identity(self):
        a = q(3, -7, 2)
        assert (a * QSeries.one(RATIONAL, 3)).coeffs == a.coeffs

    def test_mul_q_times_q(self):
        s = q(0, 1, 0, 0) * q(0, 1, 0, 0)
        assert s.coeffs == (0, 0, 1, 0)

    def test_dilate(self):
        s = q(1, 1, 0, 0, 0, 0, 0, 0).dilate(4)
        assert s.precision == 8
        assert s.coeffs == (1, 0, 0, 0, 1, 0, 0, 0)

    def test_pow_zero(self):
        assert (q(1, 1) ** 0).coeffs == (1, 0)

    def test_scale(self):
        assert q(0, 1, 1).scale(28).coeffs == (0, 28, 28)

    def test_ring_mismatch(self):
        with pytest.raises(RingMismatchError):
            q(1) + QSeries.modular(3, (1,))
        with pytest.raises(RingMismatchError):
            QSeries.modular(5, (1, 2)).scale(Fraction(1, 2))

    def test_mod_requires_m_at_least_two(self):
        with pytest.raises(ValueError):
            RingTag(1)


class TestReduceMod:
    def test_non_integral_raises_with_exponent(self):
        s = QSeries.rational((0, Fraction(-44, 3)))
        with pytest.raises(NonIntegralCoefficientError) as err:
            s.reduce_mod(3)
        assert err.value.exponent == 1

    def test_half_becomes_two(self):
        s = QSeries.rational((Fraction(1, 2), 1)).reduce_mod(3)
        assert s.coeffs == (2, 1)

    def test_28q(self):
        assert q(0, 28).reduce_mod(3).coeffs == (0, 1)

    def test_only_rational_input(self):
        with pytest.raises(RingMismatchError):
            QSeries.modular(3, (1,)).reduce_mod(3)


small_rationals = st.fractions(
    min_value=-5, max_value=5, max_denominator=6)
series3 = st.lists(small_rationals, min_size=1, max_size=6).map(
    lambda cs: QSeries.rational(cs))


class TestRingAxioms:
    @settings(max_examples=60, deadline=None)
    @given(series3, series3)
    def test_add_commutes(self, a, b):
        assert (a + b).coeffs == (b + a).coeffs

    @settings(max_examples=60, deadline=None)
    @given(series3, series3)
    def test_mul_commutes(self, a, b):
        assert (a * b).coeffs == (b * a).coeffs

    @settings(max_examples=40, deadline=None)
    @given(series3, series3, series3)
    def test_associative_and_distributive(self, a, b, c):
        p = min(a.precision, b.precision, c.precision)
        assert ((a * b) * c).coeffs[:p] == (a * (b * c)).coeffs[:p]
        assert (a * (b + c)).coeffs[:p] == (a * b + a * c).coeffs[:p]

    @settings(max_examples=40, deadline=None)
    @given(series3, series3)
    def test_reduce_mod_is_ring_hom(self, a, b):
        try:
            ra, rb = a.reduce_mod(5), b.reduce_mod(5)
        except NonIntegralCoefficientError:
            return
        assert (a * b).reduce_mod(5).coeffs == (ra * rb).coeffs
        assert (a + b).reduce_mod(5).coeffs == (ra + rb).coeffs

    @settings(max_examples=40, deadline=None)
    @given(series3, st.integers(1, 3), st.integers(1, 3))
    def test_dilate_composes(self, a, d1, d2):
        once = a.dilate(d1 * d2)
        twice = a.dilate(d1).dilate(d2)
        assert once.coeffs == twice.coeffs


class TestRendering:
    def test_text_lines_skip_zeros(self):
        s = q(1, 2, 0, 0, 2)
        assert s.to_text_lines() == ["0\t1", "1\t2", "4\t2"]

    def test_rational_text(self):
        s = QSeries.rational((Fraction(-1, 12), 5))
        assert s.to_text_lines() == ["0\t-1/12", "1\t5"]

    def test_json(self):
        s = QSeries.modular(3, (1, 2, 0))
        assert s.to_json_dict() == {
            "ring": "Z/3", "precision": 3, "coeffs": ["1", "2", "0"]}

    def test_primitive(self):
        s = QSeries.rational((Fraction(4, 3), 8, 0))
        assert s.primitive().coeffs == (1, 6, 0)
        z = QSeries.rational((0, 0))
        assert z.primitive().coeffs == (0, 0)
