from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from orbistar.scalar import GaussRat, HPoly, I, NotDivisibleError, ONE, ZERO

rationals = st.fractions(min_value=-20, max_value=20, max_denominator=12)
gauss = st.builds(GaussRat, rationals, rationals)
hpolys = st.lists(gauss, max_size=5).map(HPoly)


class TestGaussRat:
    def test_canonical_form(self):
        assert GaussRat(Fraction(2, 4)).re == Fraction(1, 2)
        assert GaussRat(2, -2) == GaussRat(Fraction(4, 2), Fraction(-6, 3))

    def test_field_ops(self):
        a = GaussRat(1, 2)
        b = GaussRat(3, -1)
        assert a * b == GaussRat(5, 5)
        assert (a / b) * b == a
        assert a - a == ZERO
        assert I * I == GaussRat(-1)

    def test_division_by_zero(self):
        with pytest.raises(ZeroDivisionError):
            GaussRat(1) / GaussRat(0)

    @pytest.mark.parametrize("text", [
        "0", "3", "-3/4", "i", "-i", "2/3*i", "1/2+1/3*i", "1/2-i", "2-3*i",
    ])
    def test_parse_print_round_trip(self, text):
        assert str(GaussRat.parse(text)) == text

    def test_parse_rejects_garbage(self):
        for bad in ["", "3+", "x", "1//2", "3 4", "i*i"]:
            with pytest.raises(ValueError):
                GaussRat.parse(bad)

    @given(gauss, gauss, gauss)
    def test_ring_axioms(self, a, b, c):
        assert (a + b) * c == a * c + b * c
        assert a * (b * c) == (a * b) * c
        assert a + b == b + a

    @given(gauss)
    def test_conjugate_norm(self, a):
        n = a * a.conjugate()
        assert n.im == 0
        assert n.re >= 0


class TestHPoly:
    def test_add(self):
        h = HPoly.h()
        assert h + h == HPoly.h(1, 2)

    def test_mul(self):
        one_plus = HPoly((1, 1))    # 1 + h
        one_minus = HPoly((1, -1))  # 1 - h
        assert one_plus * one_minus == HPoly((1, 0, -1))

    def test_mul_annihilator(self):
        p = HPoly((2, 3, 5))
        assert HPoly.zero() * p == HPoly.zero()

    def test_trimming(self):
        assert HPoly((1, 0, 0)).degree == 0
        assert HPoly((0, 0)).is_zero

    def test_eval(self):
        p = HPoly((1, 2))  # 1 + 2h
        assert p.eval(Fraction(1, 2)) == GaussRat(2)
        assert HPoly((7, 3, 9)).eval(0) == GaussRat(7)
        assert HPoly.h(2).eval(3) == GaussRat(9)

    def test_divide_by_h(self):
        assert HPoly((0, 2, 1)).divide_by_h() == HPoly((2, 1))
        assert HPoly.zero().divide_by_h() == HPoly.zero()
        with pytest.raises(NotDivisibleError):
            HPoly((1, 1)).divide_by_h()

    def test_div_exact(self):
        a = HPoly((1, 1))
        b = HPoly((2, -1, 3))
        assert (a * b).div_exact(a) == b
        assert HPoly((1, 0, 1)).div_exact(HPoly((1, 1))) is None

    def test_str_lowest_degree_first(self):
        p = HPoly((Fraction(3, 4), 2, -1))
        assert str(p) == "3/4 + 2*h - h^2"

    @given(hpolys, hpolys, hpolys)
    @settings(max_examples=60)
    def test_ring_axioms(self, a, b, c):
        assert (a + b) * c == a * c + b * c
        assert a * (b * c) == (a * b) * c

    @given(hpolys, hpolys, gauss)
    @settings(max_examples=60)
    def test_eval_is_homomorphism(self, a, b, h0):
        assert (a * b).eval(h0) == a.eval(h0) * b.eval(h0)
        assert (a + b).eval(h0) == a.eval(h0) + b.eval(h0)

    @given(hpolys)
    def test_divide_inverts_multiply(self, p):
        assert (p * HPoly.h()).divide_by_h() == p
