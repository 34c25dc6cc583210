import itertools
import random
from fractions import Fraction

import pytest

from orbistar.commpoly import CommPoly, poisson_bracket
from orbistar.liealg import BasisChange, sheet_swap, sl2, so21, su2
from orbistar.scalar import GaussRat, HPoly, NotDivisibleError, ONE
from orbistar.uea import (
    NotAutomorphismError,
    UElement,
    apply_automorphism,
    commutator,
    divide_by_h,
    evaluate_h,
    exponent_of_word,
    is_central,
    multiply,
    multiply_at,
    normal_form_word,
    ordered_lift,
    project_classical,
    symmetrize,
)

PRESETS = [sl2, su2, so21]


def random_uelement(rng, ngen=3, max_degree=4, terms=3):
    out = UElement.zero()
    for _ in range(terms):
        word = tuple(sorted(rng.randrange(ngen) for _ in range(rng.randint(0, max_degree))))
        coeff = HPoly([
            Fraction(rng.randint(-3, 3), rng.randint(1, 2))
            for _ in range(rng.randint(1, 3))
        ])
        out = out + UElement.monomial(word, coeff)
    return out


class TestNormalFormWord:
    def test_single_swap(self):
        # X then H: one rewrite through [H,X] = 2X
        res = normal_form_word((1, 0), sl2())
        assert res == UElement({(0, 1): HPoly.one(), (1,): HPoly.h(1, -2)})

    def test_xy_reversal(self):
        res = normal_form_word((2, 1), sl2())
        assert res == UElement({(1, 2): HPoly.one(), (0,): HPoly.h(1, -1)})

    def test_sorted_word_fixed(self):
        res = normal_form_word((0, 1, 1, 2), sl2())
        assert res == UElement.monomial((0, 1, 1, 2))

    @pytest.mark.parametrize("preset", PRESETS)
    def test_strategy_independence_all_short_words(self, preset):
        L = preset()
        rng = random.Random(99)

        def random_pick(word):
            descents = [i for i in range(len(word) - 1) if word[i] > word[i + 1]]
            return rng.choice(descents) if descents else None

        for length in range(5):
            for word in itertools.product(range(3), repeat=length):
                left = normal_form_word(word, L, "leftmost")
                right = normal_form_word(word, L, "rightmost")
                rand = normal_form_word(word, L, random_pick)
                assert left == right == rand, word


class TestMultiply:
    def test_ordered_product(self):
        res = multiply(UElement.generator(0), UElement.generator(1), sl2())
        assert res == UElement.monomial((0, 1))

    def test_commutator_of_x_and_y(self):
        L = sl2()
        res = commutator(UElement.generator(1), UElement.generator(2), L)
        assert res == UElement({(0,): HPoly.h()})  # h * H

    def test_power_of_cartan(self):
        L = sl2()
        h2 = multiply(UElement.monomial((0, 0)), UElement.generator(0), L)
        assert h2 == UElement.monomial((0, 0, 0))

    def test_self_commutator_vanishes(self):
        rng = random.Random(1)
        L = su2()
        for _ in range(5):
            a = random_uelement(rng)
            assert commutator(a, a, L).is_zero

    @pytest.mark.parametrize("preset", PRESETS)
    def test_associativity_random(self, preset):
        L = preset()
        rng = random.Random(42)
        for _ in range(25):
            a, b, c = (random_uelement(rng) for _ in range(3))
            left = multiply(multiply(a, b, L), c, L)
            right = multiply(a, multiply(b, c, L), L)
            assert left == right

    def test_degree_filtration(self):
        rng = random.Random(8)
        L = sl2()
        for _ in range(10):
            a, b = random_uelement(rng), random_uelement(rng)
            prod = multiply(a, b, L)
            if not prod.is_zero:
                assert prod.degree <= a.degree + b.degree


class TestSymbolMaps:
    def test_top_symbol_homomorphism(self):
        L = sl2()
        rng = random.Random(12)
        for _ in range(10):
            a, b = random_uelement(rng), random_uelement(rng)
            lhs = project_classical(multiply(a, b, L), L)
            rhs = project_classical(a, L) * project_classical(b, L)
            assert lhs == rhs

    def test_first_order_term_is_poisson_bracket(self):
        L = sl2()
        rng = random.Random(13)
        for _ in range(10):
            a, b = random_uelement(rng), random_uelement(rng)
            comm = commutator(a, b, L)
            first = evaluate_h(divide_by_h(comm), 0) if not comm.is_zero else comm
            lhs = project_classical(first, L) if not comm.is_zero else CommPoly.zero(3)
            rhs = poisson_bracket(project_classical(a, L), project_classical(b, L), L)
            assert lhs == rhs

    def test_project_drops_h(self):
        L = sl2()
        a = UElement({(1, 2): HPoly.one(), (0,): HPoly.h(1, Fraction(-1, 2))})
        assert project_classical(a, L) == CommPoly.monomial((0, 1, 1))


class TestSymmetrize:
    def test_degree_one(self):
        L = sl2()
        assert symmetrize(CommPoly.variable(0, 3), L) == UElement.generator(0)

    def test_xy_average(self):
        L = sl2()
        res = symmetrize(CommPoly.monomial((0, 1, 1)), L)
        expected = UElement({(1, 2): HPoly.one(), (0,): HPoly.h(1, Fraction(-1, 2))})
        assert res == expected  # (XY + YX)/2 = XY - (h/2) H

    def test_split_casimir(self):
        L = sl2()
        res = symmetrize(L.invariants[0], L)
        expected = UElement({
            (0, 0): HPoly.const(Fraction(1, 4)),
            (1, 2): HPoly.one(),
            (0,): HPoly.h(1, Fraction(-1, 2)),
        })
        assert res == expected

    def test_specialized_casimir_matches_halves(self):
        # at h = 1 the symmetrized Casimir equals (1/2)(XY + YX + H^2/2)
        L = sl2()
        lhs = evaluate_h(symmetrize(L.invariants[0], L), 1)
        X, Y, H = UElement.generator(1), UElement.generator(2), UElement.generator(0)
        half = GaussRat(Fraction(1, 2))
        rhs = (
            multiply_at(X, Y, L, 1) + multiply_at(Y, X, L, 1)
            + multiply_at(H, H, L, 1).scale(half)
        ).scale(half)
        assert lhs == rhs

    def test_degree_two_transposition_stable(self):
        # averaging over arrangements of (i, j) equals averaging over (j, i)
        L = so21()
        for i in range(3):
            for j in range(3):
                a = multiply(UElement.generator(i), UElement.generator(j), L)
                b = multiply(UElement.generator(j), UElement.generator(i), L)
                half = GaussRat(Fraction(1, 2))
                sym = symmetrize(CommPoly.monomial(exponent_of_word((i, j), 3)), L)
                assert (a + b).scale(half) == sym

    def test_degree_cap(self):
        with pytest.raises(ValueError, match="cap"):
            symmetrize(CommPoly.monomial((9, 0, 0)), sl2())

    def test_round_trip_projection(self):
        L = su2()
        rng = random.Random(3)
        for _ in range(6):
            exp = tuple(rng.randint(0, 2) for _ in range(3))
            p = CommPoly.monomial(exp, Fraction(rng.randint(1, 5), 2))
            assert project_classical(symmetrize(p, L), L) == p


class TestEvaluateH:
    def test_zero_limit_is_abelian(self):
        L = sl2()
        a = evaluate_h(normal_form_word((1, 0), L), 0)
        assert a == UElement.monomial((0, 1))  # bracket terms die at h=0

    def test_homomorphism_at_values(self):
        L = sl2()
        rng = random.Random(77)
        for h0 in (GaussRat(0), GaussRat(1), GaussRat(Fraction(1, 2)), GaussRat(-2)):
            for _ in range(6):
                a, b = random_uelement(rng), random_uelement(rng)
                lhs = evaluate_h(multiply(a, b, L), h0)
                rhs = multiply_at(evaluate_h(a, h0), evaluate_h(b, h0), L, h0)
                assert lhs == rhs

    def test_specialized_bracket_is_rescaled(self):
        L = sl2()
        X, H = UElement.generator(1), UElement.generator(0)
        h0 = GaussRat(Fraction(1, 3))
        comm = multiply_at(H, X, L, h0) - multiply_at(X, H, L, h0)
        assert comm == UElement({(1,): HPoly.const(GaussRat(2) * h0)})


class TestCentrality:
    @pytest.mark.parametrize("preset", PRESETS)
    def test_symmetrized_invariant_central(self, preset):
        L = preset()
        assert is_central(symmetrize(L.invariants[0], L), L)

    def test_generator_not_central(self):
        assert not is_central(UElement.generator(0), sl2())

    def test_unit_central(self):
        assert is_central(UElement.unit(), sl2())


class TestAutomorphism:
    def test_sheet_swap_images(self):
        L = so21()
        res = apply_automorphism(UElement.generator(1), sheet_swap(), L)
        assert res == UElement.generator(1, GaussRat(-1))  # Et -> -Et
        res = apply_automorphism(UElement.generator(2), sheet_swap(), L)
        assert res == UElement.generator(2)  # Ft fixed

    def test_involution_on_random_elements(self):
        L = so21()
        rng = random.Random(31)
        for _ in range(10):
            a = random_uelement(rng)
            twice = apply_automorphism(apply_automorphism(a, sheet_swap(), L), sheet_swap(), L)
            assert twice == a

    def test_fixes_casimir(self):
        L = so21()
        p = symmetrize(L.invariants[0], L)
        assert apply_automorphism(p, sheet_swap(), L) == p

    def test_is_algebra_homomorphism(self):
        L = so21()
        rng = random.Random(37)
        for _ in range(8):
            a, b = random_uelement(rng), random_uelement(rng)
            lhs = apply_automorphism(multiply(a, b, L), sheet_swap(), L)
            rhs = multiply(
                apply_automorphism(a, sheet_swap(), L),
                apply_automorphism(b, sheet_swap(), L),
                L,
            )
            assert lhs == rhs

    def test_rejects_non_automorphism(self):
        bad = BasisChange(((2, 0, 0), (0, 1, 0), (0, 0, 1)))
        with pytest.raises(NotAutomorphismError):
            apply_automorphism(UElement.generator(0), bad, so21())


class TestLifts:
    def test_ordered_lift_round_trip(self):
        L = sl2()
        f = CommPoly.monomial((1, 2, 0), Fraction(3, 2))
        assert project_classical(ordered_lift(f), L) == f
