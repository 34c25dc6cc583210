import json
import random
from fractions import Fraction

import pytest

from orbistar import matrices as M
from orbistar.commpoly import CommPoly, is_invariant
from orbistar.liealg import (
    BasisChange,
    InconsistentRegularityError,
    LieAlgebra,
    SingularFormError,
    adjoint_matrix,
    change_basis,
    is_regular,
    jacobi_check,
    killing_form,
    load_algebra,
    quadratic_casimir,
    regularity_tests,
    sheet_swap,
    sl2,
    sl2_to_su2,
    so21,
    su2,
    su2_to_so21,
)
from orbistar.scalar import GaussRat, HPoly, I, ONE


def broken_sl2():
    """[X,Y] tampered to H + X; Jacobi fails."""
    L = sl2()
    structure = dict(L.structure)
    structure[(1, 2)] = {0: ONE, 1: ONE}
    return LieAlgebra("broken", L.labels, structure, rank=1)


class TestJacobi:
    @pytest.mark.parametrize("preset", [sl2, su2, so21])
    def test_presets_pass(self, preset):
        assert jacobi_check(preset()) == []

    def test_tampered_bracket_fails(self):
        assert jacobi_check(broken_sl2())


class TestKillingForm:
    def test_su2_with_normalization_is_identity(self):
        k = killing_form(su2())  # preset carries the -1/2 scale
        assert M.mat_eq(k, M.identity(3))

    def test_sl2_unnormalized(self):
        k = killing_form(sl2(), scale=1)
        expected = M.as_matrix([[8, 0, 0], [0, 0, 4], [0, 4, 0]])
        assert M.mat_eq(k, expected)

    def test_abelian_is_singular(self):
        ab = LieAlgebra("u1", ("T",), {}, rank=1)
        with pytest.raises(SingularFormError):
            killing_form(ab)

    @pytest.mark.parametrize("preset", [sl2, su2, so21])
    def test_symmetric_nondegenerate(self, preset):
        k = killing_form(preset())
        assert M.mat_eq(k, M.transpose(k))
        assert not M.det(k).is_zero


class TestQuadraticCasimir:
    def test_sl2_matches_declared(self):
        p = quadratic_casimir(sl2())
        assert p.coeff((2, 0, 0)) == HPoly.const(Fraction(1, 4))
        assert p.coeff((0, 1, 1)) == HPoly.one()
        assert p == sl2().invariants[0]

    def test_su2_matches_declared(self):
        assert quadratic_casimir(su2()) == su2().invariants[0]

    def test_so21_matches_declared(self):
        p = quadratic_casimir(so21())
        assert p == so21().invariants[0]
        assert p.coeff((2, 0, 0)) == HPoly.one()
        assert p.coeff((0, 2, 0)) == HPoly.const(-1)

    @pytest.mark.parametrize("preset", [sl2, su2, so21])
    def test_always_invariant(self, preset):
        L = preset()
        assert is_invariant(quadratic_casimir(L), L)


class TestAdjoint:
    def test_cartan_direction_is_diagonal(self):
        ad = adjoint_matrix(sl2(), (1, 0, 0))
        assert M.mat_eq(ad, M.as_matrix([[0, 0, 0], [0, 2, 0], [0, 0, -2]]))

    def test_zero_vector(self):
        assert M.is_zero_matrix(adjoint_matrix(sl2(), (0, 0, 0)))

    def test_su2_rotation_mixing(self):
        ad = adjoint_matrix(su2(), (0, 0, 1))  # ad(G) swaps E and F
        assert M.mat_eq(ad, M.as_matrix([[0, -1, 0], [1, 0, 0], [0, 0, 0]]))


class TestRegularity:
    def test_semisimple_point(self):
        assert is_regular(sl2(), (1, 0, 0))

    def test_origin(self):
        assert not is_regular(sl2(), (0, 0, 0))

    def test_nilpotent_direction(self):
        assert not is_regular(sl2(), (0, 1, 0))

    def test_tests_agree_on_random_points(self):
        rng = random.Random(23)
        L = sl2()
        regular_seen = 0
        for _ in range(100):
            pt = [Fraction(rng.randint(-9, 9), rng.randint(1, 5)) for _ in range(3)]
            char_regular, rank = regularity_tests(L, pt)
            if char_regular:
                regular_seen += 1
                assert rank == L.rank  # ad-regular points must have independent differentials
            assert is_regular(L, pt) == char_regular
        assert regular_seen > 90  # random points are essentially always regular

    def test_inconsistent_invariants_detected(self):
        # declare a bogus "invariant" whose differential vanishes at a regular point
        bogus = CommPoly.monomial((2, 1, 1))
        L = sl2().with_fields(invariants=(bogus,))
        with pytest.raises(InconsistentRegularityError):
            is_regular(L, (1, 0, 0))


class TestChangeBasis:
    def test_split_to_compact(self):
        Lc = change_basis(sl2(), sl2_to_su2(), name="su2'", labels=("E", "F", "G"))
        ref = su2()
        assert Lc.structure == ref.structure

    def test_compact_to_noncompact(self):
        Lnc = change_basis(su2(), su2_to_so21(), name="so21'", labels=("G", "Et", "Ft"))
        assert Lnc.structure == so21().structure

    def test_identity(self):
        ident = BasisChange(tuple(tuple(r) for r in M.identity(3)))
        assert change_basis(sl2(), ident).structure == sl2().structure

    def test_round_trip(self):
        b = sl2_to_su2()
        there = change_basis(sl2(), b)
        back = change_basis(there, b.inverse())
        assert back.structure == sl2().structure

    def test_killing_congruence(self):
        b = sl2_to_su2()
        k_old = killing_form(sl2(), scale=1)
        k_new = killing_form(change_basis(sl2(), b), scale=1)
        rows = b.rows()
        assert M.mat_eq(k_new, M.mat_mul(rows, M.mat_mul(k_old, M.transpose(rows))))

    def test_singular_matrix_rejected(self):
        with pytest.raises(M.SingularMatrixError):
            BasisChange(((1, 0, 0), (0, 1, 0), (1, 1, 0)))

    def test_regularity_invariant(self):
        b = sl2_to_su2()
        Lc = change_basis(sl2(), b)
        rng = random.Random(5)
        for _ in range(20):
            pt = [GaussRat(Fraction(rng.randint(-5, 5), rng.randint(1, 3))) for _ in range(3)]
            moved = b.transform_element(pt)
            assert is_regular(sl2(), pt) == is_regular(Lc, moved)


class TestSheetSwap:
    def test_is_involution(self):
        rows = sheet_swap().rows()
        assert M.mat_eq(M.mat_mul(rows, rows), M.identity(3))

    def test_negates_g_and_et(self):
        rows = sheet_swap().rows()
        assert rows[0][0] == GaussRat(-1)
        assert rows[1][1] == GaussRat(-1)
        assert rows[2][2] == GaussRat(1)


class TestLoadAlgebra:
    def test_preset_name(self):
        assert load_algebra("sl2").labels == ("H", "X", "Y")

    def test_json_file_round_trip(self, tmp_path):
        data = {
            "name": "sl2-file",
            "labels": ["H", "X", "Y"],
            "rank": 1,
            "brackets": [
                {"i": "H", "j": "X", "coeffs": {"X": "2"}},
                {"i": "H", "j": "Y", "coeffs": {"Y": "-2"}},
                {"i": "X", "j": "Y", "coeffs": {"H": "1"}},
            ],
            "invariants": ["1/4*x_H^2 + x_X*x_Y"],
            "killing_scale": "1",
            "regular_witness": ["1", "0", "0"],
        }
        path = tmp_path / "alg.json"
        path.write_text(json.dumps(data))
        L = load_algebra(str(path))
        assert L.structure == sl2().structure
        assert L.invariants[0] == sl2().invariants[0]

    def test_reversed_bracket_orientation(self, tmp_path):
        data = {
            "name": "flip",
            "labels": ["A", "B"],
            "rank": 2,
            "brackets": [{"i": "B", "j": "A", "coeffs": {"A": "1"}}],
        }
        path = tmp_path / "flip.json"
        path.write_text(json.dumps(data))
        L = load_algebra(str(path))
        assert L.bracket(0, 1) == {0: GaussRat(-1)}

    def test_jacobi_enforced(self, tmp_path):
        data = {
            "name": "bad",
            "labels": ["H", "X", "Y"],
            "rank": 1,
            "brackets": [
                {"i": "H", "j": "X", "coeffs": {"X": "2"}},
                {"i": "H", "j": "Y", "coeffs": {"Y": "-2"}},
                {"i": "X", "j": "Y", "coeffs": {"H": "1", "X": "1"}},
            ],
        }
        path = tmp_path / "bad.json"
        path.write_text(json.dumps(data))
        with pytest.raises(ValueError, match="Jacobi"):
            load_algebra(str(path))
