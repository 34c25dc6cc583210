"""Cross-check against differential operators on homogeneous polynomials.

The two-variable Euler operators act on the space of homogeneous polynomials
of degree m (basis gamma^(m-j) rho^j); composing with the standard sl2
triple realizes the (m+1)-dimensional irreducible representation.  The
quadratic Casimir acts as the scalar (m/2)(m/2+1), and after rescaling the
generators by a numeric hbar it acts as l(l+hbar) with l = hbar*m/2, matching
the orbit algebra with constant c(h) = (m/2)(m/2+1) h^2.
"""

from __future__ import annotations

from fractions import Fraction

from . import matrices, uea
from .liealg import LieAlgebra
from .orbit import OrbitAlgebra, OrbitSpec, build_orbit_algebra
from .scalar import GaussRat, HPoly, ONE, ZERO, _coerce_gauss
from .uea import UElement


class NotScalarError(RuntimeError):
    """A matrix expected to be a multiple of the identity is not."""


def _basis_gamma_degrees(m: int):
    # basis vector j is gamma^(m-j) rho^j
    return [m - j for j in range(m + 1)]


def euler_operators(m: int):
    """Matrices of gamma d/dgamma, gamma d/drho, rho d/dgamma, rho d/drho on P_m."""
    if m < 0:
        raise ValueError("degree must be nonnegative")
    n = m + 1
    gg = matrices.zeros(n)
    gr = matrices.zeros(n)
    rg = matrices.zeros(n)
    rr = matrices.zeros(n)
    for j in range(n):
        k = m - j  # gamma-degree of basis vector j
        gg[j][j] = GaussRat(k)
        rr[j][j] = GaussRat(j)
        if j > 0:
            # gamma d/drho : gamma^k rho^j -> j gamma^(k+1) rho^(j-1)
            gr[j - 1][j] = GaussRat(j)
        if j < m:
            # rho d/dgamma : gamma^k rho^j -> k gamma^(k-1) rho^(j+1)
            rg[j + 1][j] = GaussRat(k)
    return gg, gr, rg, rr


def p_map(m: int):
    """Representation matrices (for X, Y, H) on P_m.

    X acts as -rho d/dgamma, Y as -gamma d/drho, H as -gamma d/dgamma
    + rho d/drho; these satisfy [H,X] = 2X, [H,Y] = -2Y, [X,Y] = H exactly.
    """
    gg, gr, rg, rr = euler_operators(m)
    x = matrices.mat_scale(rg, -1)
    y = matrices.mat_scale(gr, -1)
    h = matrices.mat_sub(rr, gg)
    return x, y, h


def scalar_of(matrix) -> GaussRat:
    """The scalar when the matrix is a multiple of the identity; else raises."""
    n = len(matrix)
    if n == 0:
        return ZERO
    s = matrix[0][0]
    for i in range(n):
        for j in range(n):
            expected = s if i == j else ZERO
            if matrix[i][j] != expected:
                raise NotScalarError("matrix is not a multiple of the identity")
    return s


def casimir_matrix(m: int, hbar=1):
    """(1/2)(XY + YX + (1/2) H^2) with generators scaled by hbar."""
    hbar = _coerce_gauss(hbar)
    x, y, h = (matrices.mat_scale(g, hbar) for g in p_map(m))
    half = GaussRat(Fraction(1, 2))
    quarter = GaussRat(Fraction(1, 4))
    xy = matrices.mat_mul(x, y)
    yx = matrices.mat_mul(y, x)
    hh = matrices.mat_mul(h, h)
    return matrices.mat_add(
        matrices.mat_scale(matrices.mat_add(xy, yx), half),
        matrices.mat_scale(hh, quarter),
    )


def casimir_scalar(m: int) -> GaussRat:
    """Scalar action of the Casimir on P_m; must equal (m/2)(m/2+1)."""
    s = scalar_of(casimir_matrix(m))
    expected = GaussRat(Fraction(m, 2) * (Fraction(m, 2) + 1))
    if s != expected:
        raise NotScalarError(f"Casimir scalar {s} differs from {expected}")
    return s


def rep_matrix(u: UElement, m: int, hbar) -> list:
    """Image of an enveloping-algebra element under the rescaled representation.

    Generator order is (H, X, Y) as in the split preset; each generator goes
    to hbar times its matrix and coefficients are evaluated at h = hbar.
    """
    hbar = _coerce_gauss(hbar)
    x, y, h = p_map(m)
    gens = [matrices.mat_scale(g, hbar) for g in (h, x, y)]
    n = m + 1
    out = matrices.zeros(n)
    for word, coeff in u.terms.items():
        acc = matrices.identity(n)
        for i in word:
            acc = matrices.mat_mul(acc, gens[i])
        out = matrices.mat_add(out, matrices.mat_scale(acc, coeff.eval(hbar)))
    return out


def sl2_orbit_for_degree(m: int, algebra: LieAlgebra) -> OrbitAlgebra:
    """Split-form orbit algebra with constant c(h) = (m/2)(m/2+1) h^2.

    Specializing h to hbar makes the quantum Casimir act by l(l+hbar) with
    l = hbar m/2 on P_m, so the defining relation annihilates the
    representation.
    """
    scalar = GaussRat(Fraction(m, 2) * (Fraction(m, 2) + 1))
    c_of_h = HPoly.h(2, scalar)
    return build_orbit_algebra(
        OrbitSpec(algebra, algebra.invariants, (c_of_h,))
    )


def rescaled_casimir_check(m: int, hbar, algebra: LieAlgebra) -> bool:
    """Rescaled Casimir acts as l(l+hbar), l = hbar m/2, and the orbit
    algebra's defining relation annihilates the representation."""
    hbar = _coerce_gauss(hbar)
    ell = hbar * GaussRat(Fraction(m, 2))
    try:
        s = scalar_of(casimir_matrix(m, hbar))
    except NotScalarError:
        return False
    if s != ell * (ell + hbar):
        return False
    orb = sl2_orbit_for_degree(m, algebra)
    relation = orb.ideal_gens[0]
    return matrices.is_zero_matrix(rep_matrix(relation, m, hbar))


def d_centrality_check(m: int) -> bool:
    """The degree operator is central and the Casimir equals (D/2)(D/2+1)."""
    gg, gr, rg, rr = euler_operators(m)
    d = matrices.mat_add(gg, rr)
    if not matrices.mat_eq(d, matrices.mat_scale(matrices.identity(m + 1), m)):
        return False
    for op in (gg, gr, rg, rr):
        if not matrices.is_zero_matrix(matrices.commutator(d, op)):
            return False
    half_m = GaussRat(Fraction(m, 2))
    expected = matrices.mat_scale(matrices.identity(m + 1), half_m * (half_m + 1))
    return matrices.mat_eq(casimir_matrix(m), expected)


def aggregate_injectivity_rank(max_degree: int, max_m: int):
    """(number of PBW words, joint rank) of the evaluation map on all P_m.

    An enveloping-algebra element of degree <= max_degree vanishing in every
    representation up to max_m must vanish once the joint rank equals the
    number of words; this is the bounded-degree faithfulness statement.
    """
    words = []
    for deg in range(max_degree + 1):
        words.extend(_sorted_words(deg, 3))
    columns = []
    for w in words:
        col = []
        for m in range(max_m + 1):
            img = rep_matrix(UElement.monomial(w), m, 1)
            col.extend(entry for row in img for entry in row)
        columns.append(col)
    matrix = [[columns[j][i] for j in range(len(words))] for i in range(len(columns[0]))]
    return len(words), matrices.rank(matrix)


def _sorted_words(degree: int, ngen: int):
    if degree == 0:
        yield ()
        return
    def rec(prefix, start):
        if len(prefix) == degree:
            yield tuple(prefix)
            return
        for i in range(start, ngen):
            yield from rec(prefix + [i], i)
    yield from rec([], 0)


def representation_table(max_m: int, hbar):
    """Row per degree: (m, dim, casimir scalar, rescaled scalar, all checks ok)."""
    hbar = _coerce_gauss(hbar)
    from .liealg import sl2

    algebra = sl2()
    rows = []
    for m in range(max_m + 1):
        scalar = casimir_scalar(m)
        ell = hbar * GaussRat(Fraction(m, 2))
        rescaled = scalar_of(casimir_matrix(m, hbar))
        ok = (
            rescaled == ell * (ell + hbar)
            and d_centrality_check(m)
            and rescaled_casimir_check(m, hbar, algebra)
        )
        rows.append((m, m + 1, scalar, rescaled, ok))
    return rows
