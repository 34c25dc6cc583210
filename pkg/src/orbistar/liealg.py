"""Lie algebras given by structure constants.

Provides validation (Jacobi report), the Killing form and its quadratic
Casimir, adjoint matrices, regularity of points in the dual, basis changes,
and the three bundled presets (split sl2, its compact form, and the
noncompact 2+1 orthogonal form).
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction

from . import matrices
from .commpoly import CommPoly, is_invariant, jacobian_rank
from .scalar import GaussRat, HPoly, I, ONE, ZERO, _coerce_gauss


class SingularFormError(ArithmeticError):
    """Killing form is degenerate: the algebra is not semisimple."""


class InconsistentRegularityError(RuntimeError):
    """Characteristic-coefficient and Jacobian regularity tests disagree."""


class LieAlgebra:
    """Finite-dimensional Lie algebra by structure constants.

    ``structure`` maps (i, j) with i < j to {k: c} for [X_i, X_j] = sum c X_k;
    antisymmetry fills in the rest.  ``rank`` is declared by the caller and
    validated against the supplied invariant polynomials when present.
    """

    __slots__ = (
        "name", "labels", "structure", "rank", "invariants",
        "killing_scale", "casimir_scale", "regular_witness",
        "_pbw_cache",
    )

    def __init__(self, name, labels, structure, rank, invariants=None,
                 killing_scale=1, casimir_scale=1, regular_witness=None):
        labels = tuple(labels)
        if len(set(labels)) != len(labels):
            raise ValueError("generator labels must be distinct")
        clean = {}
        for (i, j), row in structure.items():
            if not (0 <= i < j < len(labels)):
                raise ValueError(f"bracket key ({i},{j}) must satisfy i < j in range")
            row = {k: _coerce_gauss(c) for k, c in row.items() if _coerce_gauss(c)}
            if row:
                clean[(i, j)] = row
        invariants = tuple(invariants) if invariants else ()
        if invariants and len(invariants) != rank:
            raise ValueError("number of invariant polynomials must equal the rank")
        for p in invariants:
            if p.nvars != len(labels):
                raise ValueError("invariant polynomial over the wrong variable count")
        object.__setattr__(self, "name", name)
        object.__setattr__(self, "labels", labels)
        object.__setattr__(self, "structure", clean)
        object.__setattr__(self, "rank", rank)
        object.__setattr__(self, "invariants", invariants)
        object.__setattr__(self, "killing_scale", _coerce_gauss(killing_scale))
        object.__setattr__(self, "casimir_scale", _coerce_gauss(casimir_scale))
        object.__setattr__(self, "regular_witness",
                           tuple(_coerce_gauss(x) for x in regular_witness) if regular_witness else None)
        object.__setattr__(self, "_pbw_cache", {})

    def __setattr__(self, name, value):
        raise AttributeError("LieAlgebra is immutable")

    @property
    def dim(self) -> int:
        return len(self.labels)

    def label_index(self, label: str) -> int:
        try:
            return self.labels.index(label)
        except ValueError:
            raise KeyError(f"unknown generator {label!r}") from None

    def bracket(self, i: int, j: int) -> dict:
        """[X_i, X_j] as a map k -> coefficient (antisymmetry applied)."""
        if i == j:
            return {}
        if i < j:
            return self.structure.get((i, j), {})
        return {k: -c for k, c in self.structure.get((j, i), {}).items()}

    def ad(self, i: int):
        """Matrix of ad(X_i): column j holds [X_i, X_j]."""
        n = self.dim
        m = matrices.zeros(n, n)
        for j in range(n):
            for k, c in self.bracket(i, j).items():
                m[k][j] = c
        return m

    def with_fields(self, **kw) -> "LieAlgebra":
        base = dict(
            name=self.name, labels=self.labels, structure=self.structure,
            rank=self.rank, invariants=self.invariants,
            killing_scale=self.killing_scale, casimir_scale=self.casimir_scale,
            regular_witness=self.regular_witness,
        )
        base.update(kw)
        return LieAlgebra(**base)

    def extended(self, extra_labels) -> "LieAlgebra":
        """Append commuting (central) generators; brackets are unchanged."""
        extra = tuple(extra_labels)
        if not extra:
            return self
        return LieAlgebra(
            name=self.name,
            labels=self.labels + extra,
            structure=self.structure,
            rank=self.rank,
            invariants=(),
            killing_scale=self.killing_scale,
            casimir_scale=self.casimir_scale,
        )

    def rescaled(self, factor) -> "LieAlgebra":
        """Same space with bracket scaled by a constant."""
        factor = _coerce_gauss(factor)
        scaled = {
            key: {k: factor * c for k, c in row.items()}
            for key, row in self.structure.items()
        }
        return LieAlgebra(
            name=f"{self.name}@{factor}", labels=self.labels, structure=scaled,
            rank=self.rank, invariants=(),
            killing_scale=self.killing_scale, casimir_scale=self.casimir_scale,
        )

    def __repr__(self):
        return f"LieAlgebra({self.name!r}, dim={self.dim}, rank={self.rank})"


@dataclass(frozen=True)
class BasisChange:
    """Invertible matrix whose rows express new generators in the old basis."""

    matrix: tuple

    def __post_init__(self):
        m = matrices.as_matrix(self.matrix)
        if matrices.det(m).is_zero:
            raise matrices.SingularMatrixError("basis change must be invertible")
        object.__setattr__(self, "matrix", tuple(tuple(row) for row in m))

    @property
    def dim(self):
        return len(self.matrix)

    def rows(self):
        return [list(r) for r in self.matrix]

    def inverse(self) -> "BasisChange":
        return BasisChange(tuple(tuple(r) for r in matrices.inverse(self.rows())))

    def transform_element(self, v):
        """New-basis coefficients of the element with old-basis coefficients v.

        Rows of the matrix express new generators in old ones, so element
        coefficients go through the inverse transpose.
        """
        m = matrices.inverse(matrices.transpose(self.rows()))
        return matrices.mat_vec(m, [_coerce_gauss(x) for x in v])


# ---------------------------------------------------------------------------
# validation and invariants
# ---------------------------------------------------------------------------

def jacobi_check(algebra: LieAlgebra):
    """Return the list of index triples violating the Jacobi identity.

    Each entry is ``(i, j, k, residual)`` where residual maps generator index
    to the nonzero coefficient of [[X_i,X_j],X_k] + cyclic.
    """
    n = algebra.dim
    violations = []
    for i in range(n):
        for j in range(i + 1, n):
            for k in range(j + 1, n):
                residual = {}
                for (a, b, c) in ((i, j, k), (j, k, i), (k, i, j)):
                    for m, cm in algebra.bracket(a, b).items():
                        for p, cp in algebra.bracket(m, c).items():
                            residual[p] = residual.get(p, ZERO) + cm * cp
                residual = {p: v for p, v in residual.items() if v}
                if residual:
                    violations.append((i, j, k, residual))
    return violations


def killing_form(algebra: LieAlgebra, scale=None):
    """Scaled trace form K(X_i, X_j) = scale * Tr(ad X_i ad X_j).

    Raises SingularFormError when the form is degenerate.
    """
    scale = algebra.killing_scale if scale is None else _coerce_gauss(scale)
    n = algebra.dim
    ads = [algebra.ad(i) for i in range(n)]
    k = matrices.zeros(n, n)
    for i in range(n):
        for j in range(i, n):
            prod = matrices.mat_mul(ads[i], ads[j])
            tr = sum((prod[t][t] for t in range(n)), ZERO)
            k[i][j] = k[j][i] = scale * tr
    if matrices.det(k).is_zero:
        raise SingularFormError(f"Killing form of {algebra.name} is degenerate")
    return k


def quadratic_casimir(algebra: LieAlgebra, scale=None) -> CommPoly:
    """Degree-two invariant sum g^ij x_i x_j from the inverse Killing matrix.

    Computed from the unscaled trace form and multiplied by ``scale``
    (default: the algebra's ``casimir_scale``), so presets can match their
    conventional normalizations exactly.
    """
    scale = algebra.casimir_scale if scale is None else _coerce_gauss(scale)
    k = killing_form(algebra, scale=1)
    ginv = matrices.inverse(k)
    n = algebra.dim
    terms = {}
    for i in range(n):
        for j in range(n):
            if ginv[i][j].is_zero:
                continue
            exp = [0] * n
            exp[i] += 1
            exp[j] += 1
            exp = tuple(exp)
            cur = terms.get(exp, HPoly.zero())
            terms[exp] = cur + HPoly.const(scale * ginv[i][j])
    return CommPoly(n, terms)


def adjoint_matrix(algebra: LieAlgebra, v):
    """Matrix of ad(v) for v given by basis coefficients."""
    v = [_coerce_gauss(x) for x in v]
    n = algebra.dim
    out = matrices.zeros(n, n)
    for i, c in enumerate(v):
        if c.is_zero:
            continue
        out = matrices.mat_add(out, matrices.mat_scale(algebra.ad(i), c))
    return out


def regularity_tests(algebra: LieAlgebra, point):
    """(q_m != 0, jacobian rank or None) for the two regularity criteria."""
    point = [_coerce_gauss(x) for x in point]
    coeffs = matrices.char_poly(adjoint_matrix(algebra, point))
    q_m = coeffs[algebra.rank]
    char_regular = not q_m.is_zero
    rank = None
    invs = list(algebra.invariants)
    if not invs:
        try:
            invs = [quadratic_casimir(algebra)] if algebra.rank == 1 else []
        except SingularFormError:
            invs = []
    if invs and len(invs) == algebra.rank:
        rank = jacobian_rank(invs, point)
    return char_regular, rank


def is_regular(algebra: LieAlgebra, point) -> bool:
    """True iff the T^rank coefficient of det(T - ad(point)) is nonzero.

    When invariants are available the Jacobian criterion is cross-checked:
    a regular point must have independent invariant differentials, and a
    failure of that implication signals corrupted invariant data.
    """
    char_regular, rank = regularity_tests(algebra, point)
    if char_regular and rank is not None and rank < algebra.rank:
        raise InconsistentRegularityError(
            f"point {point} is ad-regular but the invariant Jacobian has rank {rank}"
        )
    return char_regular


def change_basis(algebra: LieAlgebra, change: BasisChange, name=None,
                 labels=None) -> LieAlgebra:
    """Transport the structure constants to the basis given by the rows of B."""
    if change.dim != algebra.dim:
        raise ValueError("basis change has the wrong dimension")
    b = change.rows()
    binv = matrices.inverse(b)
    n = algebra.dim
    structure = {}
    for a in range(n):
        for bb in range(a + 1, n):
            accum = [ZERO] * n
            for i in range(n):
                if b[a][i].is_zero:
                    continue
                for j in range(n):
                    f = b[a][i] * b[bb][j]
                    if f.is_zero:
                        continue
                    for k, c in algebra.bracket(i, j).items():
                        for t in range(n):
                            accum[t] = accum[t] + f * c * binv[k][t]
            row = {t: c for t, c in enumerate(accum) if c}
            if row:
                structure[(a, bb)] = row
    return LieAlgebra(
        name=name or f"{algebra.name}'",
        labels=labels or tuple(f"Y{t}" for t in range(n)),
        structure=structure,
        rank=algebra.rank,
    )


# ---------------------------------------------------------------------------
# presets
# ---------------------------------------------------------------------------

def _poly(nvars, entries):
    return CommPoly(nvars, {tuple(e): HPoly.const(c) for e, c in entries})


def sl2() -> LieAlgebra:
    """Split form, basis (H, X, Y): [H,X]=2X, [H,Y]=-2Y, [X,Y]=H.

    The invariant is (1/4) x_H^2 + x_X x_Y; witness point is the semisimple
    direction x_H = 1.
    """
    half = Fraction(1, 4)
    inv = _poly(3, [((2, 0, 0), GaussRat(half)), ((0, 1, 1), ONE)])
    return LieAlgebra(
        name="sl2",
        labels=("H", "X", "Y"),
        structure={
            (0, 1): {1: GaussRat(2)},
            (0, 2): {2: GaussRat(-2)},
            (1, 2): {0: ONE},
        },
        rank=1,
        invariants=[inv],
        killing_scale=1,
        casimir_scale=2,
        regular_witness=(1, 0, 0),
    )


def su2() -> LieAlgebra:
    """Compact form, basis (E, F, G): [E,F]=G, [F,G]=E, [G,E]=F.

    Invariant -(x_E^2 + x_F^2 + x_G^2); the -1/2 Killing normalization turns
    the trace form into the identity matrix.
    """
    inv = _poly(3, [((2, 0, 0), -ONE), ((0, 2, 0), -ONE), ((0, 0, 2), -ONE)])
    return LieAlgebra(
        name="su2",
        labels=("E", "F", "G"),
        structure={
            (0, 1): {2: ONE},
            (1, 2): {0: ONE},
            (0, 2): {1: -ONE},
        },
        rank=1,
        invariants=[inv],
        killing_scale=GaussRat(Fraction(-1, 2)),
        casimir_scale=2,
        regular_witness=(0, 0, 1),
    )


def so21() -> LieAlgebra:
    """Noncompact form, basis (G, Et, Ft): [G,Et]=Ft, [G,Ft]=-Et, [Et,Ft]=-G.

    Et and Ft are i-times the compact generators E and F.  The invariant is
    x_G^2 - x_Et^2 - x_Ft^2, whose level sets a^2 are the two-sheeted
    hyperboloids.
    """
    inv = _poly(3, [((2, 0, 0), ONE), ((0, 2, 0), -ONE), ((0, 0, 2), -ONE)])
    return LieAlgebra(
        name="so21",
        labels=("G", "Et", "Ft"),
        structure={
            (0, 1): {2: ONE},
            (0, 2): {1: -ONE},
            (1, 2): {0: -ONE},
        },
        rank=1,
        invariants=[inv],
        killing_scale=1,
        casimir_scale=-2,
        regular_witness=(1, 0, 0),
    )


def sl2_to_su2() -> BasisChange:
    """E = (X - Y)/2, F = (i/2)(X + Y), G = (i/2) H over the (H, X, Y) basis."""
    h = GaussRat(Fraction(1, 2))
    ih = I * h
    return BasisChange((
        (ZERO, h, -h),
        (ZERO, ih, ih),
        (ih, ZERO, ZERO),
    ))


def su2_to_so21() -> BasisChange:
    """G stays, Et = iE, Ft = iF over the (E, F, G) basis, reordering to (G, Et, Ft)."""
    return BasisChange((
        (ZERO, ZERO, ONE),
        (I, ZERO, ZERO),
        (ZERO, I, ZERO),
    ))


def sheet_swap() -> BasisChange:
    """Involution of so21 negating G and Et; swaps the two hyperboloid sheets."""
    return BasisChange((
        (-ONE, ZERO, ZERO),
        (ZERO, -ONE, ZERO),
        (ZERO, ZERO, ONE),
    ))


PRESETS = {"sl2": sl2, "su2": su2, "so21": so21}


# ---------------------------------------------------------------------------
# file loading
# ---------------------------------------------------------------------------

def load_algebra(source) -> LieAlgebra:
    """Build a LieAlgebra from a preset name, JSON file path, or parsed dict.

    Schema: {name, labels: [...], rank, brackets: [{i, j, coeffs: {k: "c"}}],
    invariants: ["expr", ...], killing_scale: "q"}.  Bracket endpoints may be
    labels or 0-based indices; coefficient strings use the GaussRat form.
    """
    if isinstance(source, LieAlgebra):
        return source
    if isinstance(source, str) and source in PRESETS:
        return PRESETS[source]()
    if isinstance(source, str):
        with open(source, "r", encoding="utf-8") as fh:
            source = json.load(fh)
    if not isinstance(source, dict):
        raise TypeError("expected a preset name, file path, or dict")

    labels = tuple(source["labels"])

    def gen_index(x):
        if isinstance(x, int):
            return x
        return labels.index(x)

    structure = {}
    for entry in source.get("brackets", []):
        i, j = gen_index(entry["i"]), gen_index(entry["j"])
        row = {gen_index(k): GaussRat.parse(str(v)) for k, v in entry["coeffs"].items()}
        if i == j:
            raise ValueError("bracket of a generator with itself must be omitted")
        if i > j:
            i, j = j, i
            row = {k: -c for k, c in row.items()}
        structure[(i, j)] = row

    invariants = []
    if source.get("invariants"):
        from .exprs import parse_commutative

        for text in source["invariants"]:
            invariants.append(parse_commutative(text, labels))

    algebra = LieAlgebra(
        name=source.get("name", "algebra"),
        labels=labels,
        structure=structure,
        rank=source["rank"],
        invariants=invariants or None,
        killing_scale=GaussRat.parse(str(source.get("killing_scale", "1"))),
        casimir_scale=GaussRat.parse(str(source.get("casimir_scale", "1"))),
        regular_witness=[GaussRat.parse(str(x)) for x in source["regular_witness"]]
        if source.get("regular_witness") else None,
    )
    bad = jacobi_check(algebra)
    if bad:
        raise ValueError(f"structure constants violate the Jacobi identity: {bad[:3]}")
    for p in algebra.invariants:
        if not is_invariant(p, algebra):
            raise ValueError("declared invariant polynomial is not ad-invariant")
    return algebra
