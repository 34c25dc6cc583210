"""Commutative polynomials on the dual of a Lie algebra.

Exponent vectors are integer tuples of fixed length; coefficients are HPoly,
so h-dependent and h-free polynomials share one representation.  The module
carries the Lie-Poisson bracket, a small Buchberger engine for the orbit
ideal, and the enumeration of standard monomials (the residue basis of the
quotient by the ideal).
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import NamedTuple

from .scalar import GaussRat, HPoly, ONE, ZERO, _coerce_gauss


def _coerce_hpoly(c) -> HPoly:
    if isinstance(c, HPoly):
        return c
    return HPoly.const(_coerce_gauss(c))


class CommPoly:
    """Polynomial as a map exponent-vector -> HPoly coefficient."""

    __slots__ = ("nvars", "terms")

    def __init__(self, nvars: int, terms=None):
        clean = {}
        for exp, c in (terms or {}).items():
            c = _coerce_hpoly(c)
            if c.is_zero:
                continue
            exp = tuple(exp)
            if len(exp) != nvars:
                raise ValueError(f"exponent {exp} has length != {nvars}")
            clean[exp] = c
        object.__setattr__(self, "nvars", nvars)
        object.__setattr__(self, "terms", clean)

    def __setattr__(self, name, value):
        raise AttributeError("CommPoly is immutable")

    # -- constructors ---------------------------------------------------------

    @classmethod
    def zero(cls, nvars: int) -> "CommPoly":
        return cls(nvars, {})

    @classmethod
    def constant(cls, nvars: int, c) -> "CommPoly":
        return cls(nvars, {(0,) * nvars: _coerce_hpoly(c)})

    @classmethod
    def variable(cls, i: int, nvars: int) -> "CommPoly":
        exp = tuple(1 if j == i else 0 for j in range(nvars))
        return cls(nvars, {exp: HPoly.one()})

    @classmethod
    def monomial(cls, exp, coeff=1) -> "CommPoly":
        exp = tuple(exp)
        return cls(len(exp), {exp: _coerce_hpoly(coeff)})

    # -- structure ------------------------------------------------------------

    @property
    def is_zero(self) -> bool:
        return not self.terms

    @property
    def degree(self) -> int:
        """Total degree; -1 for the zero polynomial."""
        return max((sum(e) for e in self.terms), default=-1)

    @property
    def is_h_free(self) -> bool:
        return all(c.is_scalar for c in self.terms.values())

    def coeff(self, exp) -> HPoly:
        return self.terms.get(tuple(exp), HPoly.zero())

    def __bool__(self):
        return not self.is_zero

    def __eq__(self, other):
        if not isinstance(other, CommPoly):
            return NotImplemented
        return self.nvars == other.nvars and self.terms == other.terms

    def __hash__(self):
        return hash((self.nvars, frozenset(self.terms.items())))

    # -- ring operations -------------------------------------------------------

    def _check(self, other: "CommPoly"):
        if self.nvars != other.nvars:
            raise ValueError("mixing polynomials over different variable sets")

    def __add__(self, other: "CommPoly") -> "CommPoly":
        self._check(other)
        out = dict(self.terms)
        for exp, c in other.terms.items():
            out[exp] = out.get(exp, HPoly.zero()) + c
        return CommPoly(self.nvars, out)

    def __sub__(self, other: "CommPoly") -> "CommPoly":
        return self + (-other)

    def __neg__(self) -> "CommPoly":
        return CommPoly(self.nvars, {e: -c for e, c in self.terms.items()})

    def __mul__(self, other: "CommPoly") -> "CommPoly":
        self._check(other)
        out = {}
        for ea, ca in self.terms.items():
            for eb, cb in other.terms.items():
                exp = tuple(x + y for x, y in zip(ea, eb))
                prod = ca * cb
                out[exp] = out.get(exp, HPoly.zero()) + prod
        return CommPoly(self.nvars, out)

    def scale(self, c) -> "CommPoly":
        c = _coerce_hpoly(c)
        return CommPoly(self.nvars, {e: k * c for e, k in self.terms.items()})

    def __pow__(self, n: int) -> "CommPoly":
        if n < 0:
            raise ValueError("negative polynomial power")
        out = CommPoly.constant(self.nvars, 1)
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def partial(self, i: int) -> "CommPoly":
        out = {}
        for exp, c in self.terms.items():
            if exp[i] == 0:
                continue
            new = list(exp)
            new[i] -= 1
            out[tuple(new)] = c * GaussRat(exp[i])
        return CommPoly(self.nvars, out)

    def eval(self, point) -> HPoly:
        """Substitute GaussRat values for the variables; h stays symbolic."""
        point = [_coerce_gauss(x) for x in point]
        acc = HPoly.zero()
        for exp, c in self.terms.items():
            v = ONE
            for x, e in zip(point, exp):
                if e:
                    v = v * x**e
            acc = acc + c * v
        return acc

    def eval_h(self, h0) -> "CommPoly":
        return CommPoly(self.nvars, {e: HPoly.const(c.eval(h0)) for e, c in self.terms.items()})

    def extend_vars(self, nvars: int) -> "CommPoly":
        """Reinterpret over a larger variable set (new variables appended)."""
        if nvars < self.nvars:
            raise ValueError("cannot shrink the variable set")
        pad = (0,) * (nvars - self.nvars)
        return CommPoly(nvars, {e + pad: c for e, c in self.terms.items()})

    def __repr__(self):
        return f"CommPoly({self.nvars}, {self.terms!r})"


# ---------------------------------------------------------------------------
# monomial orders
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class MonomialOrder:
    """Degree-lexicographic order with a configurable variable precedence.

    ``precedence`` lists variable indices from most to least significant.
    Degree dominates, so rewriting a monomial modulo the ideal never raises
    total degree.
    """

    precedence: tuple
    kind: str = "deglex"

    def __post_init__(self):
        if self.kind != "deglex":
            raise ValueError(f"unsupported order kind {self.kind!r}")
        object.__setattr__(self, "precedence", tuple(self.precedence))
        if sorted(self.precedence) != list(range(len(self.precedence))):
            raise ValueError("precedence must be a permutation of the variable indices")

    @classmethod
    def default(cls, nvars: int) -> "MonomialOrder":
        return cls(tuple(range(nvars)))

    def key(self, exp):
        """Sort key: ascending key corresponds to ascending monomials."""
        return (sum(exp), tuple(exp[i] for i in self.precedence))

    def leading_monomial(self, p: CommPoly):
        if p.is_zero:
            return None
        return max(p.terms, key=self.key)

    def sorted_terms(self, p: CommPoly, reverse=False):
        return sorted(p.terms.items(), key=lambda kv: self.key(kv[0]), reverse=reverse)


def monomial_divides(a, b) -> bool:
    return all(x <= y for x, y in zip(a, b))


def monomial_div(a, b):
    return tuple(x - y for x, y in zip(a, b))


def monomial_mul(a, b):
    return tuple(x + y for x, y in zip(a, b))


def monomial_lcm(a, b):
    return tuple(max(x, y) for x, y in zip(a, b))


# ---------------------------------------------------------------------------
# ideal bases
# ---------------------------------------------------------------------------

class Reduction(NamedTuple):
    remainder: CommPoly
    quotients: list  # one CommPoly per original generator


@dataclass(frozen=True)
class IdealBasis:
    """Completed, inter-reduced basis of an ideal with cofactor bookkeeping.

    ``cofactors[j]`` expresses ``basis[j]`` as a combination of the original
    generators, which lets normal forms report quotients per generator.
    """

    generators: tuple
    basis: tuple
    cofactors: tuple
    order: MonomialOrder
    leading: tuple = field(default=())

    @property
    def nvars(self) -> int:
        if self.generators:
            return self.generators[0].nvars
        return len(self.order.precedence)

    def is_standard(self, exp) -> bool:
        return not any(monomial_divides(lm, exp) for lm in self.leading)


def _divide(f: CommPoly, basis, order: MonomialOrder):
    """Multivariate division: f = sum q_j basis_j + r, r in standard monomials."""
    nv = f.nvars
    quots = [CommPoly.zero(nv) for _ in basis]
    rem = {}
    work = dict(f.terms)
    lms = [order.leading_monomial(g) for g in basis]
    while work:
        exp = max(work, key=order.key)
        coeff = work.pop(exp)
        if coeff.is_zero:
            continue
        for j, g in enumerate(basis):
            lm = lms[j]
            if lm is not None and monomial_divides(lm, exp):
                lc = g.terms[lm]
                if not lc.is_scalar:
                    raise ValueError("divisor leading coefficient must be h-free")
                q = coeff * (ONE / lc.constant)
                shift = monomial_div(exp, lm)
                quots[j] = quots[j] + CommPoly.monomial(shift, q)
                for ge, gc in g.terms.items():
                    if ge == lm:
                        continue
                    tgt = monomial_mul(shift, ge)
                    work[tgt] = work.get(tgt, HPoly.zero()) - q * gc
                    if work[tgt].is_zero:
                        del work[tgt]
                break
        else:
            rem[exp] = rem.get(exp, HPoly.zero()) + coeff
    return quots, CommPoly(nv, rem)


def _spair(f, g, order):
    lf, lg = order.leading_monomial(f), order.leading_monomial(g)
    lcm = monomial_lcm(lf, lg)
    mf = CommPoly.monomial(monomial_div(lcm, lf), ONE / f.terms[lf].constant)
    mg = CommPoly.monomial(monomial_div(lcm, lg), ONE / g.terms[lg].constant)
    return mf, mg


def groebner(gens, order: MonomialOrder | None = None) -> IdealBasis:
    """Buchberger completion with the coprime-criterion, plus inter-reduction.

    Generators must be h-free.  The returned basis is monic and sorted by
    leading monomial; cofactors over the input generators are maintained
    through every S-polynomial, reduction and scaling step.
    """
    gens = [g for g in gens]
    if order is None:
        nv = gens[0].nvars if gens else 0
        order = MonomialOrder.default(nv)
    for g in gens:
        if not g.is_h_free:
            raise ValueError("ideal generators must not depend on h")
    nv = gens[0].nvars if gens else len(order.precedence)

    basis = []
    cof = []
    for i, g in enumerate(gens):
        if g.is_zero:
            continue
        unit = [CommPoly.zero(nv) for _ in gens]
        unit[i] = CommPoly.constant(nv, 1)
        basis.append(g)
        cof.append(unit)

    pairs = list(itertools.combinations(range(len(basis)), 2))
    while pairs:
        i, j = pairs.pop(0)
        li = order.leading_monomial(basis[i])
        lj = order.leading_monomial(basis[j])
        if monomial_lcm(li, lj) == monomial_mul(li, lj):
            continue  # coprime leading monomials: S-poly reduces to zero
        mi, mj = _spair(basis[i], basis[j], order)
        s = mi * basis[i] - mj * basis[j]
        s_cof = [mi * a - mj * b for a, b in zip(cof[i], cof[j])]
        quots, rem = _divide(s, basis, order)
        if rem.is_zero:
            continue
        for q, c in zip(quots, cof):
            if not q.is_zero:
                s_cof = [a - q * b for a, b in zip(s_cof, c)]
        k = len(basis)
        basis.append(rem)
        cof.append(s_cof)
        pairs.extend((t, k) for t in range(k))

    # inter-reduce: every element is in normal form w.r.t. the others
    changed = True
    while changed:
        changed = False
        for i in range(len(basis)):
            if basis[i] is None:
                continue
            others = [b for t, b in enumerate(basis) if t != i and b is not None]
            others_cof = [c for t, c in enumerate(cof) if t != i and basis[t] is not None]
            quots, rem = _divide(basis[i], others, order)
            if rem != basis[i]:
                changed = True
                if rem.is_zero:
                    basis[i] = None
                    continue
                new_cof = cof[i]
                for q, c in zip(quots, others_cof):
                    if not q.is_zero:
                        new_cof = [a - q * b for a, b in zip(new_cof, c)]
                basis[i] = rem
                cof[i] = new_cof

    final = [(b, c) for b, c in zip(basis, cof) if b is not None]
    # monic normalization
    normed = []
    for b, c in final:
        lm = order.leading_monomial(b)
        lc = b.terms[lm].constant
        inv = CommPoly.constant(nv, ONE / lc)
        normed.append((inv * b, [inv * x for x in c]))
    normed.sort(key=lambda bc: order.key(order.leading_monomial(bc[0])))
    return IdealBasis(
        generators=tuple(gens),
        basis=tuple(b for b, _ in normed),
        cofactors=tuple(tuple(c) for _, c in normed),
        order=order,
        leading=tuple(order.leading_monomial(b) for b, _ in normed),
    )


def normal_form(f: CommPoly, ideal: IdealBasis) -> Reduction:
    """Unique remainder of f modulo the ideal plus quotients per generator.

    The remainder is supported on standard monomials; the reconstruction
    f = sum b_i (generator_i) + remainder holds exactly, with
    deg b_i + deg generator_i <= deg f under the degree-compatible order.
    """
    if f.nvars != ideal.nvars:
        raise ValueError("polynomial and ideal live over different variable sets")
    quots, rem = _divide(f, list(ideal.basis), ideal.order)
    per_gen = [CommPoly.zero(f.nvars) for _ in ideal.generators]
    for q, c in zip(quots, ideal.cofactors):
        if q.is_zero:
            continue
        for i, t in enumerate(c):
            if not t.is_zero:
                per_gen[i] = per_gen[i] + q * t
    return Reduction(rem, per_gen)


def standard_monomials(ideal: IdealBasis, max_degree: int):
    """All monomials of degree <= max_degree outside the leading-term ideal.

    Returned ascending in the active order, so the listing is deterministic.
    """
    nv = ideal.nvars
    out = []
    for deg in range(max_degree + 1):
        for exp in _compositions(deg, nv):
            if ideal.is_standard(exp):
                out.append(exp)
    out.sort(key=ideal.order.key)
    return out


def _compositions(total: int, parts: int):
    if parts == 0:
        if total == 0:
            yield ()
        return
    for first in range(total + 1):
        for rest in _compositions(total - first, parts - 1):
            yield (first,) + rest


# ---------------------------------------------------------------------------
# Lie-Poisson structure
# ---------------------------------------------------------------------------

def poisson_bracket(f: CommPoly, g: CommPoly, algebra) -> CommPoly:
    """Lie-Poisson bracket: on coordinates {x_i, x_j} = sum_k c_ij^k x_k."""
    nv = f.nvars
    if g.nvars != nv:
        raise ValueError("operands over different variable sets")
    out = CommPoly.zero(nv)
    partials_f = [f.partial(i) for i in range(min(nv, algebra.dim))]
    partials_g = [g.partial(i) for i in range(min(nv, algebra.dim))]
    for i in range(algebra.dim):
        if partials_f[i].is_zero and partials_g[i].is_zero:
            continue
        for j in range(i + 1, algebra.dim):
            term = partials_f[i] * partials_g[j] - partials_f[j] * partials_g[i]
            if term.is_zero:
                continue
            for k, c in algebra.bracket(i, j).items():
                xk = CommPoly.variable(k, nv)
                out = out + (term * xk).scale(c)
    return out


def is_invariant(p: CommPoly, algebra) -> bool:
    """True when p Poisson-commutes with every coordinate function."""
    nv = p.nvars
    for i in range(algebra.dim):
        xi = CommPoly.variable(i, nv)
        if not poisson_bracket(p, xi, algebra).is_zero:
            return False
    return True


def jacobian_rank(polys, point) -> int:
    """Rank of the matrix of partial derivatives evaluated at the point."""
    from . import matrices

    if not polys:
        return 0
    nv = polys[0].nvars
    rows = []
    for p in polys:
        if not p.is_h_free:
            raise ValueError("jacobian_rank expects h-free polynomials")
        row = []
        for i in range(nv):
            row.append(p.partial(i).eval(point).constant)
        rows.append(row)
    return matrices.rank(rows)
