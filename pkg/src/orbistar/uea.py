"""The parametrized enveloping algebra: PBW normal forms by rewriting.

Words in the generators are rewritten with X_a X_b -> X_b X_a + h [X_a, X_b]
for a > b until the indices are nondecreasing.  Elements are finite maps from
sorted words to HPoly coefficients; products, commutators, symmetrization,
the classical projection, numeric specialization, centrality tests and
automorphism transport are built on that normal form.
"""

from __future__ import annotations

import itertools
from fractions import Fraction

from .commpoly import CommPoly
from .liealg import BasisChange, LieAlgebra
from .scalar import GaussRat, HPoly, ONE, ZERO, _coerce_gauss


class NotAutomorphismError(ValueError):
    """A basis change that fails to preserve the bracket table."""


def _coerce_hpoly(c) -> HPoly:
    if isinstance(c, HPoly):
        return c
    return HPoly.const(_coerce_gauss(c))


class UElement:
    """C[h]-combination of PBW monomials (sorted index words)."""

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        clean = {}
        for word, c in (terms or {}).items():
            c = _coerce_hpoly(c)
            if c.is_zero:
                continue
            word = tuple(word)
            if any(a > b for a, b in zip(word, word[1:])):
                raise ValueError(f"word {word} is not PBW-sorted")
            clean[word] = c
        object.__setattr__(self, "terms", clean)

    def __setattr__(self, name, value):
        raise AttributeError("UElement is immutable")

    # -- constructors ---------------------------------------------------------

    @classmethod
    def zero(cls) -> "UElement":
        return cls({})

    @classmethod
    def unit(cls, coeff=1) -> "UElement":
        return cls({(): _coerce_hpoly(coeff)})

    @classmethod
    def generator(cls, i: int, coeff=1) -> "UElement":
        return cls({(i,): _coerce_hpoly(coeff)})

    @classmethod
    def monomial(cls, word, coeff=1) -> "UElement":
        return cls({tuple(word): _coerce_hpoly(coeff)})

    # -- structure ------------------------------------------------------------

    @property
    def is_zero(self) -> bool:
        return not self.terms

    @property
    def degree(self) -> int:
        return max((len(w) for w in self.terms), default=-1)

    @property
    def is_scalar_coeffs(self) -> bool:
        return all(c.is_scalar for c in self.terms.values())

    def coeff(self, word) -> HPoly:
        return self.terms.get(tuple(word), HPoly.zero())

    def __bool__(self):
        return not self.is_zero

    def __eq__(self, other):
        if not isinstance(other, UElement):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    # -- linear operations ------------------------------------------------------

    def __add__(self, other: "UElement") -> "UElement":
        out = dict(self.terms)
        for w, c in other.terms.items():
            out[w] = out.get(w, HPoly.zero()) + c
        return UElement(out)

    def __sub__(self, other: "UElement") -> "UElement":
        return self + (-other)

    def __neg__(self) -> "UElement":
        return UElement({w: -c for w, c in self.terms.items()})

    def scale(self, c) -> "UElement":
        c = _coerce_hpoly(c)
        return UElement({w: k * c for w, k in self.terms.items()})

    def map_coeffs(self, fn) -> "UElement":
        return UElement({w: fn(c) for w, c in self.terms.items()})

    def sorted_terms(self):
        """Terms in descending canonical order (degree, then lex on indices)."""
        return sorted(self.terms.items(), key=lambda kv: (len(kv[0]), kv[0]), reverse=True)

    def __repr__(self):
        return f"UElement({self.terms!r})"


# ---------------------------------------------------------------------------
# rewriting
# ---------------------------------------------------------------------------

def _leftmost_descent(word):
    for i in range(len(word) - 1):
        if word[i] > word[i + 1]:
            return i
    return None


def _rightmost_descent(word):
    for i in range(len(word) - 2, -1, -1):
        if word[i] > word[i + 1]:
            return i
    return None


def _rewrite(word, algebra: LieAlgebra, pick, cache=None) -> UElement:
    if cache is not None and word in cache:
        return cache[word]
    i = pick(word)
    if i is None:
        res = UElement.monomial(word)
    else:
        a, b = word[i], word[i + 1]
        res = _rewrite(word[:i] + (b, a) + word[i + 2:], algebra, pick, cache)
        row = algebra.bracket(a, b)
        if row:
            for k, c in row.items():
                inner = _rewrite(word[:i] + (k,) + word[i + 2:], algebra, pick, cache)
                res = res + inner.scale(HPoly.h(1, c))
    if cache is not None:
        cache[word] = res
    return res


def normal_form_word(word, algebra: LieAlgebra, strategy="leftmost") -> UElement:
    """PBW normal form of an arbitrary word of generator indices.

    The result does not depend on which descent is rewritten first; the
    non-default strategies exist so tests can confirm that confluence.
    Only the leftmost strategy is memoized (per algebra).
    """
    word = tuple(word)
    for i in word:
        if not 0 <= i < algebra.dim:
            raise IndexError(f"generator index {i} out of range")
    if strategy == "leftmost":
        return _rewrite(word, algebra, _leftmost_descent, algebra._pbw_cache)
    if strategy == "rightmost":
        return _rewrite(word, algebra, _rightmost_descent, None)
    if callable(strategy):
        return _rewrite(word, algebra, strategy, None)
    raise ValueError(f"unknown strategy {strategy!r}")


def multiply(a: UElement, b: UElement, algebra: LieAlgebra) -> UElement:
    """Associative product; degree filtration and the top symbol behave classically."""
    out = UElement.zero()
    for wa, ca in a.terms.items():
        for wb, cb in b.terms.items():
            nf = normal_form_word(wa + wb, algebra)
            out = out + nf.scale(ca * cb)
    return out


def commutator(a: UElement, b: UElement, algebra: LieAlgebra) -> UElement:
    return multiply(a, b, algebra) - multiply(b, a, algebra)


def power(a: UElement, n: int, algebra: LieAlgebra) -> UElement:
    out = UElement.unit()
    for _ in range(n):
        out = multiply(out, a, algebra)
    return out


# ---------------------------------------------------------------------------
# maps in and out
# ---------------------------------------------------------------------------

def word_of_exponent(exp):
    """Sorted word with exp[i] copies of index i."""
    out = []
    for i, e in enumerate(exp):
        out.extend([i] * e)
    return tuple(out)


def exponent_of_word(word, nvars: int):
    exp = [0] * nvars
    for i in word:
        exp[i] += 1
    return tuple(exp)


def ordered_lift(f: CommPoly) -> UElement:
    """Monomial-by-monomial lift x^e -> X^e with the indices in order."""
    return UElement({word_of_exponent(e): c for e, c in f.terms.items()})


def symmetrize(f: CommPoly, algebra: LieAlgebra, max_degree: int = 8) -> UElement:
    """Average of all factor orderings of each monomial, PBW-normalized.

    The permutation sum grows factorially, so degrees above ``max_degree``
    are refused rather than silently attempted.
    """
    if f.nvars != algebra.dim:
        raise ValueError("polynomial over the wrong variable count")
    out = UElement.zero()
    for exp, coeff in f.terms.items():
        word = word_of_exponent(exp)
        p = len(word)
        if p > max_degree:
            raise ValueError(
                f"symmetrization of degree {p} exceeds the cap {max_degree}"
            )
        if p == 0:
            out = out + UElement.unit(coeff)
            continue
        arrangements = set(itertools.permutations(word))
        # each distinct arrangement occurs prod(e_i!) times among the p! orderings
        mult = Fraction(1)
        for e in exp:
            for t in range(2, e + 1):
                mult *= t
        factor = GaussRat(mult / Fraction(_factorial(p)))
        acc = UElement.zero()
        for w in sorted(arrangements):
            acc = acc + normal_form_word(w, algebra)
        out = out + acc.scale(coeff * factor)
    return out


def _factorial(n: int) -> int:
    out = 1
    for t in range(2, n + 1):
        out *= t
    return out


def project_classical(a: UElement, algebra: LieAlgebra) -> CommPoly:
    """Set h = 0 and read each PBW word as a commutative monomial."""
    n = algebra.dim
    terms = {}
    for w, c in a.terms.items():
        c0 = c.constant
        if c0.is_zero:
            continue
        exp = exponent_of_word(w, n)
        cur = terms.get(exp, HPoly.zero())
        terms[exp] = cur + HPoly.const(c0)
    return CommPoly(n, terms)


def evaluate_h(a: UElement, h0) -> UElement:
    """Specialize the coefficients at a numeric h; the PBW support is unchanged.

    Products of specialized elements must use :func:`multiply_at` with the
    same h0, which realizes the rescaled bracket h0 [.,.].
    """
    h0 = _coerce_gauss(h0)
    return UElement({w: HPoly.const(c.eval(h0)) for w, c in a.terms.items()})


def multiply_at(a: UElement, b: UElement, algebra: LieAlgebra, h0) -> UElement:
    """Product in the specialization at numeric h0 (bracket scaled by h0)."""
    if not (a.is_scalar_coeffs and b.is_scalar_coeffs):
        raise ValueError("specialized products need h-free coefficients")
    h0 = _coerce_gauss(h0)
    prod = multiply(a, b, algebra.rescaled(h0))
    return evaluate_h(prod, 1)


def divide_by_h(a: UElement) -> UElement:
    return a.map_coeffs(lambda c: c.divide_by_h())


def is_central(a: UElement, algebra: LieAlgebra) -> bool:
    """True when a commutes with every generator."""
    for i in range(algebra.dim):
        if not commutator(a, UElement.generator(i), algebra).is_zero:
            return False
    return True


# ---------------------------------------------------------------------------
# automorphisms
# ---------------------------------------------------------------------------

def check_automorphism(change: BasisChange, algebra: LieAlgebra):
    """Raise NotAutomorphismError unless the map preserves all brackets."""
    n = algebra.dim
    if change.dim != n:
        raise NotAutomorphismError("wrong dimension")
    b = change.rows()
    for i in range(n):
        for j in range(i + 1, n):
            lhs = [ZERO] * n  # [B X_i, B X_j]
            for k in range(n):
                if b[i][k].is_zero:
                    continue
                for l in range(n):
                    f = b[i][k] * b[j][l]
                    if f.is_zero:
                        continue
                    for m, c in algebra.bracket(k, l).items():
                        lhs[m] = lhs[m] + f * c
            rhs = [ZERO] * n  # B [X_i, X_j]
            for p, c in algebra.bracket(i, j).items():
                for m in range(n):
                    rhs[m] = rhs[m] + c * b[p][m]
            if lhs != rhs:
                raise NotAutomorphismError(
                    f"bracket [{algebra.labels[i]},{algebra.labels[j]}] is not preserved"
                )


def apply_automorphism(a: UElement, change: BasisChange, algebra: LieAlgebra) -> UElement:
    """Extend a bracket-preserving linear map multiplicatively to PBW words."""
    check_automorphism(change, algebra)
    b = change.rows()
    images = [
        UElement({(k,): HPoly.const(c) for k, c in enumerate(row) if not c.is_zero})
        for row in b
    ]
    out = UElement.zero()
    for word, coeff in a.terms.items():
        acc = UElement.unit()
        for i in word:
            acc = multiply(acc, images[i], algebra)
        out = out + acc.scale(coeff)
    return out
