"""Exact scalars: Gaussian rationals and polynomials in the deformation parameter h.

Everything downstream (structure constants, PBW coefficients, orbit reductions)
is computed over these two types.  No floating point appears anywhere; all
equality checks in the test suites are exact.
"""

from __future__ import annotations

import re
from fractions import Fraction


class NotDivisibleError(ArithmeticError):
    """Dividing by h a polynomial whose constant term is nonzero."""


_RAT = r"[0-9]+(?:/[0-9]+)?"
_GAUSS_RE = re.compile(
    rf"^(?P<re>[+-]?{_RAT})?(?P<im>(?:(?<=\d)[+-]|^[+-]?)(?:{_RAT}\*)?i)?$"
)


def _as_fraction(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, str):
        return Fraction(x)
    raise TypeError(f"cannot build a rational from {x!r}")


class GaussRat:
    """A Gaussian rational re + im*i, both parts arbitrary-precision rationals.

    Values are immutable; Fraction keeps each part in lowest terms with a
    positive denominator, so structural equality is canonical equality.
    """

    __slots__ = ("re", "im")

    def __init__(self, re=0, im=0):
        object.__setattr__(self, "re", _as_fraction(re))
        object.__setattr__(self, "im", _as_fraction(im))

    def __setattr__(self, name, value):
        raise AttributeError("GaussRat is immutable")

    @staticmethod
    def _coerce(x) -> "GaussRat":
        if isinstance(x, GaussRat):
            return x
        if isinstance(x, (int, Fraction)):
            return GaussRat(x)
        return NotImplemented

    @classmethod
    def parse(cls, text: str) -> "GaussRat":
        """Parse the canonical textual form: `a/b`, `a/b*i`, `a/b+c/d*i`, `i`, `-i`."""
        s = re.sub(r"\s*([+*/-])\s*", r"\1", text.strip())
        if not s:
            raise ValueError("empty scalar literal")
        if any(ch.isspace() for ch in s):
            raise ValueError(f"malformed scalar literal {text!r}")
        m = _GAUSS_RE.match(s)
        if not m or (m.group("re") is None and m.group("im") is None):
            raise ValueError(f"malformed scalar literal {text!r}")
        re_part = Fraction(m.group("re")) if m.group("re") else Fraction(0)
        im_part = Fraction(0)
        if m.group("im"):
            tok = m.group("im")
            sign = -1 if tok.startswith("-") else 1
            tok = tok.lstrip("+-")
            body = tok[:-1].rstrip("*")  # strip trailing 'i' and '*'
            im_part = sign * (Fraction(body) if body else Fraction(1))
        return cls(re_part, im_part)

    # -- predicates ---------------------------------------------------------

    @property
    def is_zero(self) -> bool:
        return not self.re and not self.im

    @property
    def is_real(self) -> bool:
        return not self.im

    def __bool__(self) -> bool:
        return not self.is_zero

    # -- ring / field operations -------------------------------------------

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return GaussRat(self.re + other.re, self.im + other.im)

    __radd__ = __add__

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return GaussRat(self.re - other.re, self.im - other.im)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other - self

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if not self.im and not other.im:  # the common all-real case
            return GaussRat(self.re * other.re)
        return GaussRat(
            self.re * other.re - self.im * other.im,
            self.re * other.im + self.im * other.re,
        )

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        norm = other.re * other.re + other.im * other.im
        if not norm:
            raise ZeroDivisionError("division by zero GaussRat")
        return GaussRat(
            (self.re * other.re + self.im * other.im) / norm,
            (self.im * other.re - self.re * other.im) / norm,
        )

    def __rtruediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other / self

    def __neg__(self):
        return GaussRat(-self.re, -self.im)

    def __pow__(self, n: int):
        if not isinstance(n, int):
            raise TypeError("GaussRat exponent must be an integer")
        if n < 0:
            return (GaussRat(1) / self) ** (-n)
        out = GaussRat(1)
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def conjugate(self) -> "GaussRat":
        return GaussRat(self.re, -self.im)

    # -- equality / hashing / text ------------------------------------------

    def __eq__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self.re == other.re and self.im == other.im

    def __hash__(self):
        return hash((self.re, self.im))

    def __str__(self) -> str:
        if self.is_zero:
            return "0"
        parts = []
        if self.re:
            parts.append(str(self.re))
        if self.im:
            sign = "-" if self.im < 0 else ("+" if parts else "")
            mag = abs(self.im)
            body = "i" if mag == 1 else f"{mag}*i"
            parts.append(sign + body)
        return "".join(parts)

    def __repr__(self) -> str:
        return f"GaussRat({self.re!r}, {self.im!r})"


ZERO = GaussRat(0)
ONE = GaussRat(1)
I = GaussRat(0, 1)


def _coerce_gauss(x) -> GaussRat:
    if isinstance(x, GaussRat):
        return x
    if isinstance(x, (int, Fraction)):
        return GaussRat(x)
    if isinstance(x, str):
        return GaussRat.parse(x)
    raise TypeError(f"cannot interpret {x!r} as a GaussRat")


class HPoly:
    """A polynomial in h with GaussRat coefficients, lowest degree first.

    Trailing zeros are trimmed, so the zero polynomial is the empty tuple and
    equality of tuples is equality in the ring.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=()):
        cs = [_coerce_gauss(c) for c in coeffs]
        while cs and cs[-1].is_zero:
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))

    def __setattr__(self, name, value):
        raise AttributeError("HPoly is immutable")

    # -- constructors --------------------------------------------------------

    @classmethod
    def zero(cls) -> "HPoly":
        return cls(())

    @classmethod
    def one(cls) -> "HPoly":
        return cls((ONE,))

    @classmethod
    def const(cls, c) -> "HPoly":
        return cls((_coerce_gauss(c),))

    @classmethod
    def h(cls, power: int = 1, coeff=1) -> "HPoly":
        if power < 0:
            raise ValueError("h power must be nonnegative")
        return cls((ZERO,) * power + (_coerce_gauss(coeff),))

    @staticmethod
    def _coerce(x) -> "HPoly":
        if isinstance(x, HPoly):
            return x
        if isinstance(x, (int, Fraction, GaussRat)):
            return HPoly.const(x)
        return NotImplemented

    # -- structure -----------------------------------------------------------

    @property
    def degree(self) -> int:
        """Degree in h; the zero polynomial has degree -1."""
        return len(self.coeffs) - 1

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def is_scalar(self) -> bool:
        """True when there is no h dependence."""
        return len(self.coeffs) <= 1

    @property
    def constant(self) -> GaussRat:
        return self.coeffs[0] if self.coeffs else ZERO

    def coeff(self, k: int) -> GaussRat:
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else ZERO

    def __bool__(self):
        return not self.is_zero

    # -- arithmetic ----------------------------------------------------------

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for k, c in enumerate(b):
            out[k] = out[k] + c
        return HPoly(out)

    __radd__ = __add__

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other + (-self)

    def __neg__(self):
        return HPoly(tuple(-c for c in self.coeffs))

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if self.is_zero or other.is_zero:
            return HPoly.zero()
        out = [ZERO] * (len(self.coeffs) + len(other.coeffs) - 1)
        for ia, ca in enumerate(self.coeffs):
            if ca.is_zero:
                continue
            for ib, cb in enumerate(other.coeffs):
                out[ia + ib] = out[ia + ib] + ca * cb
        return HPoly(out)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative HPoly power")
        out = HPoly.one()
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def eval(self, h0) -> GaussRat:
        """Exact evaluation at a numeric value of h (Horner)."""
        h0 = _coerce_gauss(h0)
        acc = ZERO
        for c in reversed(self.coeffs):
            acc = acc * h0 + c
        return acc

    def divide_by_h(self) -> "HPoly":
        """Exact division by h; the constant term must vanish."""
        if self.is_zero:
            return self
        if not self.coeffs[0].is_zero:
            raise NotDivisibleError(f"constant term {self.coeffs[0]} is nonzero")
        return HPoly(self.coeffs[1:])

    def div_exact(self, other: "HPoly"):
        """Exact polynomial quotient self/other, or None when it does not divide."""
        other = self._coerce(other)
        if other.is_zero:
            return None
        rem = list(self.coeffs)
        lead = other.coeffs[-1]
        dq = len(rem) - len(other.coeffs)
        if self.is_zero:
            return HPoly.zero()
        if dq < 0:
            return None
        quot = [ZERO] * (dq + 1)
        for k in range(dq, -1, -1):
            c = rem[k + other.degree] / lead
            quot[k] = c
            if not c.is_zero:
                for j, oc in enumerate(other.coeffs):
                    rem[k + j] = rem[k + j] - c * oc
        if any(not c.is_zero for c in rem):
            return None
        return HPoly(quot)

    # -- equality / text -----------------------------------------------------

    def __eq__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __str__(self) -> str:
        if self.is_zero:
            return "0"
        parts = []
        for k, c in enumerate(self.coeffs):
            if c.is_zero:
                continue
            sign, body = _signed_coeff_text(c)
            mono = "" if k == 0 else ("h" if k == 1 else f"h^{k}")
            if not mono:
                term = body if body else "1"
            elif body:
                term = f"{body}*{mono}"
            else:
                term = mono
            if not parts:
                parts.append(term if sign > 0 else f"-{term}")
            else:
                parts.append(f"{'+' if sign > 0 else '-'} {term}")
        return " ".join(parts)

    def __repr__(self):
        return f"HPoly({self.coeffs!r})"


def _signed_coeff_text(c: GaussRat):
    """Split a coefficient into a printable sign and magnitude text.

    Mixed-sign complex values are parenthesized so the output reparses
    unambiguously; a magnitude of one yields an empty body.
    """
    negative = c.re < 0 or (c.re == 0 and c.im < 0)
    mag = -c if negative else c
    if mag == ONE:
        body = ""
    else:
        body = str(mag)
        if mag.re and mag.im:
            body = f"({body})"
    return (-1 if negative else 1, body)


H = HPoly.h()
