"""Expression front end and canonical printers.

One grammar serves both contexts: identifiers, GaussRat literals, ``h``,
``i``, the operators ``+ - * ^`` and parentheses, with the usual precedence
and no implicit juxtaposition.  In the commutative context the result is a
CommPoly over the session's variables; in the noncommutative context ``*``
preserves factor order and the result is a PBW-normalized UElement.

Printing is the inverse: commutative output lists terms ascending in the
active monomial order (so the classical limit reads left to right), while
enveloping-algebra output is descending from the leading word.
"""

from __future__ import annotations

import re
from fractions import Fraction

from .commpoly import CommPoly, MonomialOrder
from .scalar import GaussRat, HPoly, ONE, _signed_coeff_text


class ExprSyntaxError(ValueError):
    """Malformed expression; carries the offending position."""

    def __init__(self, message: str, pos: int):
        super().__init__(f"{message} (at position {pos})")
        self.pos = pos


class UnknownIdentifierError(ValueError):
    """Identifier that resolves to no generator or symbol."""

    def __init__(self, name: str):
        super().__init__(f"unknown identifier {name!r}")
        self.name = name


_TOKEN = re.compile(
    r"\s*(?:(?P<num>[0-9]+(?:/[0-9]+)?)|(?P<name>[A-Za-z_][A-Za-z_0-9]*)"
    r"|(?P<op>[-+*^()]))"
)


def tokenize(text: str):
    tokens = []
    pos = 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m or m.end() == pos:
            if text[pos:].strip():
                raise ExprSyntaxError(f"unexpected character {text[pos]!r}", pos)
            break
        if m.group("num"):
            tokens.append(("num", Fraction(m.group("num")), m.start()))
        elif m.group("name"):
            tokens.append(("name", m.group("name"), m.start()))
        else:
            tokens.append(("op", m.group("op"), m.start()))
        pos = m.end()
    tokens.append(("end", None, len(text)))
    return tokens


class _Parser:
    """Recursive descent with precedence ^ > unary- > * > binary +/-."""

    def __init__(self, tokens):
        self.tokens = tokens
        self.k = 0

    def peek(self):
        return self.tokens[self.k]

    def advance(self):
        tok = self.tokens[self.k]
        self.k += 1
        return tok

    def expect_op(self, op):
        kind, val, pos = self.peek()
        if kind != "op" or val != op:
            raise ExprSyntaxError(f"expected {op!r}", pos)
        self.advance()

    def parse(self):
        node = self.sum()
        kind, val, pos = self.peek()
        if kind != "end":
            raise ExprSyntaxError(f"trailing input {val!r}", pos)
        return node

    def sum(self):
        node = self.product()
        while True:
            kind, val, _ = self.peek()
            if kind == "op" and val in "+-":
                self.advance()
                rhs = self.product()
                node = ("add" if val == "+" else "sub", node, rhs)
            else:
                return node

    def product(self):
        node = self.unary()
        while True:
            kind, val, pos = self.peek()
            if kind == "op" and val == "*":
                self.advance()
                node = ("mul", node, self.unary())
            elif kind in ("num", "name") or (kind == "op" and val == "("):
                raise ExprSyntaxError("juxtaposition is not allowed; use '*'", pos)
            else:
                return node

    def unary(self):
        kind, val, _ = self.peek()
        if kind == "op" and val == "-":
            self.advance()
            return ("neg", self.unary())
        if kind == "op" and val == "+":
            self.advance()
            return self.unary()
        return self.power()

    def power(self):
        base = self.atom()
        kind, val, pos = self.peek()
        if kind == "op" and val == "^":
            self.advance()
            kind, exp, pos = self.peek()
            if kind == "op" and exp == "(":
                raise ExprSyntaxError("exponent must be a literal integer", pos)
            if kind != "num" or exp.denominator != 1:
                raise ExprSyntaxError("exponent must be a nonnegative integer", pos)
            self.advance()
            return ("pow", base, int(exp))
        return base

    def atom(self):
        kind, val, pos = self.advance()
        if kind == "num":
            return ("num", val)
        if kind == "name":
            if val == "h":
                return ("hsym",)
            if val == "i":
                return ("imag",)
            return ("name", val)
        if kind == "op" and val == "(":
            node = self.sum()
            self.expect_op(")")
            return node
        if kind == "end":
            raise ExprSyntaxError("unexpected end of input", pos)
        raise ExprSyntaxError(f"unexpected token {val!r}", pos)


def parse_ast(text: str):
    return _Parser(tokenize(text)).parse()


# ---------------------------------------------------------------------------
# evaluation into algebra elements
# ---------------------------------------------------------------------------

def _resolve(name: str, labels, central=()):
    """Variable index of an identifier: a label, x_<label>, or central symbol."""
    names = list(labels)
    for k, lab in enumerate(names):
        if name == lab or name == f"x_{lab}":
            return k
    for k, lab in enumerate(central):
        if name == lab:
            return len(names) + k
    raise UnknownIdentifierError(name)


def parse_commutative(text: str, labels, central=(), order=None) -> CommPoly:
    """Parse into a CommPoly over the given variables (h allowed in coefficients)."""
    nv = len(labels) + len(central)
    ast = parse_ast(text)

    def ev(node) -> CommPoly:
        tag = node[0]
        if tag == "num":
            return CommPoly.constant(nv, GaussRat(node[1]))
        if tag == "imag":
            return CommPoly.constant(nv, GaussRat(0, 1))
        if tag == "hsym":
            return CommPoly.constant(nv, HPoly.h())
        if tag == "name":
            return CommPoly.variable(_resolve(node[1], labels, central), nv)
        if tag == "add":
            return ev(node[1]) + ev(node[2])
        if tag == "sub":
            return ev(node[1]) - ev(node[2])
        if tag == "mul":
            return ev(node[1]) * ev(node[2])
        if tag == "neg":
            return -ev(node[1])
        if tag == "pow":
            return ev(node[1]) ** node[2]
        raise AssertionError(f"unhandled node {tag}")

    return ev(ast)


def parse_noncommutative(text: str, algebra):
    """Parse into a PBW-normalized UElement; '*' is order-significant."""
    from .uea import UElement, multiply

    ast = parse_ast(text)

    def ev(node) -> "UElement":
        tag = node[0]
        if tag == "num":
            return UElement.unit(GaussRat(node[1]))
        if tag == "imag":
            return UElement.unit(GaussRat(0, 1))
        if tag == "hsym":
            return UElement.unit(HPoly.h())
        if tag == "name":
            return UElement.generator(_resolve(node[1], algebra.labels))
        if tag == "add":
            return ev(node[1]) + ev(node[2])
        if tag == "sub":
            return ev(node[1]) - ev(node[2])
        if tag == "mul":
            return multiply(ev(node[1]), ev(node[2]), algebra)
        if tag == "neg":
            return -ev(node[1])
        if tag == "pow":
            base = ev(node[1])
            out = UElement.unit()
            for _ in range(node[2]):
                out = multiply(out, base, algebra)
            return out
        raise AssertionError(f"unhandled node {tag}")

    return ev(ast)


# ---------------------------------------------------------------------------
# canonical printing
# ---------------------------------------------------------------------------

def _coeff_prefix(c: HPoly):
    """(sign, text) for an HPoly coefficient in front of a monomial."""
    nonzero = [(k, v) for k, v in enumerate(c.coeffs) if not v.is_zero]
    if len(nonzero) == 1:
        k, v = nonzero[0]
        sign, body = _signed_coeff_text(v)
        hpart = "" if k == 0 else ("h" if k == 1 else f"h^{k}")
        text = "*".join(t for t in (body, hpart) if t)
        return sign, text
    return 1, f"({c})"


def _monomial_text(exp, names, powers_first=False):
    parts = []
    for name, e in zip(names, exp):
        if e == 0:
            continue
        parts.append(name if e == 1 else f"{name}^{e}")
    return "*".join(parts)


def _join_terms(terms):
    out = []
    for sign, text in terms:
        if not out:
            out.append(text if sign > 0 else f"-{text}")
        else:
            out.append(f"{'+' if sign > 0 else '-'} {text}")
    return " ".join(out) if out else "0"


def format_commpoly(p: CommPoly, names, order: MonomialOrder | None = None) -> str:
    """Terms ascending in the monomial order, coefficients canonical."""
    if p.is_zero:
        return "0"
    if order is None:
        order = MonomialOrder.default(p.nvars)
    pieces = []
    for exp, coeff in sorted(p.terms.items(), key=lambda kv: order.key(kv[0])):
        sign, ctext = _coeff_prefix(coeff)
        mono = _monomial_text(exp, names)
        if mono and ctext:
            text = f"{ctext}*{mono}"
        else:
            text = mono or ctext or "1"
        pieces.append((sign, text))
    return _join_terms(pieces)


def _word_text(word, labels) -> str:
    parts = []
    for k in word:
        if parts and parts[-1][0] == k:
            parts[-1][1] += 1
        else:
            parts.append([k, 1])
    return "*".join(
        labels[k] if e == 1 else f"{labels[k]}^{e}" for k, e in parts
    )


def format_uelement(u, labels) -> str:
    """Terms descending from the leading word; repeated factors print as powers."""
    if u.is_zero:
        return "0"
    pieces = []
    for word, coeff in u.sorted_terms():
        sign, ctext = _coeff_prefix(coeff)
        mono = _word_text(word, labels)
        if mono and ctext:
            text = f"{ctext}*{mono}"
        else:
            text = mono or ctext or "1"
        pieces.append((sign, text))
    return _join_terms(pieces)


def format_orbit_element(oe) -> str:
    return format_commpoly(oe.as_poly(), oe.orbit.display_names, oe.orbit.order)


def format_gaussrat(c: GaussRat) -> str:
    return str(c)


def format_hpoly(p: HPoly) -> str:
    return str(p)
