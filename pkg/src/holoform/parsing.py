"""Text syntax for forms, polynomial maps and graded polynomials.

Forms::

    z1*dz2 + (1+i)*dz1 /\\ dz3 - 1/2*z1^2*dz2 ^ dz3

``*`` multiplies by functions and constants, ``/\\`` is the wedge product,
and ``^`` is a power when followed by an integer and a wedge when it sits
between two forms of positive degree. ``/`` divides by a non-zero constant.
Whitespace is ignored.

Maps are comma-separated polynomials, optionally parenthesised:
``(z2, z1 + z1^2)``. Graded polynomials use the variable names of their
universe, for example ``3*u^2*v - (1+i)*v``.
"""

from __future__ import annotations

import re
from collections.abc import Sequence
from dataclasses import dataclass

from .forms import Form, wedge
from .graded import GradedPolynomial, GradedVariable, gmul
from .polynomials import Polynomial
from .scalars import I, Scalar

__all__ = ["ParseError", "parse_form", "parse_forms", "parse_map", "parse_graded", "max_index"]


class ParseError(ValueError):
    def __init__(self, message: str, text: str = "", pos: int | None = None):
        self.pos = pos
        self.text = text
        where = f" at position {pos}" if pos is not None else ""
        super().__init__(f"{message}{where}")


@dataclass(frozen=True)
class Token:
    kind: str  # NUM, NAME, OP, END
    value: str
    pos: int


_TOKEN_RE = re.compile(r"\s*(?:(?P<num>\d+)|(?P<name>[A-Za-z_][A-Za-z_0-9]*)|(?P<op>/\\|[-+*/^(),]))")


def tokenize(text: str) -> list[Token]:
    out: list[Token] = []
    pos = 0
    while pos < len(text):
        if text[pos:].strip() == "":
            break
        m = _TOKEN_RE.match(text, pos)
        if m is None:
            bad = len(text) - len(text[pos:].lstrip())
            raise ParseError(f"unexpected character {text[bad]!r}", text, bad)
        kind = "NUM" if m.group("num") else "NAME" if m.group("name") else "OP"
        out.append(Token(kind, m.group(kind.lower()), m.start(kind.lower())))
        pos = m.end()
    out.append(Token("END", "", len(text)))
    return out


_Z_RE = re.compile(r"(d?)z(\d+)")


def max_index(text: str) -> int:
    """Largest coordinate index mentioned by ``zK`` or ``dzK``."""
    idx = [int(m.group(2)) for m in _Z_RE.finditer(text)]
    return max(idx, default=0)


class _Parser:
    """Recursive descent over ``+ - * / ^ ( )``; subclasses supply atoms."""

    def __init__(self, text: str):
        self.text = text
        self.tokens = tokenize(text)
        self.i = 0

    @property
    def tok(self) -> Token:
        return self.tokens[self.i]

    def advance(self) -> Token:
        t = self.tokens[self.i]
        self.i += 1
        return t

    def error(self, message: str, tok: Token | None = None) -> ParseError:
        tok = tok or self.tok
        return ParseError(message, self.text, tok.pos)

    def expect(self, value: str) -> Token:
        if self.tok.value != value or self.tok.kind != "OP":
            got = self.tok.value or "end of input"
            raise self.error(f"expected {value!r}, found {got!r}")
        return self.advance()

    def parse_all(self):
        val = self.expr()
        if self.tok.kind != "END":
            raise self.error(f"unexpected {self.tok.value!r}")
        return val

    # grammar --------------------------------------------------------------

    def expr(self):
        val = self.term()
        while self.tok.kind == "OP" and self.tok.value in "+-":
            op = self.advance()
            rhs = self.term()
            val = self.combine(op, val, rhs)
        return val

    def term(self):
        val = self.unary()
        while self.tok.kind == "OP" and self.tok.value in ("*", "/", "/\\"):
            op = self.advance()
            rhs = self.unary()
            val = self.combine(op, val, rhs)
        return val

    def unary(self):
        if self.tok.kind == "OP" and self.tok.value in "+-":
            op = self.advance()
            val = self.unary()
            return self.negate(val) if op.value == "-" else val
        return self.power()

    def power(self):
        val = self.atom()
        while self.tok.kind == "OP" and self.tok.value == "^":
            op = self.advance()
            if self.tok.kind == "NUM":
                val = self.raise_power(op, val, int(self.advance().value))
            else:
                val = self.combine(op, val, self.atom())
        return val

    def atom(self):
        t = self.tok
        if t.kind == "OP" and t.value == "(":
            self.advance()
            val = self.expr()
            self.expect(")")
            return val
        if t.kind == "NUM":
            self.advance()
            return self.number(int(t.value))
        if t.kind == "NAME":
            self.advance()
            return self.name(t)
        raise self.error(f"unexpected {t.value or 'end of input'!r}")

    # hooks ------------------------------------------------------------------

    def combine(self, op: Token, a, b):
        raise NotImplementedError

    def negate(self, a):
        return -a

    def raise_power(self, op: Token, a, k: int):
        raise NotImplementedError

    def number(self, k: int):
        raise NotImplementedError

    def name(self, tok: Token):
        raise NotImplementedError


class _FormParser(_Parser):
    def __init__(self, text: str, dim: int):
        super().__init__(text)
        self.dim = dim

    def number(self, k: int) -> Form:
        return Form.function(Polynomial.constant(k, self.dim))

    def name(self, tok: Token) -> Form:
        if tok.value == "i":
            return Form.function(Polynomial.constant(I, self.dim))
        m = _Z_RE.fullmatch(tok.value)
        if m is None:
            raise self.error(f"unknown identifier {tok.value!r}", tok)
        k = int(m.group(2))
        if not 1 <= k <= self.dim:
            raise self.error(f"index {k} outside dimension {self.dim}", tok)
        if m.group(1):
            return Form.dz(k, dim=self.dim)
        return Form.function(Polynomial.variable(k, self.dim))

    def combine(self, op: Token, a: Form, b: Form) -> Form:
        v = op.value
        try:
            if v in "+-":
                return a + b if v == "+" else a - b
        except ValueError as exc:
            raise self.error(
                f"degree-inconsistent sum of a {a.degree}-form and a {b.degree}-form", op
            ) from exc
        if v == "*":
            if a.degree and b.degree:
                raise self.error("'*' between two forms of positive degree; use /\\ for wedge", op)
            return wedge(a, b)
        if v == "/\\":
            return wedge(a, b)
        if v == "^":
            if not (a.degree and b.degree):
                raise self.error("'^' as wedge needs forms of positive degree on both sides", op)
            return wedge(a, b)
        if v == "/":
            c = _constant_of(b)
            if c is None:
                raise self.error("can only divide by a constant", op)
            if not c:
                raise self.error("division by zero", op)
            return a * c.inverse()
        raise self.error(f"unknown operator {v!r}", op)

    def raise_power(self, op: Token, a: Form, k: int) -> Form:
        if a.degree:
            raise self.error("integer powers apply to functions only", op)
        return Form.function(a.coefficient(()) ** k)


def _constant_of(w: Form) -> Scalar | None:
    if w.degree or not all(c.is_constant() for c in w.terms.values()):
        return None
    return w.coefficient(()).constant_term()


def _dim_for(texts: Sequence[str], dim: int | None) -> int:
    needed = max((max_index(t) for t in texts), default=0)
    if dim is None:
        return max(needed, 1)
    if needed > dim:
        raise ParseError(f"expression uses index {needed} but dimension is {dim}")
    return dim


def parse_form(text: str, dim: int | None = None) -> Form:
    """Parse a form; the dimension defaults to the largest index used."""
    return _FormParser(text, _dim_for([text], dim)).parse_all()


def parse_forms(texts: Sequence[str], dim: int | None = None) -> list[Form]:
    """Parse several forms into one common ambient dimension."""
    n = _dim_for(texts, dim)
    return [_FormParser(t, n).parse_all() for t in texts]


def _split_top_level(text: str) -> list[str]:
    depth, start, parts = 0, 0, []
    for k, ch in enumerate(text):
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
        elif ch == "," and depth == 0:
            parts.append(text[start:k])
            start = k + 1
    parts.append(text[start:])
    return parts


def parse_map(text: str, dim: int | None = None) -> tuple[Polynomial, ...]:
    """Parse ``(f1, ..., fn)`` into n polynomials in n variables."""
    body = text.strip()
    if body.startswith("(") and body.endswith(")") and len(_split_top_level(body[1:-1])) > 1:
        body = body[1:-1]
    parts = _split_top_level(body)
    n = dim if dim is not None else len(parts)
    if len(parts) != n:
        raise ParseError(f"map has {len(parts)} components but dimension is {n}")
    out = []
    for part in parts:
        w = parse_form(part, n)
        if w.degree and w:
            raise ParseError(f"map component {part.strip()!r} is not a function")
        out.append(w.coefficient(()) if w.terms else Polynomial.zero(n))
    return tuple(out)


class _GradedParser(_Parser):
    def __init__(self, text: str, universe: Sequence[GradedVariable]):
        super().__init__(text)
        self.universe = tuple(universe)
        self.names = {v.name for v in self.universe}

    def number(self, k: int) -> GradedPolynomial:
        return GradedPolynomial.constant(self.universe, k)

    def name(self, tok: Token) -> GradedPolynomial:
        if tok.value == "i":
            return GradedPolynomial.constant(self.universe, I)
        if tok.value not in self.names:
            raise self.error(
                f"unknown variable {tok.value!r}; expected one of {sorted(self.names)}", tok
            )
        return GradedPolynomial.variable(self.universe, tok.value)

    def combine(self, op: Token, a: GradedPolynomial, b: GradedPolynomial) -> GradedPolynomial:
        v = op.value
        if v == "+":
            return a + b
        if v == "-":
            return a - b
        if v == "*":
            return gmul(a, b)
        if v == "/":
            if len(b.terms) != 1 or any(next(iter(b.terms))):
                raise self.error("can only divide by a non-zero constant", op)
            return a * next(iter(b.terms.values())).inverse()
        raise self.error(f"operator {v!r} is not available for graded polynomials", op)

    def raise_power(self, op: Token, a: GradedPolynomial, k: int) -> GradedPolynomial:
        return a**k


def parse_graded(text: str, universe: Sequence[GradedVariable]) -> GradedPolynomial:
    return _GradedParser(text, universe).parse_all()

