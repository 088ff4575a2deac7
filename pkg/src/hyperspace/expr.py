"""Expression grammar over hyperspace and 3D space complex numbers.

Literals::

    c[1,2,3]            coordinate form, dimension = coefficient count
    p[2; pi/4, 0.1]     polar form: modulus; angle chain
    s3[1,2,3]           3D coordinate form
    s3p[2; pi/2, pi]    3D polar form: modulus; master, slave angle

Binary ``+ - * /`` (left associative), unary minus, ``^n`` integer powers
(binding tighter than unary minus), and the functions ``abs(e)``,
``arg(e, k)``, ``roots(e, n)``, ``lift(e, a)``, ``conj(e)``.  Numeric slots
accept ``pi`` arithmetic.  The two dimension families (N-dimensional vs 3D
space numbers) cannot be mixed, and N-dimensional operands must share one
dimension; both are rejected during the parse-time type check.

Multiplicative results are carried in polar form so that chained products
compose at the angle level; additive operations and display project to
coordinates.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass, field

from . import algebra, duality, space3
from .core import (
    CartesianHC,
    Orientation,
    PolarHC,
    arguments,
    conjugate,
    from_polar,
    modulus,
    to_dict,
)
from .space3 import (
    Space3,
    Space3Polar,
    from_polar3,
    modulus3,
    to_dict3,
    to_polar3,
)


class ParseError(ValueError):
    """Syntax error with the byte offset and the tokens that were expected."""

    def __init__(self, offset: int, expected: tuple[str, ...], found: str):
        self.offset = offset
        self.expected = expected
        self.found = found
        want = " or ".join(expected)
        super().__init__(f"syntax error at offset {offset}: expected {want}, found {found}")


class ExprTypeError(ValueError):
    """Static type error (mixed families, dimension clash, bad argument)."""

    def __init__(self, offset: int, message: str):
        self.offset = offset
        super().__init__(f"type error at offset {offset}: {message}")


# ---------------------------------------------------------------------------
# tokens

_TOKEN_RE = re.compile(
    r"""(?P<ws>\s+)
      | (?P<num>(\d+(\.\d*)?|\.\d+)([eE][+-]?\d+)?)
      | (?P<name>[A-Za-z_][A-Za-z0-9_]*)
      | (?P<sym>[\[\](),;+\-*/^])
    """,
    re.VERBOSE,
)


@dataclass(frozen=True, slots=True)
class Token:
    kind: str  # NUM, NAME, one of the symbol characters, EOF
    text: str
    offset: int


def tokenize(text: str) -> list[Token]:
    out: list[Token] = []
    pos = 0
    while pos < len(text):
        m = _TOKEN_RE.match(text, pos)
        if m is None:
            raise ParseError(pos, ("a token",), f"{text[pos]!r}")
        if m.lastgroup == "num":
            out.append(Token("NUM", m.group(), pos))
        elif m.lastgroup == "name":
            out.append(Token("NAME", m.group(), pos))
        elif m.lastgroup == "sym":
            out.append(Token(m.group(), m.group(), pos))
        pos = m.end()
    out.append(Token("EOF", "", len(text)))
    return out


# ---------------------------------------------------------------------------
# syntax tree

@dataclass(frozen=True, slots=True)
class LitCart:
    coeffs: tuple[float, ...]
    offset: int = field(compare=False, default=0)


@dataclass(frozen=True, slots=True)
class LitPolar:
    modulus: float
    angles: tuple[float, ...]
    offset: int = field(compare=False, default=0)


@dataclass(frozen=True, slots=True)
class LitS3:
    coeffs: tuple[float, float, float]
    offset: int = field(compare=False, default=0)


@dataclass(frozen=True, slots=True)
class LitS3Polar:
    modulus: float
    theta: float
    phi: float
    offset: int = field(compare=False, default=0)


@dataclass(frozen=True, slots=True)
class Unary:
    op: str  # 'neg'
    child: "Expr"
    offset: int = field(compare=False, default=0)


@dataclass(frozen=True, slots=True)
class Binary:
    op: str  # '+', '-', '*', '/'
    left: "Expr"
    right: "Expr"
    offset: int = field(compare=False, default=0)


@dataclass(frozen=True, slots=True)
class Power:
    child: "Expr"
    n: int
    offset: int = field(compare=False, default=0)


@dataclass(frozen=True, slots=True)
class Call:
    fn: str  # 'abs', 'arg', 'roots', 'lift', 'conj'
    child: "Expr"
    arg: float | int | None
    offset: int = field(compare=False, default=0)


Expr = LitCart | LitPolar | LitS3 | LitS3Polar | Unary | Binary | Power | Call

_FUNCTIONS = ("abs", "arg", "roots", "lift", "conj")
_LITERAL_HEADS = ("c", "p", "s3", "s3p")


class _Parser:
    def __init__(self, text: str):
        self.tokens = tokenize(text)
        self.pos = 0

    def peek(self) -> Token:
        return self.tokens[self.pos]

    def advance(self) -> Token:
        tok = self.tokens[self.pos]
        self.pos += 1
        return tok

    def expect(self, kind: str) -> Token:
        tok = self.peek()
        if tok.kind != kind:
            raise ParseError(tok.offset, (f"'{kind}'",), self._describe(tok))
        return self.advance()

    @staticmethod
    def _describe(tok: Token) -> str:
        return "end of input" if tok.kind == "EOF" else f"{tok.text!r}"

    # ----- number expressions -----

    def parse_expr(self) -> Expr:
        node = self.parse_term()
        while self.peek().kind in ("+", "-"):
            op = self.advance()
            rhs = self.parse_term()
            node = Binary(op.kind, node, rhs, op.offset)
        return node

    def parse_term(self) -> Expr:
        node = self.parse_factor()
        while self.peek().kind in ("*", "/"):
            op = self.advance()
            rhs = self.parse_factor()
            node = Binary(op.kind, node, rhs, op.offset)
        return node

    def parse_factor(self) -> Expr:
        tok = self.peek()
        if tok.kind == "-":
            self.advance()
            return Unary("neg", self.parse_factor(), tok.offset)
        if tok.kind == "+":
            self.advance()
            return self.parse_factor()
        return self.parse_power()

    def parse_power(self) -> Expr:
        node = self.parse_atom()
        while self.peek().kind == "^":
            op = self.advance()
            node = Power(node, self.parse_signed_int(), op.offset)
        return node

    def parse_atom(self) -> Expr:
        tok = self.peek()
        if tok.kind == "(":
            self.advance()
            node = self.parse_expr()
            self.expect(")")
            return node
        if tok.kind == "NAME":
            if tok.text in _LITERAL_HEADS:
                return self.parse_literal()
            if tok.text in _FUNCTIONS:
                return self.parse_call()
            raise ParseError(
                tok.offset,
                tuple(f"'{n}'" for n in _LITERAL_HEADS + _FUNCTIONS),
                f"{tok.text!r}",
            )
        raise ParseError(
            tok.offset, ("a literal", "a function", "'('"), self._describe(tok)
        )

    def parse_literal(self) -> Expr:
        head = self.advance()
        self.expect("[")
        if head.text == "c":
            coeffs = self.parse_scalar_list()
            close = self.expect("]")
            if len(coeffs) < 2:
                raise ExprTypeError(head.offset, "c[...] needs at least 2 coefficients")
            return LitCart(tuple(coeffs), head.offset)
        if head.text == "p":
            mod = self.parse_scalar()
            self.expect(";")
            angles = self.parse_scalar_list()
            self.expect("]")
            if mod < 0:
                raise ExprTypeError(head.offset, "polar modulus must be >= 0")
            return LitPolar(mod, tuple(angles), head.offset)
        if head.text == "s3":
            coeffs = self.parse_scalar_list()
            self.expect("]")
            if len(coeffs) != 3:
                raise ExprTypeError(head.offset, "s3[...] needs exactly 3 coefficients")
            return LitS3((coeffs[0], coeffs[1], coeffs[2]), head.offset)
        mod = self.parse_scalar()
        self.expect(";")
        angles = self.parse_scalar_list()
        self.expect("]")
        if len(angles) != 2:
            raise ExprTypeError(head.offset, "s3p[...] needs exactly 2 angles")
        if mod < 0:
            raise ExprTypeError(head.offset, "polar modulus must be >= 0")
        return LitS3Polar(mod, angles[0], angles[1], head.offset)

    def parse_call(self) -> Expr:
        name = self.advance()
        self.expect("(")
        child = self.parse_expr()
        arg: float | int | None = None
        if name.text == "arg" or name.text == "roots":
            self.expect(",")
            arg = self.parse_signed_int()
        elif name.text == "lift":
            self.expect(",")
            arg = self.parse_scalar()
        self.expect(")")
        return Call(name.text, child, arg, name.offset)

    def parse_signed_int(self) -> int:
        tok = self.peek()
        sign = 1
        if tok.kind == "-":
            self.advance()
            sign = -1
            tok = self.peek()
        if tok.kind != "NUM":
            raise ParseError(tok.offset, ("an integer",), self._describe(tok))
        self.advance()
        value = float(tok.text)
        if value != int(value):
            raise ParseError(tok.offset, ("an integer",), f"{tok.text!r}")
        return sign * int(value)

    # ----- scalar (pi-arithmetic) expressions -----

    def parse_scalar_list(self) -> list[float]:
        out = [self.parse_scalar()]
        while self.peek().kind == ",":
            self.advance()
            out.append(self.parse_scalar())
        return out

    def parse_scalar(self) -> float:
        value = self.parse_scalar_term()
        while self.peek().kind in ("+", "-"):
            op = self.advance()
            rhs = self.parse_scalar_term()
            value = value + rhs if op.kind == "+" else value - rhs
        return value

    def parse_scalar_term(self) -> float:
        value = self.parse_scalar_factor()
        while self.peek().kind in ("*", "/"):
            op = self.advance()
            rhs = self.parse_scalar_factor()
            if op.kind == "/":
                if rhs == 0.0:
                    raise ExprTypeError(op.offset, "division by zero in a numeric literal")
                value /= rhs
            else:
                value *= rhs
        return value

    def parse_scalar_factor(self) -> float:
        tok = self.peek()
        if tok.kind == "-":
            self.advance()
            return -self.parse_scalar_factor()
        if tok.kind == "+":
            self.advance()
            return self.parse_scalar_factor()
        value = self.parse_scalar_atom()
        if self.peek().kind == "^":
            self.advance()
            return value ** self.parse_scalar_factor()
        return value

    def parse_scalar_atom(self) -> float:
        tok = self.peek()
        if tok.kind == "NUM":
            self.advance()
            return float(tok.text)
        if tok.kind == "NAME" and tok.text == "pi":
            self.advance()
            return math.pi
        if tok.kind == "(":
            self.advance()
            value = self.parse_scalar()
            self.expect(")")
            return value
        raise ParseError(tok.offset, ("a number", "'pi'", "'('"), self._describe(tok))


def parse(text: str) -> Expr:
    """Parse and type-check an expression."""
    parser = _Parser(text)
    node = parser.parse_expr()
    tail = parser.peek()
    if tail.kind != "EOF":
        raise ParseError(tail.offset, ("end of input",), f"{tail.text!r}")
    check(node)
    return node


# ---------------------------------------------------------------------------
# static types: ('ndim', dim) | ('s3',) | ('scalar',) | ('roots',)

def check(node: Expr) -> tuple:
    if isinstance(node, LitCart):
        return ("ndim", len(node.coeffs))
    if isinstance(node, LitPolar):
        return ("ndim", len(node.angles) + 1)
    if isinstance(node, LitS3):
        return ("s3",)
    if isinstance(node, LitS3Polar):
        return ("s3",)
    if isinstance(node, Unary):
        t = check(node.child)
        if t[0] not in ("ndim", "s3"):
            raise ExprTypeError(node.offset, f"cannot negate a {t[0]} value")
        return t
    if isinstance(node, Binary):
        lt, rt = check(node.left), check(node.right)
        if lt[0] not in ("ndim", "s3") or rt[0] not in ("ndim", "s3"):
            raise ExprTypeError(node.offset, f"'{node.op}' needs number operands")
        if lt[0] != rt[0]:
            raise ExprTypeError(
                node.offset,
                "cannot mix N-dimensional and 3D space numbers in one expression",
            )
        if lt != rt:
            raise ExprTypeError(
                node.offset, f"dimension mismatch: {lt[1]} vs {rt[1]}"
            )
        return lt
    if isinstance(node, Power):
        t = check(node.child)
        if t[0] not in ("ndim", "s3"):
            raise ExprTypeError(node.offset, f"cannot raise a {t[0]} value to a power")
        return t
    if isinstance(node, Call):
        t = check(node.child)
        if t[0] not in ("ndim", "s3"):
            raise ExprTypeError(node.offset, f"{node.fn}() needs a number argument")
        if node.fn == "abs":
            return ("scalar",)
        if node.fn == "conj":
            return t
        if node.fn == "arg":
            top = t[1] - 1 if t[0] == "ndim" else 2
            if not 1 <= node.arg <= top:
                raise ExprTypeError(
                    node.offset, f"argument index must lie in 1..{top}, got {node.arg}"
                )
            return ("scalar",)
        if node.fn == "roots":
            if node.arg < 1:
                raise ExprTypeError(node.offset, f"root order must be >= 1, got {node.arg}")
            return ("roots",)
        if node.fn == "lift":
            if t[0] != "ndim":
                raise ExprTypeError(node.offset, "lift() applies to N-dimensional numbers only")
            return ("ndim", t[1] + 1)
    raise ExprTypeError(0, f"unhandled node {node!r}")


# ---------------------------------------------------------------------------
# evaluation

@dataclass(frozen=True, slots=True)
class RootsValue:
    items: tuple


NDimValue = CartesianHC | PolarHC
S3Value = Space3 | Space3Polar
Value = float | NDimValue | S3Value | RootsValue


def _cart(v: NDimValue) -> CartesianHC:
    return v if isinstance(v, CartesianHC) else from_polar(v)


def _cart3(v: S3Value) -> Space3:
    return v if isinstance(v, Space3) else from_polar3(v)


def _s3_pow(v: S3Value, n: int) -> Space3Polar:
    p = v if isinstance(v, Space3Polar) else to_polar3(v)
    if p.modulus == 0.0 and n < 0:
        raise ZeroDivisionError("negative power of a zero-modulus number")
    return Space3Polar(math.pow(p.modulus, n), n * p.theta, n * p.phi)


def evaluate(node: Expr, orientation: Orientation = Orientation.ANTICLOCKWISE) -> Value:
    """Evaluate a type-checked expression under the given orientation."""
    o = orientation
    if isinstance(node, LitCart):
        return CartesianHC(node.coeffs)
    if isinstance(node, LitPolar):
        return PolarHC(node.modulus, node.angles, o)
    if isinstance(node, LitS3):
        return Space3(*node.coeffs)
    if isinstance(node, LitS3Polar):
        return Space3Polar(node.modulus, node.theta, node.phi)
    if isinstance(node, Unary):
        v = evaluate(node.child, o)
        if isinstance(v, (CartesianHC, PolarHC)):
            return algebra.negate(_cart(v))
        s = _cart3(v)
        return Space3(-s.a, -s.b, -s.c)
    if isinstance(node, Binary):
        lv = evaluate(node.left, o)
        rv = evaluate(node.right, o)
        if isinstance(lv, (CartesianHC, PolarHC)):
            if node.op == "+":
                return algebra.add(_cart(lv), _cart(rv))
            if node.op == "-":
                return algebra.sub(_cart(lv), _cart(rv))
            if node.op == "*":
                return algebra.mul_polar(algebra.as_polar(lv, o), algebra.as_polar(rv, o))
            return algebra.div_polar(algebra.as_polar(lv, o), algebra.as_polar(rv, o))
        if node.op in ("+", "-"):
            a, b = _cart3(lv), _cart3(rv)
            sign = 1.0 if node.op == "+" else -1.0
            return Space3(a.a + sign * b.a, a.b + sign * b.b, a.c + sign * b.c)
        pa = lv if isinstance(lv, Space3Polar) else to_polar3(lv)
        pb = rv if isinstance(rv, Space3Polar) else to_polar3(rv)
        return space3.mul3_polar(pa, pb) if node.op == "*" else space3.div3_polar(pa, pb)
    if isinstance(node, Power):
        v = evaluate(node.child, o)
        if isinstance(v, (CartesianHC, PolarHC)):
            return algebra.pow_int_polar(algebra.as_polar(v, o), node.n)
        return _s3_pow(v, node.n)
    if isinstance(node, Call):
        v = evaluate(node.child, o)
        if node.fn == "abs":
            if isinstance(v, (CartesianHC, PolarHC)):
                return v.modulus if isinstance(v, PolarHC) else modulus(v)
            return v.modulus if isinstance(v, Space3Polar) else modulus3(v)
        if node.fn == "conj":
            if isinstance(v, (CartesianHC, PolarHC)):
                return conjugate(_cart(v))
            return space3.conj3(_cart3(v))
        if node.fn == "arg":
            k = int(node.arg)
            if isinstance(v, (CartesianHC, PolarHC)):
                return arguments(_cart(v), o)[k - 1]
            p = to_polar3(_cart3(v))
            return p.theta if k == 1 else p.phi
        if node.fn == "roots":
            n = int(node.arg)
            if isinstance(v, (CartesianHC, PolarHC)):
                return RootsValue(tuple(algebra.nth_roots(_cart(v), n, o)))
            _, roots = space3.pow_roots3(_cart3(v), n)
            return RootsValue(roots)
        if node.fn == "lift":
            return duality.lift(_cart(v), float(node.arg))
    raise AssertionError(f"unhandled node {node!r}")


# ---------------------------------------------------------------------------
# printing

def _fmt(x: float, digits: int, snap_scale: float | None = None) -> str:
    if snap_scale is not None and abs(x) < 1e-12 * max(snap_scale, 1e-300):
        x = 0.0
    if x == 0.0:
        x = 0.0  # normalize -0.0
    return format(x, f".{digits}g")


def format_value(value: Value, digits: int = 12) -> str:
    """Render a value in the literal grammar (parse-compatible).

    Components smaller than 1e-12 of the value's scale print as 0, so
    products that land on an axis read exactly.
    """
    if isinstance(value, float):
        return _fmt(value, digits)
    if isinstance(value, RootsValue):
        return "\n".join(format_value(v, digits) for v in value.items)
    if isinstance(value, CartesianHC):
        scale = max(abs(c) for c in value.coeffs)
        return "c[" + ",".join(_fmt(c, digits, scale) for c in value.coeffs) + "]"
    if isinstance(value, PolarHC):
        angles = ", ".join(_fmt(a, digits, 1.0) for a in value.angles)
        return f"p[{_fmt(value.modulus, digits)}; {angles}]"
    if isinstance(value, Space3):
        scale = max(abs(c) for c in value.coeffs)
        return "s3[" + ",".join(_fmt(c, digits, scale) for c in value.coeffs) + "]"
    if isinstance(value, Space3Polar):
        return (
            f"s3p[{_fmt(value.modulus, digits)}; "
            f"{_fmt(value.theta, digits, 1.0)}, {_fmt(value.phi, digits, 1.0)}]"
        )
    raise TypeError(f"cannot format {value!r}")


def value_to_dict(value: Value) -> dict:
    """JSON encoding of an evaluation result."""
    if isinstance(value, float):
        return {"kind": "scalar", "value": value}
    if isinstance(value, RootsValue):
        return {"kind": "roots", "roots": [value_to_dict(v) for v in value.items]}
    if isinstance(value, (CartesianHC, PolarHC)):
        return to_dict(value)
    return to_dict3(value)


# ---------------------------------------------------------------------------
# unparsing (printer/parser round trip)

_LEVEL_ADD, _LEVEL_MUL, _LEVEL_UNARY, _LEVEL_POWER, _LEVEL_ATOM = 0, 1, 2, 3, 4


def _level(node: Expr) -> int:
    if isinstance(node, Binary):
        return _LEVEL_ADD if node.op in ("+", "-") else _LEVEL_MUL
    if isinstance(node, Unary):
        return _LEVEL_UNARY
    if isinstance(node, Power):
        return _LEVEL_POWER
    return _LEVEL_ATOM


def unparse(node: Expr) -> str:
    """Literal text for a tree; parse(unparse(t)) equals t."""

    def wrap(child: Expr, minimum: int) -> str:
        text = unparse(child)
        return f"({text})" if _level(child) < minimum else text

    if isinstance(node, LitCart):
        return "c[" + ",".join(repr(c) for c in node.coeffs) + "]"
    if isinstance(node, LitPolar):
        return f"p[{node.modulus!r}; " + ",".join(repr(a) for a in node.angles) + "]"
    if isinstance(node, LitS3):
        return "s3[" + ",".join(repr(c) for c in node.coeffs) + "]"
    if isinstance(node, LitS3Polar):
        return f"s3p[{node.modulus!r}; {node.theta!r}, {node.phi!r}]"
    if isinstance(node, Unary):
        return "-" + wrap(node.child, _LEVEL_UNARY)
    if isinstance(node, Binary):
        minimum = _level(node)
        left = wrap(node.left, minimum)
        right = wrap(node.right, minimum + 1)
        return f"{left} {node.op} {right}"
    if isinstance(node, Power):
        return wrap(node.child, _LEVEL_ATOM) + f"^{node.n}"
    if isinstance(node, Call):
        inner = unparse(node.child)
        if node.fn in ("abs", "conj"):
            return f"{node.fn}({inner})"
        if node.fn in ("arg", "roots"):
            return f"{node.fn}({inner}, {node.arg})"
        return f"lift({inner}, {node.arg!r})"
    raise TypeError(f"cannot unparse {node!r}")
