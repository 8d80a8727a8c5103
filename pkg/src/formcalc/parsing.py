"""Grammar and parser for form expressions.

::

    sum    := term (('+' | '-') term)*
    term   := unary (('*' | '/\\') unary)*
    unary  := ('-' | '+') unary | power
    power  := atom ('^' natural)*
    atom   := rational | 'i' | var | diff | '(' sum ')'

Variables are ``x<i>`` (and ``y<i>`` with paired naming) in real mode,
``z<i>``/``zb<i>`` in complex mode; differentials carry a ``d`` prefix.
``*`` is multiplication by a function, ``/\\`` the wedge product and ``^``
a power of a function.  Expressions are written in standard coordinates and
rebased to the session base point.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction

from .errors import DomainError, ParseError
from .exterior_basis import _merge
from .forms import Form, GradedForm, Space
from .polynomial import COMPLEX, REAL, GaussRat, Poly, rebase

_TOKEN = re.compile(r"""
    (?P<ws>\s+)
  | (?P<num>\d+(?:\.\d+)?(?:/\d+)?)
  | (?P<ident>[A-Za-z]+\d*)
  | (?P<wedge>/\\)
  | (?P<op>[-+*^()])
""", re.VERBOSE)

_NAME = re.compile(r"(d?)(zb|x|y|z)(\d+)$")


@dataclass(frozen=True)
class Token:
    kind: str
    text: str
    pos: int


def tokenize(text: str) -> list[Token]:
    tokens = []
    pos = 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m is None:
            raise ParseError(f"unexpected character {text[pos]!r}", pos)
        kind = m.lastgroup
        if kind != "ws":
            tokens.append(Token(kind, m.group(), pos))
        pos = m.end()
    tokens.append(Token("end", "", len(text)))
    return tokens


# -- AST ------------------------------------------------------------------------------

@dataclass(frozen=True)
class Rational:
    value: Fraction
    pos: int


@dataclass(frozen=True)
class Imag:
    pos: int


@dataclass(frozen=True)
class Var:
    family: str  # "x", "y", "z" or "zb"
    index: int
    pos: int


@dataclass(frozen=True)
class Diff:
    family: str
    index: int
    pos: int


@dataclass(frozen=True)
class Power:
    base: object
    exponent: int
    pos: int


@dataclass(frozen=True)
class Product:
    left: object
    right: object
    pos: int


@dataclass(frozen=True)
class Wedge:
    left: object
    right: object
    pos: int


@dataclass(frozen=True)
class Sum:
    left: object
    right: object
    pos: int


@dataclass(frozen=True)
class Negation:
    operand: object
    pos: int


class _Parser:
    def __init__(self, text: str):
        self.tokens = tokenize(text)
        self.i = 0

    def peek(self) -> Token:
        return self.tokens[self.i]

    def take(self) -> Token:
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def expect(self, text: str) -> Token:
        tok = self.take()
        if tok.text != text:
            found = tok.text or "end of input"
            raise ParseError(f"expected {text!r}, found {found!r}", tok.pos)
        return tok

    def parse(self):
        if self.peek().kind == "end":
            raise ParseError("empty expression", 0)
        node = self.sum()
        tok = self.peek()
        if tok.kind != "end":
            raise ParseError(f"unexpected {tok.text!r}", tok.pos)
        return node

    def sum(self):
        node = self.term()
        while self.peek().text in ("+", "-"):
            op = self.take()
            rhs = self.term()
            node = Sum(node, rhs if op.text == "+" else Negation(rhs, op.pos), op.pos)
        return node

    def term(self):
        node = self.unary()
        while True:
            tok = self.peek()
            if tok.text == "*":
                self.take()
                node = Product(node, self.unary(), tok.pos)
            elif tok.kind == "wedge":
                self.take()
                node = Wedge(node, self.unary(), tok.pos)
            else:
                return node

    def unary(self):
        tok = self.peek()
        if tok.text == "-":
            self.take()
            return Negation(self.unary(), tok.pos)
        if tok.text == "+":
            self.take()
            return self.unary()
        return self.power()

    def power(self):
        node = self.atom()
        while self.peek().text == "^":
            op = self.take()
            tok = self.take()
            if tok.kind != "num" or not tok.text.isdigit():
                raise ParseError("exponent must be a natural number", tok.pos)
            node = Power(node, int(tok.text), op.pos)
        return node

    def atom(self):
        tok = self.take()
        if tok.kind == "num":
            try:
                return Rational(Fraction(tok.text), tok.pos)
            except ZeroDivisionError:
                raise ParseError("division by zero in rational literal", tok.pos) from None
        if tok.kind == "ident":
            if tok.text == "i":
                return Imag(tok.pos)
            m = _NAME.match(tok.text)
            if m is None:
                raise ParseError(f"unknown variable {tok.text!r}", tok.pos)
            prefix, family, idx = m.groups()
            cls = Diff if prefix else Var
            return cls(family, int(idx), tok.pos)
        if tok.text == "(":
            node = self.sum()
            self.expect(")")
            return node
        found = tok.text or "end of input"
        raise ParseError(f"unexpected {found!r}", tok.pos)


def parse_expr(text: str):
    """Parse text into an AST without interpreting variables."""
    return _Parser(text).parse()


# -- session and interpretation ---------------------------------------------------------

@dataclass(frozen=True)
class SessionConfig:
    """Mode, dimension, base point and output style shared by parse/format/CLI.

    ``base`` follows :func:`~formcalc.polynomial.expand_point`.
    ``paired`` selects real coordinates named x1, y1, x2, y2, ... (the layout
    produced by realification); it needs an even dimension.
    """

    mode: str = REAL
    dim: int = 1
    base: tuple | None = None
    output: str = "text"
    paired: bool = False

    def space(self) -> Space:
        # complex mode also accepts 2*dim entries (z0 then its conjugate); Space checks arity
        base = self.base if self.base is not None else (0,) * self.dim
        if self.paired and (self.mode != REAL or self.dim % 2):
            raise DomainError("paired naming needs real mode with an even dimension")
        return Space(self.mode, self.dim, tuple(base))


def _label(node, cfg: SessionConfig) -> int:
    n = cfg.dim
    name = ("d" if isinstance(node, Diff) else "") + f"{node.family}{node.index}"
    if node.index < 1:
        raise ParseError(f"coordinate index must start at 1 in {name!r}", node.pos)
    if cfg.mode == COMPLEX:
        if node.family not in ("z", "zb"):
            raise ParseError(f"real variable {name!r} in a complex-mode expression", node.pos)
        if node.index > n:
            raise ParseError(f"{name!r} exceeds dimension {n}", node.pos)
        return node.index - 1 if node.family == "z" else n + node.index - 1
    if node.family not in ("x", "y"):
        raise ParseError(f"complex variable {name!r} in a real-mode expression", node.pos)
    if cfg.paired:
        if node.index > n // 2:
            raise ParseError(f"{name!r} exceeds dimension {n} (paired coordinates)", node.pos)
        return 2 * (node.index - 1) + (node.family == "y")
    if node.family == "y":
        raise ParseError(f"unknown variable {name!r} (y coordinates need paired naming)", node.pos)
    if node.index > n:
        raise ParseError(f"{name!r} exceeds dimension {n}", node.pos)
    return node.index - 1


def _add(a: dict, b: dict) -> dict:
    out = dict(a)
    for t, c in b.items():
        s = out[t] + c if t in out else c
        if s:
            out[t] = s
        else:
            out.pop(t, None)
    return out


def _is_function(v: dict) -> bool:
    return all(not t for t in v)


def _interpret(node, cfg: SessionConfig, nv: int) -> dict:
    """Evaluate an AST to a graded map basis -> Poly in unshifted coordinates."""
    if isinstance(node, Rational):
        return {(): Poly.constant(nv, node.value)} if node.value else {}
    if isinstance(node, Imag):
        return {(): Poly.constant(nv, GaussRat(0, 1))}
    if isinstance(node, Var):
        return {(): Poly.variable(nv, _label(node, cfg))}
    if isinstance(node, Diff):
        return {(_label(node, cfg),): Poly.constant(nv, 1)}
    if isinstance(node, Negation):
        return {t: -c for t, c in _interpret(node.operand, cfg, nv).items()}
    if isinstance(node, Sum):
        return _add(_interpret(node.left, cfg, nv), _interpret(node.right, cfg, nv))
    if isinstance(node, Power):
        base = _interpret(node.base, cfg, nv)
        if not _is_function(base):
            raise ParseError("differentials cannot be raised to a power", node.pos)
        p = base.get((), Poly.zero(nv)) ** node.exponent
        return {(): p} if p else {}
    if isinstance(node, (Product, Wedge)):
        a = _interpret(node.left, cfg, nv)
        b = _interpret(node.right, cfg, nv)
        if isinstance(node, Product) and not (_is_function(a) or _is_function(b)):
            raise ParseError("'*' between two differential forms; use '/\\' for the wedge product", node.pos)
        out: dict = {}
        for ta, ca in a.items():
            for tb, cb in b.items():
                sign, t = _merge(ta, tb)
                if sign:
                    p = ca * cb
                    out = _add(out, {t: p if sign > 0 else -p})
        return out
    raise ParseError(f"unsupported syntax node {type(node).__name__}")


def parse_graded(text: str, cfg: SessionConfig) -> GradedForm:
    """Parse to a possibly mixed-degree :class:`GradedForm` at the session base point."""
    space = cfg.space()
    ast = parse_expr(text)
    raw = _interpret(ast, cfg, space.nvars)
    zero = (0,) * space.dim
    shifted = {t: rebase(c, zero, space.base, space.mode) for t, c in raw.items()}
    return GradedForm.from_terms(space, {t: c for t, c in shifted.items() if c})


def parse(text: str, cfg: SessionConfig) -> Form:
    """Parse a degree-homogeneous form expression."""
    graded = parse_graded(text, cfg)
    if len(graded.degrees) > 1:
        raise ParseError(f"expression mixes form degrees {graded.degrees}")
    return graded.homogeneous()


def parse_scalar(text: str):
    """Exact scalar from CLI syntax: ``3``, ``-1/2``, ``0.25``, ``1+2i``, ``-i``, ``3/2i``."""
    s = text.strip().replace(" ", "")
    if not s:
        raise ParseError("empty scalar")
    try:
        if not s.endswith("i"):
            return Fraction(s)
        body = s[:-1]
        # split the imaginary part off at the last sign that is not leading
        cut = max(body.rfind("+"), body.rfind("-"))
        if cut > 0:
            re_part, im_part = body[:cut], body[cut:]
        else:
            re_part, im_part = "0", body
        if im_part in ("", "+"):
            im_part = "1"
        elif im_part == "-":
            im_part = "-1"
        im = Fraction(im_part)
        return GaussRat(Fraction(re_part), im) if im else Fraction(re_part)
    except (ValueError, ZeroDivisionError):
        raise ParseError(f"bad scalar {text!r}") from None


def parse_point(text: str) -> tuple:
    """Comma-separated scalars, e.g. ``0,1/2`` or ``1+2i,0``."""
    return tuple(parse_scalar(part) for part in text.split(","))
