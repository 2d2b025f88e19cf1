"""Parse polynomial text into the exponent support of a germ.

Only the support matters downstream, so coefficients are read as exact
integers, combined over like monomials, and then thrown away except to
decide which monomials survive cancellation.

Grammar (whitespace between tokens is ignored)::

    poly   := term { ("+" | "-") term } ;
    term   := [ sign ] [ nat "*" ] factor { "*" factor } | [ sign ] nat ;
    factor := ident [ "^" nat ] ;
    ident  := letter { letter | digit | "_" } ;
    nat    := digit { digit } ;
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterable, Sequence

_IDENT = re.compile(r"[A-Za-z][A-Za-z0-9_]*\Z")
_TOKEN = re.compile(
    r"\s*(?:(?P<nat>\d+(?:\.\d*)?)|(?P<ident>[A-Za-z][A-Za-z0-9_]*)|(?P<op>[-+*^]))"
)


class ParseError(ValueError):
    """Malformed or unusable polynomial input."""

    def __init__(self, message: str, position: int | None = None):
        self.position = position
        if position is not None:
            message = f"{message} (at position {position})"
        super().__init__(message)


@dataclass(frozen=True)
class VariableMap:
    names: tuple[str, ...]

    def __post_init__(self):
        if not self.names:
            raise ValueError("at least one variable is required")
        for name in self.names:
            if not _IDENT.match(name):
                raise ValueError(f"invalid variable name {name!r}")
        if len(set(self.names)) != len(self.names):
            raise ValueError(f"duplicate variable names in {self.names}")

    @classmethod
    def parse(cls, text: str) -> VariableMap:
        """Build from a comma-separated list such as ``"x,y,z"``."""
        return cls(tuple(part.strip() for part in text.split(",") if part.strip()))

    def __len__(self) -> int:
        return len(self.names)

    def index(self, name: str) -> int:
        return self.names.index(name)


@dataclass(frozen=True)
class GermSupport:
    """Exponent vectors with non-zero coefficient, sorted and duplicate-free."""

    ambient_dim: int
    points: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        if self.ambient_dim < 1:
            raise ValueError("ambient dimension must be positive")
        if not self.points:
            raise ValueError("support is empty")
        for p in self.points:
            if len(p) != self.ambient_dim or any(x < 0 for x in p):
                raise ValueError(f"bad exponent vector {p}")
        if len(set(self.points)) != len(self.points):
            raise ValueError("duplicate exponent vectors")

    @classmethod
    def of(cls, points: Iterable[Sequence[int]], ambient_dim: int | None = None) -> GermSupport:
        pts = sorted({tuple(int(x) for x in p) for p in points})
        if ambient_dim is None:
            if not pts:
                raise ValueError("support is empty")
            ambient_dim = len(pts[0])
        return cls(ambient_dim, tuple(pts))

    def to_text(self, vars: VariableMap) -> str:
        """Render as a sum of monomials with coefficient 1."""
        terms = []
        for p in self.points:
            factors = [n if e == 1 else f"{n}^{e}" for n, e in zip(vars.names, p) if e]
            terms.append("*".join(factors) or "1")
        return " + ".join(terms)


def _tokenize(text: str):
    pos = 0
    tokens = []
    while True:
        while pos < len(text) and text[pos].isspace():
            pos += 1
        if pos == len(text):
            break
        m = _TOKEN.match(text, pos)
        if not m:
            raise ParseError(f"unexpected character {text[pos]!r}", pos)
        start = m.start(m.lastgroup)
        tokens.append((m.lastgroup, m.group(m.lastgroup), start))
        pos = m.end()
    tokens.append(("end", "", len(text)))
    return tokens


class _Parser:
    def __init__(self, text: str, vars: VariableMap):
        self.tokens = _tokenize(text)
        self.i = 0
        self.vars = vars

    def peek(self):
        return self.tokens[self.i]

    def take(self):
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def nat(self, what: str) -> int:
        kind, value, pos = self.take()
        if kind != "nat":
            if kind == "op" and value == "-" and what == "exponent":
                raise ParseError("negative exponents are not allowed", pos)
            raise ParseError(f"expected {what}, found {value or 'end of input'!r}", pos)
        if "." in value:
            raise ParseError(f"non-integer {what} {value!r}", pos)
        return int(value)

    def poly(self) -> dict[tuple[int, ...], int]:
        acc: dict[tuple[int, ...], int] = {}
        sign = 1
        while True:
            coeff, expo = self.term(sign)
            acc[expo] = acc.get(expo, 0) + coeff
            kind, value, pos = self.peek()
            if kind == "end":
                return acc
            if kind == "op" and value in "+-":
                self.take()
                sign = 1 if value == "+" else -1
                continue
            raise ParseError(f"expected '+' or '-', found {value!r}", pos)

    def term(self, sign: int):
        kind, value, _ = self.peek()
        if kind == "op" and value in "+-":
            self.take()
            if value == "-":
                sign = -sign
        coeff = 1
        kind, value, pos = self.peek()
        expo = [0] * len(self.vars)
        if kind == "nat":
            coeff = self.nat("coefficient")
            kind, value, pos = self.peek()
            if not (kind == "op" and value == "*"):
                return sign * coeff, tuple(expo)
            self.take()
        self.factor(expo)
        while True:
            kind, value, _ = self.peek()
            if kind == "op" and value == "*":
                self.take()
                self.factor(expo)
            else:
                return sign * coeff, tuple(expo)

    def factor(self, expo: list[int]) -> None:
        kind, value, pos = self.take()
        if kind != "ident":
            raise ParseError(f"expected a variable, found {value or 'end of input'!r}", pos)
        if value not in self.vars.names:
            raise ParseError(f"unknown variable {value!r}", pos)
        power = 1
        k, v, _ = self.peek()
        if k == "op" and v == "^":
            self.take()
            power = self.nat("exponent")
        expo[self.vars.index(value)] += power


def parse_polynomial(text: str, vars: VariableMap) -> GermSupport:
    """Support of the polynomial ``text`` in the coordinates ``vars``.

    Raises :class:`ParseError` on syntax errors, unknown variables, bad
    exponents, a zero polynomial, or a non-zero constant term (the germ
    must vanish at the origin).
    """
    coeffs = _Parser(text, vars).poly()
    points = sorted(e for e, c in coeffs.items() if c != 0)
    if not points:
        raise ParseError("empty support: the polynomial is identically zero")
    if not any(points[0]):
        raise ParseError("germ does not vanish at origin: non-zero constant term")
    return GermSupport(len(vars), tuple(points))
