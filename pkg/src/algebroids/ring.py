"""Exact multivariate polynomial arithmetic over the rationals.

A :class:`Chart` is an ordered tuple of coordinate names.  A :class:`Poly`
over a chart is stored sparsely as a dictionary mapping exponent tuples (one
nonnegative int per coordinate, in chart order) to nonzero ``Fraction``
coefficients.  The empty dict is the zero polynomial.  Because coefficients
are exact rationals and the representation is canonical (no zero terms,
exponent tuples fully determined by the chart), structural equality of the
term maps decides equality of polynomials — which is what makes "this bracket
is literally zero" a decidable statement everywhere else in the package.

Expression syntax accepted by :func:`parse_poly`::

    expr     := term (('+' | '-') term)*
    term     := factor ('*' factor)*
    factor   := base ('^' nonneg-int)?
    base     := rational | identifier | '(' expr ')'
    rational := int ('/' positive-int)?

Whitespace is ignored; there is *no* implicit multiplication (``2x`` and
``x y`` are syntax errors, write ``2*x``).  A leading ``-`` binds only to an
integer literal, so ``-x`` must be written ``-1*x`` (the canonical printer
does exactly that).  :func:`poly_to_string` emits a canonical form that
:func:`parse_poly` maps back to the identical term dict.
"""

from __future__ import annotations

import re
from fractions import Fraction
from typing import Dict, Iterable, Mapping, Tuple, Union

from .errors import (
    EmptyChart,
    MissingCoordinate,
    NegativeExponent,
    PolySyntaxError,
    UnknownVariable,
)

Exponent = Tuple[int, ...]
Scalar = Union[int, Fraction]

_IDENT_RE = re.compile(r"[A-Za-z_][A-Za-z0-9_]*\Z")


class Chart:
    """An ordered polynomial coordinate chart.

    Coordinate names must be distinct identifiers matching
    ``[A-Za-z_][A-Za-z0-9_]*``.  The empty chart is allowed (its polynomial
    ring is just the rationals); it is how Lie algebras enter the picture as
    algebroids over a point.
    """

    __slots__ = ("coords", "_index")

    def __init__(self, coords: Iterable[str]):
        coords = tuple(coords)
        for name in coords:
            if not _IDENT_RE.match(name):
                raise PolySyntaxError(f"invalid coordinate name {name!r}")
        if len(set(coords)) != len(coords):
            raise PolySyntaxError(f"duplicate coordinate in chart {coords!r}")
        self.coords = coords
        self._index = {name: i for i, name in enumerate(coords)}

    @property
    def dim(self) -> int:
        return len(self.coords)

    def index(self, name: str) -> int:
        try:
            return self._index[name]
        except KeyError:
            raise UnknownVariable(
                f"{name!r} is not a coordinate of chart {self.coords!r}"
            ) from None

    def __contains__(self, name: str) -> bool:
        return name in self._index

    def __eq__(self, other) -> bool:
        return isinstance(other, Chart) and self.coords == other.coords

    def __hash__(self) -> int:
        return hash(self.coords)

    def __repr__(self) -> str:
        return f"Chart({list(self.coords)!r})"

    # -- ring elements ------------------------------------------------------

    def zero(self) -> "Poly":
        return Poly._make(self, {})

    def one(self) -> "Poly":
        return self.const(1)

    def const(self, value: Scalar) -> "Poly":
        c = Fraction(value)
        if c == 0:
            return Poly._make(self, {})
        return Poly._make(self, {(0,) * self.dim: c})

    def coordinate(self, name: str) -> "Poly":
        i = self.index(name)
        exp = tuple(1 if j == i else 0 for j in range(self.dim))
        return Poly._make(self, {exp: Fraction(1)})

    def coordinate_polys(self) -> Tuple["Poly", ...]:
        return tuple(self.coordinate(name) for name in self.coords)


class Poly:
    """A polynomial over a fixed chart, with exact rational coefficients."""

    __slots__ = ("chart", "terms", "_hash")

    def __init__(self, chart: Chart, terms: Mapping[Exponent, Scalar]):
        normalized: Dict[Exponent, Fraction] = {}
        for exp, coeff in terms.items():
            exp = tuple(exp)
            if len(exp) != chart.dim:
                raise PolySyntaxError(
                    f"exponent tuple {exp!r} has wrong length for chart {chart.coords!r}"
                )
            if any(e < 0 for e in exp):
                raise NegativeExponent(f"negative exponent in {exp!r}")
            c = Fraction(coeff)
            if c != 0:
                normalized[exp] = normalized.get(exp, Fraction(0)) + c
        for exp in [e for e, c in normalized.items() if c == 0]:
            del normalized[exp]
        self.chart = chart
        self.terms = normalized
        self._hash = None

    @classmethod
    def _make(cls, chart: Chart, terms: Dict[Exponent, Fraction]) -> "Poly":
        # Internal fast path: `terms` must already be normalized.
        self = object.__new__(cls)
        self.chart = chart
        self.terms = terms
        self._hash = None
        return self

    # -- basic queries -------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def is_constant(self) -> bool:
        return all(all(e == 0 for e in exp) for exp in self.terms)

    def constant_value(self) -> Fraction:
        """The coefficient of the constant monomial."""
        zero_exp = (0,) * self.chart.dim
        return self.terms.get(zero_exp, Fraction(0))

    def total_degree(self) -> int:
        """Total degree; the zero polynomial has degree 0 by convention."""
        if not self.terms:
            return 0
        return max(sum(exp) for exp in self.terms)

    # -- arithmetic ----------------------------------------------------------

    def _coerce(self, other) -> "Poly":
        if isinstance(other, Poly):
            if other.chart != self.chart:
                raise PolySyntaxError(
                    f"cannot combine polynomials over charts "
                    f"{self.chart.coords!r} and {other.chart.coords!r}"
                )
            return other
        if isinstance(other, (int, Fraction)):
            return self.chart.const(other)
        return NotImplemented

    def __add__(self, other) -> "Poly":
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        result = dict(self.terms)
        for exp, coeff in other.terms.items():
            acc = result.get(exp)
            if acc is None:
                result[exp] = coeff
            else:
                acc = acc + coeff
                if acc == 0:
                    del result[exp]
                else:
                    result[exp] = acc
        return Poly._make(self.chart, result)

    __radd__ = __add__

    def __neg__(self) -> "Poly":
        return Poly._make(self.chart, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other) -> "Poly":
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> "Poly":
        return (-self) + other

    def __mul__(self, other) -> "Poly":
        if isinstance(other, (int, Fraction)):
            if other == 0:
                return Poly._make(self.chart, {})
            c = Fraction(other)
            return Poly._make(self.chart, {e: v * c for e, v in self.terms.items()})
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        a, b = self.terms, other.terms
        if len(a) > len(b):
            a, b = b, a
        result: Dict[Exponent, Fraction] = {}
        for ea, ca in a.items():
            for eb, cb in b.items():
                exp = tuple(x + y for x, y in zip(ea, eb))
                acc = result.get(exp)
                if acc is None:
                    result[exp] = ca * cb
                else:
                    acc = acc + ca * cb
                    if acc == 0:
                        del result[exp]
                    else:
                        result[exp] = acc
        return Poly._make(self.chart, result)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "Poly":
        if not isinstance(n, int) or n < 0:
            raise NegativeExponent(f"polynomial power must be a nonnegative int, got {n!r}")
        result = self.chart.one()
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction)):
            other = self.chart.const(other)
        if not isinstance(other, Poly):
            return NotImplemented
        return self.chart == other.chart and self.terms == other.terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.chart.coords, tuple(sorted(self.terms.items()))))
        return self._hash

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __str__(self) -> str:
        return poly_to_string(self)

    def __repr__(self) -> str:
        return f"Poly({poly_to_string(self)!r}, chart={list(self.chart.coords)!r})"

    # -- calculus ------------------------------------------------------------

    def partial(self, name: str) -> "Poly":
        """Formal partial derivative with respect to a chart coordinate."""
        i = self.chart.index(name)
        result: Dict[Exponent, Fraction] = {}
        for exp, coeff in self.terms.items():
            e = exp[i]
            if e == 0:
                continue
            new_exp = exp[:i] + (e - 1,) + exp[i + 1:]
            acc = result.get(new_exp, Fraction(0)) + coeff * e
            if acc == 0:
                result.pop(new_exp, None)
            else:
                result[new_exp] = acc
        return Poly._make(self.chart, result)

    def eval_at(self, point: Mapping[str, Scalar]) -> Fraction:
        """Evaluate at a rational point given as ``{coordinate: value}``.

        Every chart coordinate must be present (``MissingCoordinate``
        otherwise); extra keys are ignored so a point on a larger chart can be
        reused on its subcharts.
        """
        values = []
        for name in self.chart.coords:
            if name not in point:
                raise MissingCoordinate(
                    f"point does not assign a value to coordinate {name!r}"
                )
            values.append(Fraction(point[name]))
        total = Fraction(0)
        for exp, coeff in self.terms.items():
            term = coeff
            for v, e in zip(values, exp):
                if e:
                    term *= v ** e
            total += term
        return total

    # -- chart transport ------------------------------------------------------

    def transport(self, new_chart: Chart, rename: Mapping[str, str] | None = None) -> "Poly":
        """Reinterpret this polynomial over ``new_chart``.

        Each coordinate of the old chart must map (via ``rename``, default the
        identity) to a coordinate of the new chart.  Used when pulling
        coefficients back along chart extensions (tangent lifts, dual-bundle
        charts) and when permuting coordinate order between equivalent charts.
        """
        rename = rename or {}
        column = []
        for name in self.chart.coords:
            target = rename.get(name, name)
            column.append(new_chart.index(target))
        n = new_chart.dim
        result: Dict[Exponent, Fraction] = {}
        for exp, coeff in self.terms.items():
            new_exp = [0] * n
            for j, e in zip(column, exp):
                new_exp[j] += e
            key = tuple(new_exp)
            acc = result.get(key, Fraction(0)) + coeff
            if acc == 0:
                result.pop(key, None)
            else:
                result[key] = acc
        return Poly._make(new_chart, result)


# -- module-level operation names used throughout the package ---------------

def partial(p: Poly, var: str) -> Poly:
    """Partial derivative of ``p`` with respect to coordinate ``var``."""
    return p.partial(var)


def eval_at(p: Poly, point: Mapping[str, Scalar]) -> Fraction:
    """Evaluate ``p`` at a rational point ``{coordinate: value}``."""
    return p.eval_at(point)


# -- parsing -----------------------------------------------------------------

_TOKEN_RE = re.compile(
    r"\s*(?:(?P<num>\d+)|(?P<ident>[A-Za-z_][A-Za-z0-9_]*)|(?P<op>[-+*/^()]))"
)


def _tokenize(text: str):
    tokens = []
    pos = 0
    while pos < len(text):
        m = _TOKEN_RE.match(text, pos)
        if m is None:
            stripped = text[pos:].lstrip()
            if not stripped:
                break
            raise PolySyntaxError(
                f"unexpected character {stripped[0]!r}", position=pos
            )
        if m.group("num") is not None:
            tokens.append(("num", m.group("num"), m.start("num")))
        elif m.group("ident") is not None:
            tokens.append(("ident", m.group("ident"), m.start("ident")))
        else:
            tokens.append(("op", m.group("op"), m.start("op")))
        pos = m.end()
    return tokens


class _Parser:
    """Recursive-descent parser for the expression grammar in the module doc."""

    def __init__(self, text: str, chart: Chart):
        self.text = text
        self.chart = chart
        self.tokens = _tokenize(text)
        self.pos = 0

    def peek(self):
        if self.pos < len(self.tokens):
            return self.tokens[self.pos]
        return (None, None, len(self.text))

    def advance(self):
        tok = self.peek()
        self.pos += 1
        return tok

    def expect_op(self, op: str):
        kind, value, at = self.peek()
        if kind != "op" or value != op:
            raise PolySyntaxError(f"expected {op!r}", position=at)
        self.advance()

    def at_op(self, *ops: str) -> bool:
        kind, value, _ = self.peek()
        return kind == "op" and value in ops

    def parse(self) -> Poly:
        result = self.expr()
        kind, value, at = self.peek()
        if kind is not None:
            raise PolySyntaxError(f"unexpected trailing {value!r}", position=at)
        return result

    def expr(self) -> Poly:
        result = self.term()
        while self.at_op("+", "-"):
            op = self.advance()[1]
            rhs = self.term()
            result = result + rhs if op == "+" else result - rhs
        return result

    def term(self) -> Poly:
        result = self.factor()
        while self.at_op("*"):
            self.advance()
            result = result * self.factor()
        return result

    def factor(self) -> Poly:
        base = self.base()
        if self.at_op("^"):
            self.advance()
            kind, value, at = self.peek()
            if kind == "op" and value == "-":
                raise NegativeExponent(
                    f"negative exponent at position {at} in {self.text!r}"
                )
            if kind != "num":
                raise PolySyntaxError("expected a nonnegative integer exponent", position=at)
            self.advance()
            return base ** int(value)
        return base

    def base(self) -> Poly:
        kind, value, at = self.peek()
        if kind == "op" and value == "-":
            # A sign may open a rational literal, nothing else.
            self.advance()
            kind, value, at = self.peek()
            if kind != "num":
                raise PolySyntaxError(
                    "'-' must be followed by an integer literal here "
                    "(write -1*x for a negated coordinate)",
                    position=at,
                )
            return -self.rational()
        if kind == "num":
            return self.rational()
        if kind == "ident":
            self.advance()
            if value not in self.chart:
                raise UnknownVariable(
                    f"{value!r} is not a coordinate of chart {self.chart.coords!r}"
                )
            return self.chart.coordinate(value)
        if kind == "op" and value == "(":
            self.advance()
            inner = self.expr()
            self.expect_op(")")
            return inner
        raise PolySyntaxError("expected a rational, coordinate, or '('", position=at)

    def rational(self) -> Poly:
        kind, value, at = self.peek()
        if kind != "num":
            raise PolySyntaxError("expected an integer literal", position=at)
        self.advance()
        numerator = int(value)
        if self.at_op("/"):
            self.advance()
            kind, value, at = self.peek()
            if kind != "num":
                raise PolySyntaxError("expected an integer denominator", position=at)
            self.advance()
            if int(value) == 0:
                raise PolySyntaxError("denominator must be positive", position=at)
            return self.chart.const(Fraction(numerator, int(value)))
        return self.chart.const(numerator)


def parse_poly(text: str, chart: Chart) -> Poly:
    """Parse an expression string into a canonical :class:`Poly`."""
    return _Parser(text, chart).parse()


# -- canonical printing ------------------------------------------------------

def _monomial_string(chart: Chart, exp: Exponent) -> str:
    parts = []
    for name, e in zip(chart.coords, exp):
        if e == 1:
            parts.append(name)
        elif e > 1:
            parts.append(f"{name}^{e}")
    return "*".join(parts)


def poly_to_string(p: Poly) -> str:
    """Canonical string form: descending lexicographic monomial order, and
    grammar-safe signs (a leading negative term prints its coefficient, e.g.
    ``-1*x``, because bare ``-x`` is not in the grammar)."""
    if not p.terms:
        return "0"
    pieces = []
    for exp in sorted(p.terms, reverse=True):
        coeff = p.terms[exp]
        mono = _monomial_string(p.chart, exp)
        first = not pieces
        mag = -coeff if coeff < 0 else coeff
        if mono:
            body = mono if mag == 1 else f"{mag}*{mono}"
        else:
            body = str(mag)
        if first:
            if coeff < 0:
                # "-x" is not parseable; "-1*x" and "-3/2" are.
                pieces.append(f"-{mag}*{mono}" if mono else f"-{mag}")
            else:
                pieces.append(body)
        else:
            pieces.append(f" - {body}" if coeff < 0 else f" + {body}")
    return "".join(pieces)
