"""Ring layer: chart/polynomial arithmetic, the expression grammar, printing."""

import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from algebroids.errors import (
    MissingCoordinate,
    NegativeExponent,
    PolySyntaxError,
    UnknownVariable,
)
from algebroids.ring import Chart, Poly, eval_at, parse_poly, partial, poly_to_string

XY = Chart(["x", "y"])
X = Chart(["x"])
POINT = Chart([])


def p(text, chart=XY):
    return parse_poly(text, chart)


# --- parsing ----------------------------------------------------------------

def test_parse_basic_forms():
    assert p("0").is_zero()
    assert p("3/2") == Fraction(3, 2)
    assert p("-3/2") == Fraction(-3, 2)
    assert p("x + y") == XY.coordinate("x") + XY.coordinate("y")
    assert p("x^2*y") == XY.coordinate("x") ** 2 * XY.coordinate("y")
    assert p("(x + y)^2") == p("x^2 + 2*x*y + y^2")
    assert p("2 - 3") == -1
    assert p("3 - -2") == 5
    assert p("2 * -3") == -6
    assert p("x^0") == 1


def test_parse_whitespace_is_ignored():
    assert p(" x +\t2*y ") == p("x+2*y")


def test_parse_rejects_implicit_multiplication():
    with pytest.raises(PolySyntaxError):
        p("2x")
    with pytest.raises(PolySyntaxError):
        p("x y")
    with pytest.raises(PolySyntaxError):
        p("2(x)")


def test_parse_rejects_bare_negated_variable():
    # The grammar only allows '-' to open an integer literal.
    with pytest.raises(PolySyntaxError):
        p("-x")
    with pytest.raises(PolySyntaxError):
        p("-(x)")
    assert p("-1*x") == -p("x")
    assert p("0 - x") == -p("x")


def test_parse_error_classes():
    with pytest.raises(UnknownVariable):
        p("z")
    with pytest.raises(NegativeExponent):
        p("x^-1")
    with pytest.raises(PolySyntaxError):
        p("x^(2)")
    with pytest.raises(PolySyntaxError):
        p("x +")
    with pytest.raises(PolySyntaxError):
        p("x + + y")
    with pytest.raises(PolySyntaxError):
        p("(x")
    with pytest.raises(PolySyntaxError):
        p("x)")
    with pytest.raises(PolySyntaxError):
        p("1/0")
    with pytest.raises(PolySyntaxError):
        p("x/2")  # '/' only joins integer literals
    with pytest.raises(PolySyntaxError):
        p("")


def test_empty_chart_constants_only():
    assert parse_poly("5/3 + 1", POINT) == Fraction(8, 3)
    with pytest.raises(UnknownVariable):
        parse_poly("x", POINT)


def test_chart_validation():
    with pytest.raises(PolySyntaxError):
        Chart(["x", "x"])
    with pytest.raises(PolySyntaxError):
        Chart(["2bad"])


# --- arithmetic -------------------------------------------------------------

def test_ring_smoke():
    x, y = XY.coordinate("x"), XY.coordinate("y")
    assert (x + y) * (x - y) == x ** 2 - y ** 2
    assert x - x == XY.zero()
    assert (x * y) ** 3 == x ** 3 * y ** 3
    assert 2 * x == x + x
    assert Fraction(1, 2) * (x + x) == x


def _random_poly(rng, chart, degree=3, max_terms=4):
    terms = {}
    for _ in range(rng.randint(0, max_terms)):
        exp = [0] * chart.dim
        for _ in range(rng.randint(0, degree)):
            if chart.dim:
                exp[rng.randrange(chart.dim)] += 1
        terms[tuple(exp)] = Fraction(rng.randint(-6, 6), rng.randint(1, 4))
    return Poly(chart, terms)


def test_ring_laws_random():
    rng = random.Random(20260818)
    for _ in range(200):
        a = _random_poly(rng, XY)
        b = _random_poly(rng, XY)
        c = _random_poly(rng, XY)
        assert a + b == b + a
        assert a * b == b * a
        assert (a + b) + c == a + (b + c)
        assert (a * b) * c == a * (b * c)
        assert a * (b + c) == a * b + a * c


def test_partial_is_a_derivation():
    rng = random.Random(7)
    for _ in range(100):
        a = _random_poly(rng, XY)
        b = _random_poly(rng, XY)
        for v in ("x", "y"):
            assert partial(a * b, v) == partial(a, v) * b + a * partial(b, v)
            assert partial(a + b, v) == partial(a, v) + partial(b, v)


def test_partials_commute():
    rng = random.Random(8)
    for _ in range(100):
        a = _random_poly(rng, XY, degree=4)
        assert partial(partial(a, "x"), "y") == partial(partial(a, "y"), "x")


def test_eval_is_a_ring_homomorphism():
    rng = random.Random(9)
    for _ in range(100):
        a = _random_poly(rng, XY)
        b = _random_poly(rng, XY)
        pt = {"x": Fraction(rng.randint(-5, 5), rng.randint(1, 3)),
              "y": Fraction(rng.randint(-5, 5), rng.randint(1, 3))}
        assert eval_at(a + b, pt) == eval_at(a, pt) + eval_at(b, pt)
        assert eval_at(a * b, pt) == eval_at(a, pt) * eval_at(b, pt)


def test_eval_requires_full_point():
    with pytest.raises(MissingCoordinate):
        eval_at(p("x + y"), {"x": 1})
    # Extra coordinates are tolerated so one point serves several charts.
    assert eval_at(parse_poly("x^2", X), {"x": 2, "zz": 9}) == 4


# --- parse/eval oracle ------------------------------------------------------
#
# Random expression ASTs are rendered to strings and pushed through the
# parser, then compared against a direct Fraction evaluation of the same AST.
# The AST walker shares no code with Poly arithmetic.

def _random_ast(rng, depth):
    if depth == 0 or rng.random() < 0.3:
        if rng.random() < 0.5:
            return ("num", Fraction(rng.randint(-9, 9), rng.randint(1, 5)))
        return ("var", rng.choice(["x", "y"]))
    op = rng.choice(["+", "-", "*", "^"])
    if op == "^":
        return ("^", _random_ast(rng, depth - 1), rng.randint(0, 3))
    return (op, _random_ast(rng, depth - 1), _random_ast(rng, depth - 1))


def _render(ast):
    kind = ast[0]
    if kind == "num":
        return str(ast[1])
    if kind == "var":
        return ast[1]
    if kind == "^":
        return f"({_render(ast[1])})^{ast[2]}"
    return f"({_render(ast[1])}) {kind} ({_render(ast[2])})"


def _direct_eval(ast, pt):
    kind = ast[0]
    if kind == "num":
        return ast[1]
    if kind == "var":
        return pt[ast[1]]
    if kind == "^":
        return _direct_eval(ast[1], pt) ** ast[2]
    a, b = _direct_eval(ast[1], pt), _direct_eval(ast[2], pt)
    return a + b if kind == "+" else a - b if kind == "-" else a * b


def test_parse_then_eval_matches_direct_evaluation():
    rng = random.Random(31337)
    for _ in range(60):
        ast = _random_ast(rng, depth=4)
        pt = {"x": Fraction(rng.randint(-4, 4), rng.randint(1, 3)),
              "y": Fraction(rng.randint(-4, 4), rng.randint(1, 3))}
        assert eval_at(p(_render(ast)), pt) == _direct_eval(ast, pt)


# --- canonical printing -----------------------------------------------------

def test_print_forms():
    assert poly_to_string(XY.zero()) == "0"
    assert poly_to_string(p("x + y")) == "x + y"
    assert poly_to_string(p("0 - x")) == "-1*x"
    assert poly_to_string(p("3/2*x^2*y - 1")) == "3/2*x^2*y - 1"
    assert poly_to_string(parse_poly("7/2", POINT)) == "7/2"


@settings(max_examples=200, deadline=None)
@given(st.randoms(use_true_random=False))
def test_print_parse_round_trip(rnd):
    q = _random_poly(rnd, XY, degree=4, max_terms=6)
    assert parse_poly(poly_to_string(q), XY) == q


def test_print_is_deterministic_and_canonical():
    a = p("x*y + x^2")
    b = p("x^2 + x*y")
    assert poly_to_string(a) == poly_to_string(b)


# --- transport --------------------------------------------------------------

def test_transport_embeds_and_permutes():
    big = Chart(["y", "x", "z"])
    q = p("x^2 + 2*y")
    moved = q.transport(big)
    assert moved == parse_poly("x^2 + 2*y", big)
    renamed = q.transport(Chart(["u", "v"]), rename={"x": "u", "y": "v"})
    assert renamed == parse_poly("u^2 + 2*v", Chart(["u", "v"]))
