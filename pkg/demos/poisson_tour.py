"""Poisson calculus on the canonical plane (x, p) and the dual of so(3).

Run from the repository root after an editable install:

    python3 demos/poisson_tour.py
"""

from fractions import Fraction

from algebroids.calculus import differential, schouten
from algebroids.fixtures import poisson_plane, poisson_so3
from algebroids.poisson import (
    cotangent_algebroid,
    extended_bracket,
    koszul_schouten,
    poisson_bracket,
    tangent_poisson,
)
from algebroids.tensor import GradedTensor, Kind

ps = poisson_plane()
chart = ps.chart
x, p = (chart.coordinate(name) for name in chart.coords)
print("canonical structure on (x, p):", ps.bivector)

# the function bracket: with this structure's orientation, {H, .} drives a
# free particle H = p^2/2 forward: x' = {H, x} = p, p' = {H, p} = 0
H = p * p * chart.const(Fraction(1, 2))
print("{x, p} =", poisson_bracket(ps, x, p))
print("x' = {H, x} =", poisson_bracket(ps, H, x), "   p' = {H, p} =",
      poisson_bracket(ps, H, p))

# the cotangent algebroid turns 1-forms into a Lie algebroid over the chart:
# the anchor is the bundle map of the bivector
ct = cotangent_algebroid(ps)
print("\ncotangent algebroid fibers:", ct.fiber_names)
print("anchor rows:", [[str(c) for c in row] for row in ct.anchor])

# Koszul bracket of exact forms reproduces the function bracket differential
O = ps.owner
mu = differential(O, GradedTensor(O, Kind.FORM, 0, {(): x * x}))
nu = differential(O, GradedTensor(O, Kind.FORM, 0, {(): p}))
print("[d(x^2), d(p)] =", koszul_schouten(ps, mu, nu),
      "  (d of {x^2, p} =", str(poisson_bracket(ps, x * x, p)) + ")")

# extended bracket on degree-0 arguments is again the function bracket
f = GradedTensor(O, Kind.FORM, 0, {(): x * p})
g = GradedTensor(O, Kind.FORM, 0, {(): p})
print("{xp, p}_extended =", extended_bracket(ps, f, g))

# a linear structure: the dual of so(3) with its degenerate-at-zero bivector
lp = poisson_so3()
print("\nso(3)* bivector:", lp.bivector)
closure = schouten(lp.owner, lp.bivector, lp.bivector)
print("[P, P] =", closure)
assert closure.is_zero()

# lifting to the tangent bundle doubles the chart and stays Poisson
tp = tangent_poisson(lp)
print("tangent lift lives on", tp.chart.coords)
assert schouten(tp.owner, tp.bivector, tp.bivector).is_zero()
print("and its self-bracket is again exactly zero")
