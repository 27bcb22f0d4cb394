"""Lifting maps from an algebroid to its tangent and cotangent companions.

Three target geometries appear.  The *tangent lift* doubles the fibers over
the velocity chart; a section lifts either vertically (``vertical_lift_V``,
coefficients pulled back, every factor landing in the barred block) or
completely (``complete_lift_T``, a velocity-derivative term plus one term per
factor moved into the dotted block).  The index bookkeeping rests on the
crossed duality of the doubled bundle: the form dual to a barred generator
sits in the *dotted* half of the dual basis and vice versa, so vector factors
and form factors relabel through opposite blocks.

The *dual-chart* picture replaces the bundle by its dual, whose chart adjoins
one fiber-linear coordinate per fiber.  Sections become functions there via
``iota`` (fiberwise-linear, or fiberwise-polynomial on symmetric powers),
forms become multivectors via ``vertical_pi``, and a degree-1 section has the
complete lift ``cot_complete_G_vec`` — the negated bracket of the fiberwise
-linear bivector with the section's linear function.  ``J_map`` and ``G_map``
extend these to vector-valued forms; ``G_map`` computes its answer twice
(bracket route and product-rule route) and refuses to return if they differ.

``vertical_tau`` lifts vector-side tensor powers to the total space of the
bundle itself, one ``y``-coordinate per fiber.

Finally, when the algebroid is canonical its tangent lift is isomorphic to
the canonical algebroid of the velocity chart, by the block swap
``canonical_transport``: barred generators cross to velocity directions and
dotted generators to base directions ("kappa" for vector-side kinds, "alpha"
for form-side kinds, each its own inverse).  The classical vertical and
complete lifts of tensors on a bare chart are *defined* here as the
transports of V and T, which keeps a single source of sign conventions.
"""

from __future__ import annotations

from .errors import ChartMismatch, KindMismatch, WrongProvenance
from .ring import Chart, Poly
from .tensor import GradedTensor, Kind, equals, remap, wedge
from .algebroid import (
    Algebroid,
    canonical_algebroid,
    dual_chart,
    linear_poisson,
    tangent_lift,
)
from .calculus import differential, schouten
from .poisson import h_p


class LiftedSection:
    """A tensor over a lift target, tagged with the lift that produced it.

    The lifted charts all look alike (doubled fibers over a velocity chart),
    so the tag — ``"V"`` or ``"T"`` plus the algebroid the section came from
    — is what stops a complete lift being fed where a vertical lift is
    expected.  The underlying :class:`GradedTensor` is ``.tensor``.
    """

    __slots__ = ("tensor", "lift", "origin")

    def __init__(self, tensor: GradedTensor, lift: str, origin: Algebroid):
        self.tensor = tensor
        self.lift = lift
        self.origin = origin

    def __eq__(self, other) -> bool:
        if not isinstance(other, LiftedSection):
            return NotImplemented
        return (self.lift == other.lift and self.origin == other.origin
                and self.tensor == other.tensor)

    def __repr__(self) -> str:
        return f"<LiftedSection {self.lift} of {self.tensor.describe()}>"


def _unwrap(s):
    return s.tensor if isinstance(s, LiftedSection) else s


def _require_over(algebroid: Algebroid, s: GradedTensor) -> None:
    if s.owner != algebroid:
        raise ChartMismatch(
            f"section belongs to {s.owner!r}, not to {algebroid!r}")


# -- the fiberwise-linear function of a section ---------------------------------

def iota(algebroid: Algebroid, x) -> Poly:
    """The function on the dual chart that a section defines by pairing.

    A degree-1 section f^i e_i becomes the fiberwise-linear polynomial
    f^i ξ_i; a symmetric power becomes the product of its factors' functions
    (so degree k gives a fiberwise degree-k polynomial).
    """
    x = _unwrap(x)
    _require_over(algebroid, x)
    chart = dual_chart(algebroid)
    xi = [chart.coordinate(name) for name in algebroid.dual_names]
    acc = chart.zero()
    if x.kind is Kind.MV and x.degree == 1:
        for (i,), coeff in x.terms.items():
            acc = acc + coeff.transport(chart) * xi[i]
        return acc
    if x.kind is Kind.SYM:
        for key, coeff in x.terms.items():
            prod = coeff.transport(chart)
            for i in key:
                prod = prod * xi[i]
            acc = acc + prod
        return acc
    raise KindMismatch(
        f"iota expects a degree-1 multivector or a symmetric power, "
        f"got {x.describe()}")


# -- lifts to the tangent-lift algebroid -----------------------------------------

def _lifted_key(kind: Kind, key, rank: int, dotted):
    """Relabel a basis key into the doubled fiber range.

    ``dotted`` names the slot whose factor crosses into the other block
    (None for the all-vertical key).  Vector factors start barred (index
    unchanged) and dot to ``rank + i``; form factors pair the opposite way
    round, starting at ``rank + i`` and dotting back to ``i``.  A mixed key
    counts its form slots first and its vector slot last.
    """
    if kind is Kind.MIXED:
        form_key, fiber = key
        new_form = tuple(
            i if r == dotted else rank + i for r, i in enumerate(form_key))
        new_fiber = rank + fiber if dotted == len(form_key) else fiber
        return (new_form, new_fiber)
    if kind is Kind.FORM:
        return tuple(i if r == dotted else rank + i for r, i in enumerate(key))
    return tuple(rank + i if r == dotted else i for r, i in enumerate(key))


def _velocity_derivative(coeff: Poly, source: Chart, target: Chart) -> Poly:
    """Sum of (∂_a f)·a_dot over the source coordinates, on the target chart."""
    acc = target.zero()
    for name in source.coords:
        d = coeff.partial(name)
        if not d.is_zero():
            acc = acc + d.transport(target) * target.coordinate(f"{name}_dot")
    return acc


def vertical_lift_V(algebroid: Algebroid, s) -> LiftedSection:
    """The vertical lift: coefficients pulled back, every factor barred."""
    s = _unwrap(s)
    _require_over(algebroid, s)
    target = tangent_lift(algebroid)
    m = algebroid.rank
    terms = [(_lifted_key(s.kind, key, m, None), coeff.transport(target.base))
             for key, coeff in s.terms.items()]
    return LiftedSection(GradedTensor(target, s.kind, s.degree, terms),
                         "V", algebroid)


def complete_lift_T(algebroid: Algebroid, s) -> LiftedSection:
    """The complete lift: the velocity derivative of each coefficient on the
    all-barred key, plus the pulled-back coefficient on each single-dotted
    key.  Together with the vertical lift this satisfies the product rule
    T(s⊗t) = T(s)⊗V(t) + V(s)⊗T(t) factor by factor."""
    s = _unwrap(s)
    _require_over(algebroid, s)
    target = tangent_lift(algebroid)
    m = algebroid.rank
    terms = []
    for key, coeff in s.terms.items():
        drift = _velocity_derivative(coeff, algebroid.base, target.base)
        if not drift.is_zero():
            terms.append((_lifted_key(s.kind, key, m, None), drift))
        pulled = coeff.transport(target.base)
        slots = s.degree + (1 if s.kind is Kind.MIXED else 0)
        for r in range(slots):
            terms.append((_lifted_key(s.kind, key, m, r), pulled))
    return LiftedSection(GradedTensor(target, s.kind, s.degree, terms),
                         "T", algebroid)


# -- lifts to the dual chart ------------------------------------------------------

def vertical_pi(algebroid: Algebroid, mu) -> GradedTensor:
    """The vertical lift of a form to a multivector on the dual chart:
    e*_i ↦ the fiber direction of ξ_i, coefficients pulled back."""
    mu = _unwrap(mu)
    if mu.kind is not Kind.FORM:
        raise KindMismatch(f"vertical_pi expects a form, got {mu.describe()}")
    _require_over(algebroid, mu)
    target = canonical_algebroid(dual_chart(algebroid))
    n = algebroid.base.dim
    terms = [(tuple(n + i for i in key), coeff.transport(target.base))
             for key, coeff in mu.terms.items()]
    return GradedTensor(target, Kind.MV, mu.degree, terms)


def vertical_tau(algebroid: Algebroid, s) -> GradedTensor:
    """The vertical lift to the bundle's own total space: e_j ↦ the fiber
    direction of y_j on the chart that adjoins one y-coordinate per fiber.
    Factor-wise, so it applies to plain and symmetric multivectors."""
    s = _unwrap(s)
    if s.kind not in (Kind.MV, Kind.SYM):
        raise KindMismatch(
            f"vertical_tau lifts vector-side tensor powers, got {s.describe()}")
    _require_over(algebroid, s)
    chart = Chart(algebroid.base.coords
                  + tuple(f"y_{f}" for f in algebroid.fiber_names))
    target = canonical_algebroid(chart)
    n = algebroid.base.dim
    terms = [(tuple(n + i for i in key), coeff.transport(chart))
             for key, coeff in s.terms.items()]
    return GradedTensor(target, s.kind, s.degree, terms)


def _g_vec(ps, algebroid: Algebroid, x: GradedTensor) -> GradedTensor:
    return -schouten(ps.owner, ps.bivector, ps.owner.fn(iota(algebroid, x)))


def cot_complete_G_vec(algebroid: Algebroid, x) -> GradedTensor:
    """The complete lift of a degree-1 section to the dual chart: minus the
    bracket of the fiberwise-linear bivector with the section's function
    (the hamiltonian vector field of ``iota(x)``)."""
    x = _unwrap(x)
    if x.kind is not Kind.MV or x.degree != 1:
        raise KindMismatch(
            f"cot_complete_G_vec expects a degree-1 multivector, "
            f"got {x.describe()}")
    _require_over(algebroid, x)
    return _g_vec(linear_poisson(algebroid), algebroid, x)


def J_map(algebroid: Algebroid, k) -> GradedTensor:
    """The vertical-type lift of a vector-valued form to the dual chart:
    μ⊗X ↦ −iota(X)·vertical_pi(μ), extended by linearity.  The result on a
    basis term e*_{i_1}∧…∧e*_{i_k}⊗e_j is −ξ_j times the corresponding
    fiber-direction multivector, which makes the map injective."""
    k = _unwrap(k)
    if k.kind is not Kind.MIXED:
        raise KindMismatch(
            f"J_map expects a vector-valued form, got {k.describe()}")
    _require_over(algebroid, k)
    chart = dual_chart(algebroid)
    target = canonical_algebroid(chart)
    n = algebroid.base.dim
    terms = []
    for (form_key, j), coeff in k.terms.items():
        weight = coeff.transport(chart) * chart.coordinate(algebroid.dual_names[j])
        terms.append((tuple(n + i for i in form_key), -weight))
    return GradedTensor(target, Kind.MV, k.degree, terms)


def G_map(algebroid: Algebroid, k) -> GradedTensor:
    """The complete-type (dual) lift of a vector-valued form: the bracket of
    the fiberwise-linear bivector with ``J_map(k)``.

    The same value has a product-rule expansion on simple tensors,
    G(X)∧V_π(μ) − iota(X)·V_π(dμ); both routes are computed and must agree,
    which pins the overall sign against bookkeeping drift.
    """
    k = _unwrap(k)
    if k.kind is not Kind.MIXED:
        raise KindMismatch(
            f"G_map expects a vector-valued form, got {k.describe()}")
    _require_over(algebroid, k)
    ps = linear_poisson(algebroid)
    primary = schouten(ps.owner, ps.bivector, J_map(algebroid, k))
    expanded = GradedTensor.zero(ps.owner, Kind.MV, k.degree + 1)
    for (form_key, j), coeff in k.terms.items():
        mu = GradedTensor(algebroid, Kind.FORM, k.degree, {form_key: coeff})
        head = wedge(_g_vec(ps, algebroid, algebroid.e(j)),
                     vertical_pi(algebroid, mu))
        tail = vertical_pi(algebroid, differential(algebroid, mu)) \
            * iota(algebroid, algebroid.e(j))
        expanded = expanded + head - tail
    if not equals(primary, expanded):
        raise AssertionError(
            "dual complete lift: bracket route and product-rule route disagree")
    return primary


# -- the canonical-chart transports ----------------------------------------------

def _velocity_half(chart: Chart):
    """The chart whose velocity extension this one is, or None."""
    if chart.dim % 2:
        return None
    half = chart.dim // 2
    names = chart.coords
    if all(names[half + a] == f"{names[a]}_dot" for a in range(half)):
        return Chart(names[:half])
    return None


def canonical_transport(direction: str, t) -> GradedTensor:
    """Swap the two fiber blocks between the tangent lift of a canonical
    algebroid and the canonical algebroid of its velocity chart.

    ``"kappa"`` moves vector-side kinds (multivectors and symmetric powers):
    barred generators cross to velocity directions, dotted generators to base
    directions.  ``"alpha"`` is the same block swap on form-side kinds (forms
    and vector-valued forms).  Each direction detects which side its input
    lives on, so applying it twice returns the input.
    """
    tensor = _unwrap(t)
    if direction == "kappa":
        allowed = (Kind.MV, Kind.SYM)
    elif direction == "alpha":
        allowed = (Kind.FORM, Kind.MIXED)
    else:
        raise WrongProvenance(f"unknown transport direction {direction!r}")
    if tensor.kind not in allowed:
        raise WrongProvenance(
            f"{direction} transports {' / '.join(k.value for k in allowed)} "
            f"sections, got {tensor.describe()}")
    owner = tensor.owner
    if (owner.provenance == "tangent-lift" and owner.parent is not None
            and owner.parent.is_canonical):
        target = canonical_algebroid(owner.base)
    elif owner.is_canonical and _velocity_half(owner.base) is not None:
        target = tangent_lift(canonical_algebroid(_velocity_half(owner.base)))
    else:
        raise WrongProvenance(
            f"no canonical transport from {owner!r}: expected the tangent "
            f"lift of a canonical algebroid or the canonical algebroid of a "
            f"velocity chart")
    half = owner.rank // 2
    swap = {i: i + half if i < half else i - half for i in range(owner.rank)}
    return remap(tensor, target, swap)


def classical_vertical_lift(t) -> GradedTensor:
    """The textbook vertical lift of a tensor on a bare chart, defined as the
    block-swap transport of the vertical lift over the canonical algebroid."""
    return _classical(t, vertical_lift_V)


def classical_complete_lift(t) -> GradedTensor:
    """The textbook complete lift of a tensor on a bare chart, defined as the
    block-swap transport of the complete lift over the canonical algebroid."""
    return _classical(t, complete_lift_T)


def _classical(t, lift) -> GradedTensor:
    tensor = _unwrap(t)
    if not tensor.owner.is_canonical:
        raise WrongProvenance(
            f"classical lifts act on sections over a canonical algebroid, "
            f"got {tensor.owner!r}")
    direction = "kappa" if tensor.kind in (Kind.MV, Kind.SYM) else "alpha"
    return canonical_transport(direction, lift(tensor.owner, tensor))


# -- canonical-case maps into the cotangent side ----------------------------------

def Jstar(k) -> GradedTensor:
    """μ⊗X ↦ iota(X)·(pullback of μ): a vector-valued form over a canonical
    algebroid becomes a plain form on the dual chart, the form part pulled
    back and the vector part turned into its fiberwise-linear function."""
    k = _unwrap(k)
    if k.kind is not Kind.MIXED:
        raise KindMismatch(
            f"Jstar expects a vector-valued form, got {k.describe()}")
    algebroid = k.owner
    if not algebroid.is_canonical:
        raise WrongProvenance(
            f"Jstar acts over a canonical algebroid, got {algebroid!r}")
    chart = dual_chart(algebroid)
    target = canonical_algebroid(chart)
    terms = []
    for (form_key, j), coeff in k.terms.items():
        weight = coeff.transport(chart) * chart.coordinate(algebroid.dual_names[j])
        terms.append((form_key, weight))
    return GradedTensor(target, Kind.FORM, k.degree, terms)


def H_map(k) -> GradedTensor:
    """The hamiltonian-type lift of a vector-valued form over a canonical
    algebroid: ``Jstar`` followed by the hamiltonian operator of the dual
    chart's canonical bivector.  Degree is preserved and the map is
    injective, embedding the source bracket geometry into the dual chart's."""
    k = _unwrap(k)
    if k.kind is not Kind.MIXED:
        raise KindMismatch(
            f"H_map expects a vector-valued form, got {k.describe()}")
    if not k.owner.is_canonical:
        raise WrongProvenance(
            f"H_map acts over a canonical algebroid, got {k.owner!r}")
    return h_p(linear_poisson(k.owner), Jstar(k))
