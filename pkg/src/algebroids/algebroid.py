"""Anchored bundles with bracket structure, and their tangent/cotangent lifts.

An :class:`Algebroid` is a rank-m bundle over a polynomial chart, described
by an anchor matrix (one row of chart-polynomials per fiber generator) and an
antisymmetric table of structure functions ``c[i][j][k]`` stored sparsely for
``i < j``.  Together these determine a bracket on sections:

    [e_i, e_j] = sum_k c_ij^k e_k
    [X, f·Y]   = f·[X, Y] + (anchor X)(f)·Y

:func:`build_algebroid` checks the two compatibility conditions that make
such data an honest bracket geometry — the Jacobi identity on all basis
triples and the anchor being a bracket morphism into vector fields — and the
errors carry an explicit witness (which triple or pair failed, and the
residual) so a failing model is diagnosable.

A chart with no coordinates is allowed as a base: the anchor is then forced
to vanish and the structure functions are rational constants (the classical
finite-dimensional Lie-algebra case).

The lifts at the bottom of the module produce new algebroids from old:
``tangent_lift`` doubles the fibers and adjoins velocity coordinates,
``cotangent_lift`` turns the dual bundle's chart into a base whose fibers
are the coordinate differentials, and ``linear_poisson`` packages the same
structure data as a fiberwise-linear bivector on the dual chart.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import combinations
from typing import Dict, Mapping, Optional, Sequence, Tuple

from .errors import (
    AnchorNotMorphism,
    DimensionMismatch,
    EmptyChart,
    JacobiViolation,
    KindMismatch,
)
from .ring import Chart, Poly, parse_poly
from .tensor import GradedTensor, Kind

_StructureTable = Dict[Tuple[int, int], Dict[int, Poly]]


class Algebroid:
    """Structure data for an anchored bracket bundle.

    Instances compare structurally: two algebroids are equal when they have
    the same base chart, fiber names, anchor matrix, structure table and dual
    fiber names, regardless of how they were constructed.
    """

    __slots__ = ("base", "rank", "fiber_names", "anchor", "structure",
                 "dual_names", "provenance", "parent")

    def __init__(self, base: Chart, fiber_names: Sequence[str],
                 anchor: Sequence[Sequence[Poly]], structure: _StructureTable,
                 dual_names: Sequence[str], provenance: str = "built",
                 parent: Optional["Algebroid"] = None):
        self.base = base
        self.rank = len(fiber_names)
        self.fiber_names = tuple(fiber_names)
        self.anchor = tuple(tuple(row) for row in anchor)
        self.structure = structure
        self.dual_names = tuple(dual_names)
        self.provenance = provenance
        self.parent = parent

    def __eq__(self, other) -> bool:
        if not isinstance(other, Algebroid):
            return NotImplemented
        return (self.base == other.base
                and self.fiber_names == other.fiber_names
                and self.anchor == other.anchor
                and self.structure == other.structure
                and self.dual_names == other.dual_names)

    def __repr__(self) -> str:
        return (f"<Algebroid rank {self.rank} over {self.base.coords!r} "
                f"({self.provenance})>")

    # -- structure access ----------------------------------------------------

    def c(self, i: int, j: int, k: int) -> Poly:
        """Structure function c_ij^k, antisymmetric in (i, j); 0-based."""
        if i == j:
            return self.base.zero()
        flip = i > j
        table = self.structure.get((j, i) if flip else (i, j), {})
        coeff = table.get(k, self.base.zero())
        return -coeff if flip else coeff

    def bracket_basis(self, i: int, j: int) -> GradedTensor:
        """The bracket [e_i, e_j] of two basis sections."""
        if i == j:
            return GradedTensor.zero(self, Kind.MV, 1)
        flip = i > j
        table = self.structure.get((j, i) if flip else (i, j), {})
        terms = {(k,): (-c if flip else c) for k, c in table.items()}
        return GradedTensor(self, Kind.MV, 1, terms)

    @property
    def is_canonical(self) -> bool:
        """True for the tangent-style algebroid of a chart: fibers are the
        coordinates, the anchor is the identity, all brackets vanish."""
        if self.rank != self.base.dim or self.fiber_names != self.base.coords:
            return False
        if self.structure:
            return False
        one, zero = self.base.one(), self.base.zero()
        for i, row in enumerate(self.anchor):
            for a, entry in enumerate(row):
                if entry != (one if a == i else zero):
                    return False
        return True

    # -- section builders ----------------------------------------------------

    def e(self, i: int) -> GradedTensor:
        """Basis section e_i (0-based)."""
        return GradedTensor.basis(self, Kind.MV, (i,))

    def estar(self, i: int) -> GradedTensor:
        """Dual basis form e*_i (0-based)."""
        return GradedTensor.basis(self, Kind.FORM, (i,))

    def fn(self, value) -> GradedTensor:
        """A function on the base, as a degree-0 multivector."""
        return GradedTensor.function(self, value)

    def section(self, coefficients: Mapping[str, object]) -> GradedTensor:
        """A section from a {fiber name: coefficient} mapping."""
        index = {name: i for i, name in enumerate(self.fiber_names)}
        terms = {}
        for name, coeff in coefficients.items():
            if name not in index:
                raise DimensionMismatch(f"unknown fiber name {name!r}")
            terms[(index[name],)] = coeff
        return GradedTensor(self, Kind.MV, 1, terms)


# -- chart helpers -------------------------------------------------------------

def dotted_chart(chart: Chart) -> Chart:
    """Adjoin a velocity coordinate ``c_dot`` for every coordinate ``c``."""
    return Chart(chart.coords + tuple(f"{c}_dot" for c in chart.coords))


def dual_chart(algebroid: Algebroid) -> Chart:
    """The chart of the dual bundle: base coordinates then fiber-linear ones."""
    return Chart(algebroid.base.coords + algebroid.dual_names)


def _vector_fields(chart: Chart) -> Algebroid:
    """The canonical algebroid of a chart, allowing the empty chart (rank 0).

    Only used internally as the landing space of :func:`anchor_apply`; the
    public constructor :func:`canonical_algebroid` rejects empty charts.
    """
    n = chart.dim
    one, zero = chart.one(), chart.zero()
    anchor = tuple(tuple(one if a == i else zero for a in range(n)) for i in range(n))
    return Algebroid(chart, chart.coords, anchor, {},
                     tuple(f"p_{c}" for c in chart.coords), provenance="canonical")


def canonical_algebroid(chart: Chart) -> Algebroid:
    """The tangent algebroid of a chart: sections are vector fields, the
    anchor is the identity, and the bracket is the commutator."""
    if chart.dim == 0:
        raise EmptyChart("the canonical algebroid needs at least one coordinate")
    return _vector_fields(chart)


# -- construction with validation ----------------------------------------------

def _coerce_poly(value, chart: Chart) -> Poly:
    if isinstance(value, Poly):
        if value.chart != chart:
            return value.transport(chart)
        return value
    if isinstance(value, str):
        return parse_poly(value, chart)
    return chart.const(value)


def build_algebroid(base: Chart, fiber_names: Sequence[str],
                    anchor: Sequence[Sequence[object]],
                    structure: Mapping[Tuple[int, int], Mapping[int, object]] | None = None,
                    *, dual_names: Sequence[str] | None = None,
                    provenance: str = "built",
                    parent: Optional[Algebroid] = None,
                    check: bool = True) -> Algebroid:
    """Assemble and (by default) validate an algebroid.

    ``anchor`` is a rank×dim matrix (rows indexed by fiber) of polynomials
    over ``base``; entries may be strings or rationals.  ``structure`` maps
    ``(i, j)`` with ``i < j`` (0-based) to ``{k: c_ij^k}``.  Validation
    checks the Jacobi identity on every basis triple and that the anchor is
    a bracket morphism on every basis pair; failures raise
    :class:`JacobiViolation` / :class:`AnchorNotMorphism` with a witness.
    """
    fiber_names = tuple(fiber_names)
    rank = len(fiber_names)
    if rank < 1:
        raise DimensionMismatch("an algebroid needs at least one fiber generator")
    if len(set(fiber_names)) != rank:
        raise DimensionMismatch("fiber names must be distinct")
    if any(not name for name in fiber_names):
        raise DimensionMismatch("fiber names must be nonempty")

    if len(anchor) != rank:
        raise DimensionMismatch(f"anchor has {len(anchor)} rows, expected {rank}")
    rows = []
    for row in anchor:
        if len(row) != base.dim:
            raise DimensionMismatch(
                f"anchor row has {len(row)} entries, expected {base.dim}")
        rows.append(tuple(_coerce_poly(v, base) for v in row))

    table: _StructureTable = {}
    for (i, j), entries in (structure or {}).items():
        if not 0 <= i < j < rank:
            raise DimensionMismatch(
                f"structure key ({i}, {j}) must satisfy 0 <= i < j < {rank}")
        cleaned = {}
        for k, value in entries.items():
            if not 0 <= k < rank:
                raise DimensionMismatch(f"structure target {k} out of range")
            coeff = _coerce_poly(value, base)
            if not coeff.is_zero():
                cleaned[k] = coeff
        if cleaned:
            table[(i, j)] = cleaned

    if dual_names is None:
        probe = Algebroid(base, fiber_names, rows, table, [""] * rank)
        if probe.is_canonical:
            dual_names = tuple(f"p_{name}" for name in fiber_names)
        else:
            dual_names = tuple(f"xi_{name}" for name in fiber_names)
    else:
        dual_names = tuple(dual_names)
        if len(dual_names) != rank or len(set(dual_names)) != rank:
            raise DimensionMismatch("dual names must be distinct, one per fiber")

    result = Algebroid(base, fiber_names, rows, table, dual_names,
                       provenance=provenance, parent=parent)
    if check:
        validate(result)
    return result


def validate(algebroid: Algebroid) -> None:
    """Check the anchor-morphism and Jacobi conditions; raise on failure."""
    base = algebroid.base
    m = algebroid.rank
    # anchor is a bracket morphism: [anchor e_i, anchor e_j] = anchor [e_i, e_j]
    for i, j in combinations(range(m), 2):
        table = algebroid.structure.get((i, j), {})
        for b in range(base.dim):
            lhs = base.zero()
            for a, name in enumerate(base.coords):
                lhs = lhs + algebroid.anchor[i][a] * algebroid.anchor[j][b].partial(name)
                lhs = lhs - algebroid.anchor[j][a] * algebroid.anchor[i][b].partial(name)
            rhs = base.zero()
            for k, coeff in table.items():
                rhs = rhs + coeff * algebroid.anchor[k][b]
            residual = lhs - rhs
            if not residual.is_zero():
                names = algebroid.fiber_names
                raise AnchorNotMorphism(
                    f"anchor fails to intertwine brackets on ({names[i]}, {names[j]})",
                    witness={"pair": [names[i], names[j]],
                             "coordinate": base.coords[b],
                             "residual": str(residual)})
    # Jacobi identity on basis triples
    for i, j, k in combinations(range(m), 3):
        jac = section_bracket(algebroid, algebroid.bracket_basis(i, j), algebroid.e(k))
        jac = jac + section_bracket(algebroid, algebroid.bracket_basis(j, k), algebroid.e(i))
        jac = jac + section_bracket(algebroid, algebroid.bracket_basis(k, i), algebroid.e(j))
        if not jac.is_zero():
            names = algebroid.fiber_names
            raise JacobiViolation(
                f"Jacobi identity fails on ({names[i]}, {names[j]}, {names[k]})",
                witness={"triple": [names[i], names[j], names[k]],
                         "residual": str(jac)})


# -- the bracket on sections ----------------------------------------------------

def anchor_derivative(algebroid: Algebroid, i: int, f: Poly) -> Poly:
    """The anchor of e_i applied to a function: sum_a anchor[i][a] d_a f."""
    acc = algebroid.base.zero()
    for a, name in enumerate(algebroid.base.coords):
        d = f.partial(name)
        if not d.is_zero():
            acc = acc + algebroid.anchor[i][a] * d
    return acc


def section_bracket(algebroid: Algebroid, x: GradedTensor, y: GradedTensor) -> GradedTensor:
    """The bracket of two sections (degree-1 multivectors over the algebroid)."""
    for t in (x, y):
        if t.owner != algebroid or t.kind is not Kind.MV or t.degree != 1:
            raise KindMismatch(f"section_bracket needs sections, got {t.describe()}")
    acc: Dict[Tuple[int, ...], Poly] = {}

    def _add(key, coeff):
        prev = acc.get(key)
        prev = coeff if prev is None else prev + coeff
        if prev.is_zero():
            acc.pop(key, None)
        else:
            acc[key] = prev

    for (i,), f in x.terms.items():
        for (j,), g in y.terms.items():
            if i != j:
                fg = f * g
                for k in range(algebroid.rank):
                    coeff = algebroid.c(i, j, k)
                    if not coeff.is_zero():
                        _add((k,), coeff * fg)
            # derivative terms: f·anchor(e_i)(g)·e_j − g·anchor(e_j)(f)·e_i
            d = anchor_derivative(algebroid, i, g)
            if not d.is_zero():
                _add((j,), f * d)
            d = anchor_derivative(algebroid, j, f)
            if not d.is_zero():
                _add((i,), -(g * d))
    out = GradedTensor.zero(algebroid, Kind.MV, 1)
    out.terms = acc
    return out


def anchor_apply(algebroid: Algebroid, x: GradedTensor) -> GradedTensor:
    """Push a section through the anchor to a vector field on the base.

    The result lives over the canonical algebroid of the base chart (the
    rank-0 version of it when the base chart is empty).
    """
    if x.owner != algebroid or x.kind is not Kind.MV or x.degree != 1:
        raise KindMismatch(f"anchor_apply needs a section, got {x.describe()}")
    target = _vector_fields(algebroid.base)
    terms: Dict[Tuple[int, ...], Poly] = {}
    for (i,), f in x.terms.items():
        for a in range(algebroid.base.dim):
            entry = algebroid.anchor[i][a]
            if entry.is_zero():
                continue
            prev = terms.get((a,))
            coeff = f * entry
            prev = coeff if prev is None else prev + coeff
            if prev.is_zero():
                terms.pop((a,), None)
            else:
                terms[(a,)] = prev
    out = GradedTensor.zero(target, Kind.MV, 1)
    out.terms = terms
    return out


# -- lifts -----------------------------------------------------------------------

def tangent_lift(algebroid: Algebroid) -> Algebroid:
    """The tangent algebroid: rank doubles (bar fibers then dot fibers) over
    the chart with velocities adjoined.

    Brackets:  [e_i bar, e_j bar] = 0,
               [e_i bar, e_j dot] = c_ij^k e_k bar,
               [e_i dot, e_j dot] = c_ij^k e_k dot + (d_a c_ij^k) x_a dot e_k bar;
    the anchor sends bar fibers to velocity directions and dot fibers to the
    original directions plus the derivative correction.
    """
    A = algebroid
    n, m = A.base.dim, A.rank
    base = dotted_chart(A.base)
    lift = lambda p: p.transport(base)  # noqa: E731 - tiny local embedding
    fibers = tuple(f"{f}_bar" for f in A.fiber_names) + \
        tuple(f"{f}_dot" for f in A.fiber_names)
    duals = A.dual_names + tuple(f"{d}_dot" for d in A.dual_names)
    dots = [base.coordinate(f"{c}_dot") for c in A.base.coords]
    zero = base.zero()

    anchor = []
    for i in range(m):  # bar fibers: velocity directions only
        anchor.append(tuple([zero] * n + [lift(A.anchor[i][a]) for a in range(n)]))
    for i in range(m):  # dot fibers: base directions plus derivative correction
        correction = []
        for a in range(n):
            acc = zero
            for b, name in enumerate(A.base.coords):
                d = A.anchor[i][a].partial(name)
                if not d.is_zero():
                    acc = acc + lift(d) * dots[b]
            correction.append(acc)
        anchor.append(tuple([lift(A.anchor[i][a]) for a in range(n)] + correction))

    structure: _StructureTable = {}
    for (i, j), entries in A.structure.items():
        bar_dot: Dict[int, Poly] = {}      # [e_i bar, e_j dot]
        dot_bar: Dict[int, Poly] = {}      # [e_j bar, e_i dot] = -c_ij^k e_k bar
        dot_dot: Dict[int, Poly] = {}      # [e_i dot, e_j dot]
        for k, coeff in entries.items():
            up = lift(coeff)
            bar_dot[k] = up
            dot_bar[k] = -up
            dot_dot[m + k] = up
            drift = zero
            for b, name in enumerate(A.base.coords):
                d = coeff.partial(name)
                if not d.is_zero():
                    drift = drift + lift(d) * dots[b]
            if not drift.is_zero():
                dot_dot[k] = dot_dot.get(k, zero) + drift
        structure[(i, m + j)] = bar_dot
        structure[(j, m + i)] = dot_bar
        structure[(m + i, m + j)] = {k: v for k, v in dot_dot.items() if not v.is_zero()}
        if not structure[(m + i, m + j)]:
            del structure[(m + i, m + j)]

    return build_algebroid(base, fibers, anchor, structure, dual_names=duals,
                           provenance="tangent-lift", parent=A)


def cotangent_lift(algebroid: Algebroid) -> Algebroid:
    """The cotangent algebroid over the dual bundle's chart.

    Fibers are the differentials of the dual chart's coordinates (base
    coordinates first, then the fiber-linear ones).  Brackets:

        [d xi_i, d xi_j] = c_ij^k d xi_k + (d_b c_ij^k) xi_k dx^b,
        [d xi_i, d x^a]  = (d_b delta_i^a) dx^b,
        [d x^a, d x^b]   = 0;

    the anchor sends dx^a to -delta_i^a d/d xi_i and d xi_i to
    delta_i^a d/d x^a + c_ij^k xi_k d/d xi_j.
    """
    A = algebroid
    n, m = A.base.dim, A.rank
    base = dual_chart(A)
    lift = lambda p: p.transport(base)  # noqa: E731
    xi = [base.coordinate(name) for name in A.dual_names]
    zero = base.zero()
    fibers = tuple(f"d_{c}" for c in A.base.coords) + \
        tuple(f"d_{d}" for d in A.dual_names)
    duals = tuple(f"{c}_dot" for c in base.coords)

    anchor = []
    for a in range(n):  # rows for dx^a
        row = [zero] * n
        for i in range(m):
            row.append(-lift(A.anchor[i][a]))
        anchor.append(tuple(row))
    for i in range(m):  # rows for d xi_i
        row = [lift(A.anchor[i][a]) for a in range(n)]
        for j in range(m):
            acc = zero
            for k in range(m):
                coeff = A.c(i, j, k)
                if not coeff.is_zero():
                    acc = acc + lift(coeff) * xi[k]
            row.append(acc)
        anchor.append(tuple(row))

    structure: _StructureTable = {}
    for i in range(m):  # [d x^a, d xi_i] = -(d_b delta_i^a) dx^b
        for a in range(n):
            entries = {}
            for b, name in enumerate(A.base.coords):
                d = A.anchor[i][a].partial(name)
                if not d.is_zero():
                    entries[b] = -lift(d)
            if entries:
                structure[(a, n + i)] = entries
    for (i, j), table in A.structure.items():
        entries = {}
        for k, coeff in table.items():
            entries[n + k] = lift(coeff)
        for b, name in enumerate(A.base.coords):
            acc = zero
            for k, coeff in table.items():
                d = coeff.partial(name)
                if not d.is_zero():
                    acc = acc + lift(d) * xi[k]
            if not acc.is_zero():
                entries[b] = acc
        if entries:
            structure[(n + i, n + j)] = entries

    return build_algebroid(base, fibers, anchor, structure, dual_names=duals,
                           provenance="cotangent-lift", parent=A)


def linear_poisson(algebroid: Algebroid):
    """The fiberwise-linear bivector on the dual chart encoding the same
    structure data.  Returns a validated Poisson structure."""
    from .poisson import build_poisson

    A = algebroid
    n = A.base.dim
    chart = dual_chart(A)
    owner = canonical_algebroid(chart)
    xi = [chart.coordinate(name) for name in A.dual_names]
    terms: Dict[Tuple[int, int], Poly] = {}
    for (i, j), table in A.structure.items():
        acc = chart.zero()
        for k, coeff in table.items():
            acc = acc + coeff.transport(chart) * xi[k]
        if not acc.is_zero():
            terms[(n + i, n + j)] = acc
    for i in range(A.rank):
        for a in range(n):
            entry = A.anchor[i][a]
            if not entry.is_zero():
                # d/d xi_i ∧ d/d x^a stored on the sorted key (a, n+i)
                terms[(a, n + i)] = -entry.transport(chart)
    bivector = GradedTensor(owner, Kind.MV, 2, terms)
    return build_poisson(chart, bivector)
