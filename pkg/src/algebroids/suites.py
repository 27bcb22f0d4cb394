"""Named identity suites: every titled law of the calculus, re-verified on
seeded random instances with structured, replayable reports.

Each suite checks one block of identities over the algebroids and Poisson
structures of a model (the built-in fixture set by default).  A suite result
is a JSON-ready dict::

    {"suite": ..., "title": ..., "seed": ..., "trials": ...,
     "status": "pass" | "fail", "notes": [...],
     "items": [{"id": ..., "label": ..., "status": ..., "checked": n,
                "witness": {...}?}, ...]}

A failing identity carries a witness with everything needed to replay it:
a self-contained mini model (the inputs and the nonzero residual as named
tensors), an integer point where the residual does not vanish, the residual's
term values at that point, and the one-line ``eval`` command that reproduces
them.

Instances are drawn from a per-(seed, suite, item) generator, so results are
deterministic for a given seed and independent of item order.
"""

from __future__ import annotations

import itertools
import json
import random

from . import tensor as _tensor_conventions
from .algebroid import (
    anchor_apply,
    canonical_algebroid,
    dotted_chart,
    dual_chart,
    linear_poisson,
    section_bracket,
    tangent_lift,
)
from .calculus import (
    differential,
    fn_bracket,
    lie_derivative,
    nr_bracket,
    schouten,
    sym_schouten,
)
from .errors import NotInvertible, UnknownName
from .lifts import (
    G_map,
    H_map,
    J_map,
    Jstar,
    canonical_transport,
    classical_complete_lift,
    classical_vertical_lift,
    complete_lift_T,
    cot_complete_G_vec,
    iota,
    vertical_lift_V,
    vertical_pi,
)
from .model import Model, builtin_model, dumps_model
from .poisson import (
    extended_bracket,
    g_p,
    h_p,
    koszul_schouten,
    lambda_p,
    poisson_bracket,
    r_p,
    tangent_poisson,
)
from .tensor import (
    GradedTensor,
    Kind,
    basis_keys,
    contract,
    contract_mixed,
    mixed_from_vector,
    random_coefficient,
    random_tensor,
    remap,
    sym_product,
    wedge,
)

DEFAULT_SEED = 0
DEFAULT_TRIALS = 50


# -- witnesses ---------------------------------------------------------------

def _grid_points(dim, rng):
    """Small integer points, deterministic first, then seeded random draws."""
    values = (0, 1, -1, 2, -2, 3, -3)
    if dim == 0:
        yield ()
        return
    if len(values) ** dim <= 20000:
        yield from itertools.product(values, repeat=dim)
    else:
        for _ in range(5000):
            yield tuple(rng.randint(-9, 9) for _ in range(dim))


def _witness_point(residual, rng):
    chart = residual.owner.base
    for values in _grid_points(chart.dim, rng):
        point = dict(zip(chart.coords, values))
        evaluated = {key: coeff.eval_at(point)
                     for key, coeff in residual.terms.items()}
        if any(evaluated.values()):
            return point, evaluated
    return None, {}


def _key_string(kind, key):
    from .model import tensor_key_string

    return tensor_key_string(kind, key)


def _witness_model(tensors):
    """A self-contained model holding the named input tensors (and the
    residual), inventing names for their charts and owners."""
    model = Model()
    charts = []      # (Chart, name)
    owners = []      # (Algebroid, name)

    def chart_name(chart):
        for known, name in charts:
            if known == chart:
                return name
        name = "chart" if not charts else f"chart{len(charts) + 1}"
        charts.append((chart, name))
        model.charts[name] = chart
        return name

    def owner_name(owner):
        for known, name in owners:
            if known == owner:
                return name
        if owner.is_canonical:
            name = chart_name(owner.base)
        else:
            chart_name(owner.base)
            name = f"A{sum(1 for _, n in owners if n.startswith('A')) + 1}"
            model.algebroids[name] = owner
        owners.append((owner, name))
        return name

    for name, tensor in tensors.items():
        model.tensors[name] = tensor
        model.tensor_owners[name] = owner_name(tensor.owner)
    return model


def _witness(fixture, label, inputs, residual, rng):
    named = dict(inputs)
    named["residual"] = residual
    model = _witness_model(named)
    point, evaluated = _witness_point(residual, rng)
    at = ",".join(f"{name}={value}" for name, value in point.items()) if point else ""
    payload = {
        "fixture": fixture,
        "identity": label,
        "model": json.loads(dumps_model(model)),
        "point": {name: str(value) for name, value in (point or {}).items()},
        "residual_at_point": {
            _key_string(residual.kind, key): str(value)
            for key, value in sorted(evaluated.items(), key=repr)},
        "replay": ("save the 'model' object as witness.json, then: "
                   f"algebroids eval --model witness.json --tensor residual"
                   + (f" --at {at}" if at else "")),
    }
    return payload


class _Run:
    """Accumulates one suite's items."""

    def __init__(self, suite, title, model, seed, trials, coeff_degree):
        self.suite = suite
        self.title = title
        self.model = model
        self.seed = seed
        self.trials = trials
        self.coeff_degree = coeff_degree
        self.items = []
        self.notes = []

    def rng(self, item_id):
        return random.Random(f"{self.seed}:{self.suite}:{item_id}")

    def share(self, buckets):
        return max(1, -(-self.trials // max(1, buckets)))

    def algebroids(self):
        return sorted(self.model.algebroids.items())

    def poisson(self):
        return sorted(self.model.poisson.items())

    def canonical(self):
        return [(name, A) for name, A in self.algebroids() if A.is_canonical]

    def draw(self, rng, owner, kind, degree, keys=2):
        return random_tensor(rng, owner, kind, degree,
                             coeff_degree=self.coeff_degree, max_keys=keys)

    def note(self, text):
        self.notes.append(text)

    def identity(self, item_id, label, instances):
        """``instances`` yields (fixture, inputs, residual) — or a tuple of
        residuals of unlike degrees; the item fails on the first nonzero
        residual and freezes it as a witness."""
        rng = self.rng(f"{item_id}/witness")
        checked = 0
        witness = None
        for fixture, inputs, residual in instances:
            checked += 1
            residuals = residual if isinstance(residual, tuple) else (residual,)
            offender = next((r for r in residuals if not r.is_zero()), None)
            if offender is not None:
                witness = _witness(fixture, label, inputs, offender, rng)
                break
        item = {"id": item_id, "label": label,
                "status": "fail" if witness else "pass", "checked": checked}
        if witness:
            item["witness"] = witness
        self.items.append(item)

    def predicate(self, item_id, label, instances):
        """``instances`` yields (fixture, inputs, ok) for checks that are not
        residual-shaped (injectivity, error paths)."""
        checked = 0
        failure = None
        for fixture, inputs, ok in instances:
            checked += 1
            if not ok:
                named = {name: t for name, t in inputs.items()
                         if isinstance(t, GradedTensor)}
                failure = {
                    "fixture": fixture,
                    "identity": label,
                    "model": json.loads(dumps_model(_witness_model(named))),
                }
                break
        item = {"id": item_id, "label": label,
                "status": "fail" if failure else "pass", "checked": checked}
        if failure:
            item["witness"] = failure
        self.items.append(item)

    def result(self):
        status = "pass" if all(i["status"] == "pass" for i in self.items) else "fail"
        return {"suite": self.suite, "title": self.title, "seed": self.seed,
                "trials": self.trials, "status": status,
                "notes": self.notes, "items": self.items}


def _velocity(coeff, source, target):
    out = target.zero()
    for name in source.coords:
        d = coeff.partial(name)
        if not d.is_zero():
            out = out + d.transport(target) * target.coordinate(f"{name}_dot")
    return out


# -- exterior calculus -------------------------------------------------------

def _suite_theorem_1(run):
    """d² = 0 and the Leibniz / commutator laws of i_X and L_X."""
    fixtures = run.algebroids()
    per = run.share(len(fixtures))

    def instances(item_id, residual_of):
        rng = run.rng(item_id)
        for name, A in fixtures:
            for _ in range(per):
                yield residual_of(name, A, rng)

    def d_squared(name, A, rng):
        mu = run.draw(rng, A, Kind.FORM, rng.choice([0, 1, min(2, A.rank)]))
        return name, {"mu": mu}, differential(A, differential(A, mu))

    run.identity("d-squared", "d∘d = 0", instances("d-squared", d_squared))

    def d_leibniz(name, A, rng):
        k = rng.choice([0, 1])
        mu = run.draw(rng, A, Kind.FORM, k)
        nu = run.draw(rng, A, Kind.FORM, rng.choice([0, 1]))
        sign = -1 if k % 2 else 1
        residual = (differential(A, wedge(mu, nu))
                    - wedge(differential(A, mu), nu)
                    - wedge(mu, differential(A, nu)) * sign)
        return name, {"mu": mu, "nu": nu}, residual

    run.identity("d-leibniz", "d(mu∧nu) = d(mu)∧nu + (−1)^k mu∧d(nu)",
                 instances("d-leibniz", d_leibniz))

    def i_leibniz(name, A, rng):
        k = rng.choice([1, min(2, A.rank)])
        mu = run.draw(rng, A, Kind.FORM, k)
        nu = run.draw(rng, A, Kind.FORM, rng.choice([1, min(2, A.rank)]))
        x = run.draw(rng, A, Kind.MV, 1)
        sign = -1 if k % 2 else 1
        residual = (contract(x, wedge(mu, nu))
                    - wedge(contract(x, mu), nu)
                    - wedge(mu, contract(x, nu)) * sign)
        return name, {"x": x, "mu": mu, "nu": nu}, residual

    run.identity("i-leibniz", "i_X(mu∧nu) = i_X(mu)∧nu + (−1)^k mu∧i_X(nu)",
                 instances("i-leibniz", i_leibniz))

    def lie_leibniz(name, A, rng):
        mu = run.draw(rng, A, Kind.FORM, rng.choice([0, 1]))
        nu = run.draw(rng, A, Kind.FORM, rng.choice([0, 1, min(2, A.rank)]))
        x = run.draw(rng, A, Kind.MV, 1)
        residual = (lie_derivative(A, x, wedge(mu, nu))
                    - wedge(lie_derivative(A, x, mu), nu)
                    - wedge(mu, lie_derivative(A, x, nu)))
        return name, {"x": x, "mu": mu, "nu": nu}, residual

    run.identity("lie-leibniz", "L_X(mu∧nu) = L_X(mu)∧nu + mu∧L_X(nu)",
                 instances("lie-leibniz", lie_leibniz))

    def lie_commutator(name, A, rng):
        mu = run.draw(rng, A, Kind.FORM, rng.choice([1, min(2, A.rank)]))
        x = run.draw(rng, A, Kind.MV, 1)
        y = run.draw(rng, A, Kind.MV, 1)
        residual = (lie_derivative(A, x, lie_derivative(A, y, mu))
                    - lie_derivative(A, y, lie_derivative(A, x, mu))
                    - lie_derivative(A, section_bracket(A, x, y), mu))
        return name, {"x": x, "y": y, "mu": mu}, residual

    run.identity("lie-commutator", "L_X∘L_Y − L_Y∘L_X = L_[X,Y]",
                 instances("lie-commutator", lie_commutator))

    def lie_insertion(name, A, rng):
        mu = run.draw(rng, A, Kind.FORM, rng.choice([1, min(2, A.rank)]))
        x = run.draw(rng, A, Kind.MV, 1)
        y = run.draw(rng, A, Kind.MV, 1)
        residual = (lie_derivative(A, x, contract(y, mu))
                    - contract(y, lie_derivative(A, x, mu))
                    - contract(section_bracket(A, x, y), mu))
        return name, {"x": x, "y": y, "mu": mu}, residual

    run.identity("lie-insertion", "L_X∘i_Y − i_Y∘L_X = i_[X,Y]",
                 instances("lie-insertion", lie_insertion))


def _suite_theorem_2(run):
    """The operator identity that pins the generalized Schouten bracket, on a
    full basis of forms; the bracket on functions; the adjoint derivation."""
    run.note("active contraction order: "
             + _tensor_conventions.CONTRACTION_ORDER)
    fixtures = run.algebroids()
    draws = run.share(len(fixtures))

    def operator(item_id):
        rng = run.rng(item_id)
        for name, A in fixtures:
            degrees = range(1, min(3, A.rank) + 1)
            for _ in range(draws):
                a = rng.choice(list(degrees))
                b = rng.choice(list(degrees))
                x = run.draw(rng, A, Kind.MV, a)
                y = run.draw(rng, A, Kind.MV, b)
                sign = -1 if (a * (b - 1)) % 2 else 1
                for degree in range(1, min(3, A.rank) + 1):
                    for key in basis_keys(A, Kind.FORM, degree):
                        mu = GradedTensor(A, Kind.FORM, degree, {key: 1})
                        residual = (lie_derivative(A, y, contract(x, mu))
                                    - contract(x, lie_derivative(A, y, mu)) * sign
                                    + contract(schouten(A, x, y), mu))
                        yield name, {"x": x, "y": y, "mu": mu}, residual

    run.identity("operator-identity",
                 "L_Y∘i_X − (−1)^{a(b−1)} i_X∘L_Y = −i_[X,Y] on basis forms",
                 operator("operator-identity"))

    def on_functions_residual(item_id):
        rng = run.rng(item_id)
        for name, A in fixtures:
            for _ in range(draws):
                x = run.draw(rng, A, Kind.MV, 1)
                f = random_coefficient(rng, A.base, run.coeff_degree)
                fx = GradedTensor(A, Kind.MV, 0, {(): f})
                applied = A.base.zero()
                for (i,), c in x.terms.items():
                    for a, coord in enumerate(A.base.coords):
                        applied = applied + c * A.anchor[i][a] * f.partial(coord)
                residual = schouten(A, x, fx) - GradedTensor(
                    A, Kind.MV, 0, {(): applied})
                yield name, {"x": x, "f": fx}, residual

    run.identity("bracket-on-functions", "[X, f] = anchor(X)(f)",
                 on_functions_residual("bracket-on-functions"))

    def derivation(item_id):
        rng = run.rng(item_id)
        for name, A in fixtures:
            for _ in range(draws):
                a = rng.choice([1, 2])
                x = run.draw(rng, A, Kind.MV, a)
                y = run.draw(rng, A, Kind.MV, rng.choice([1, min(2, A.rank)]))
                z = run.draw(rng, A, Kind.MV, 1)
                sign = -1 if ((a - 1) * y.degree) % 2 else 1
                residual = (schouten(A, x, wedge(y, z))
                            - wedge(schouten(A, x, y), z)
                            - wedge(y, schouten(A, x, z)) * sign)
                yield name, {"x": x, "y": y, "z": z}, residual

    run.identity("adjoint-derivation",
                 "[X, Y∧Z] = [X,Y]∧Z + (−1)^{(a−1)b} Y∧[X,Z]",
                 derivation("adjoint-derivation"))


def _suite_theorem_3(run):
    """The Nijenhuis–Richardson bracket is a graded Lie bracket."""
    fixtures = run.algebroids()
    per = run.share(len(fixtures))

    def antisymmetry(item_id):
        rng = run.rng(item_id)
        for name, A in fixtures:
            for _ in range(per):
                k = run.draw(rng, A, Kind.MIXED, rng.choice([0, 1, min(2, A.rank)]))
                l = run.draw(rng, A, Kind.MIXED, rng.choice([0, 1]))
                sign = -1 if ((k.degree - 1) * (l.degree - 1)) % 2 else 1
                residual = nr_bracket(k, l) + nr_bracket(l, k) * sign
                yield name, {"K": k, "L": l}, residual

    run.identity("antisymmetry", "[K,L] = −(−1)^{(a−1)(b−1)} [L,K]",
                 antisymmetry("antisymmetry"))

    def jacobi(item_id):
        rng = run.rng(item_id)
        for name, A in fixtures:
            for _ in range(per):
                ks = [run.draw(rng, A, Kind.MIXED,
                               rng.choice([0, 1, min(2, A.rank)]))
                      for _ in range(3)]
                a, b, c = (t.degree - 1 for t in ks)
                residual = (
                    nr_bracket(nr_bracket(ks[0], ks[1]), ks[2])
                    * (-1 if (a * c) % 2 else 1)
                    + nr_bracket(nr_bracket(ks[1], ks[2]), ks[0])
                    * (-1 if (b * a) % 2 else 1)
                    + nr_bracket(nr_bracket(ks[2], ks[0]), ks[1])
                    * (-1 if (c * b) % 2 else 1))
                yield name, {"K": ks[0], "L": ks[1], "M": ks[2]}, residual

    run.identity("graded-jacobi", "graded Jacobi identity",
                 jacobi("graded-jacobi"))


def _suite_theorem_4(run):
    """The Frölicher–Nijenhuis bracket: the Lie-differential operator
    identity and the graded Lie laws."""
    fixtures = run.algebroids()
    per = run.share(len(fixtures))

    def operator(item_id):
        rng = run.rng(item_id)
        for name, A in fixtures:
            for _ in range(per):
                k = run.draw(rng, A, Kind.MIXED, rng.choice([0, 1, min(2, A.rank)]))
                l = run.draw(rng, A, Kind.MIXED, rng.choice([0, 1]))
                omega = run.draw(rng, A, Kind.FORM, rng.choice([1, min(2, A.rank)]))
                sign = -1 if (k.degree * l.degree) % 2 else 1
                residual = (lie_derivative(A, fn_bracket(A, k, l), omega)
                            - lie_derivative(A, k, lie_derivative(A, l, omega))
                            + lie_derivative(A, l, lie_derivative(A, k, omega))
                            * sign)
                yield name, {"K": k, "L": l, "omega": omega}, residual

    run.identity("operator-identity", "L_[K,L] = L_K∘L_L − (−1)^{ab} L_L∘L_K",
                 operator("operator-identity"))

    def antisymmetry(item_id):
        rng = run.rng(item_id)
        for name, A in fixtures:
            for _ in range(per):
                k = run.draw(rng, A, Kind.MIXED, rng.choice([0, 1, min(2, A.rank)]))
                l = run.draw(rng, A, Kind.MIXED, rng.choice([0, 1]))
                sign = -1 if (k.degree * l.degree) % 2 else 1
                residual = fn_bracket(A, k, l) + fn_bracket(A, l, k) * sign
                yield name, {"K": k, "L": l}, residual

    run.identity("antisymmetry", "[K,L] = −(−1)^{ab} [L,K]",
                 antisymmetry("antisymmetry"))

    def jacobi(item_id):
        rng = run.rng(item_id)
        for name, A in fixtures:
            for _ in range(per):
                ks = [run.draw(rng, A, Kind.MIXED,
                               rng.choice([0, 1, min(2, A.rank)]))
                      for _ in range(3)]
                a, b, c = (t.degree for t in ks)
                residual = (
                    fn_bracket(A, fn_bracket(A, ks[0], ks[1]), ks[2])
                    * (-1 if (a * c) % 2 else 1)
                    + fn_bracket(A, fn_bracket(A, ks[1], ks[2]), ks[0])
                    * (-1 if (b * a) % 2 else 1)
                    + fn_bracket(A, fn_bracket(A, ks[2], ks[0]), ks[1])
                    * (-1 if (c * b) % 2 else 1))
                yield name, {"K": ks[0], "L": ks[1], "M": ks[2]}, residual

    run.identity("graded-jacobi", "graded Jacobi identity",
                 jacobi("graded-jacobi"))


def _suite_eq_1_12(run):
    """Insertion operators compose to the Nijenhuis–Richardson bracket."""
    fixtures = run.algebroids()
    per = run.share(len(fixtures))

    def operator(item_id):
        rng = run.rng(item_id)
        for name, A in fixtures:
            for _ in range(per):
                k = run.draw(rng, A, Kind.MIXED, rng.choice([0, 1, min(2, A.rank)]))
                l = run.draw(rng, A, Kind.MIXED, rng.choice([0, 1, min(2, A.rank)]))
                omega = run.draw(rng, A, Kind.FORM,
                                 rng.choice([1, min(2, A.rank), A.rank]))
                sign = -1 if ((k.degree - 1) * (l.degree - 1)) % 2 else 1
                residual = (contract_mixed(nr_bracket(k, l), omega)
                            - contract_mixed(k, contract_mixed(l, omega))
                            + contract_mixed(l, contract_mixed(k, omega)) * sign)
                yield name, {"K": k, "L": l, "omega": omega}, residual

    run.identity("insertion-identity",
                 "i_[K,L] = i_K∘i_L − (−1)^{(a−1)(b−1)} i_L∘i_K",
                 operator("insertion-identity"))


# -- Poisson structures ------------------------------------------------------

def _suite_theorem_5(run):
    """Λ maps the Koszul–Schouten bracket to the Schouten bracket; it inverts
    exactly over an invertible bundle map."""
    fixtures = run.poisson()
    per = run.share(len(fixtures))

    def homomorphism(item_id):
        rng = run.rng(item_id)
        for name, ps in fixtures:
            O = ps.owner
            for _ in range(per):
                mu = run.draw(rng, O, Kind.FORM, rng.choice([0, 1, 2]))
                nu = run.draw(rng, O, Kind.FORM, rng.choice([0, 1, 2]))
                residual = (lambda_p(ps, koszul_schouten(ps, mu, nu))
                            - schouten(O, lambda_p(ps, mu), lambda_p(ps, nu)))
                yield name, {"mu": mu, "nu": nu}, residual

    run.identity("lambda-homomorphism",
                 "Λ[mu,nu]_P = [Λmu, Λnu]", homomorphism("lambda-homomorphism"))

    def inverse(item_id):
        rng = run.rng(item_id)
        for name, ps in fixtures:
            O = ps.owner
            invertible = True
            try:
                lambda_p(ps, O.e(0), "inverse")
            except NotInvertible:
                invertible = False
            for _ in range(per if invertible else 1):
                if not invertible:
                    yield name, {}, True
                    break
                mu = run.draw(rng, O, Kind.FORM, rng.choice([1, 2]))
                back = lambda_p(ps, lambda_p(ps, mu), "inverse")
                yield name, {"mu": mu}, back == mu

    run.predicate("lambda-inverse",
                  "Λ⁻¹∘Λ = id wherever the bundle map inverts",
                  inverse("lambda-inverse"))


def _suite_theorem_6(run):
    """The extended bracket is a graded Lie bracket restricting to the
    Poisson bracket on functions and compatible with d."""
    fixtures = run.poisson()
    per = run.share(len(fixtures))

    def on_functions(item_id):
        rng = run.rng(item_id)
        for name, ps in fixtures:
            O = ps.owner
            for _ in range(per):
                f = random_coefficient(rng, ps.chart, run.coeff_degree)
                g = random_coefficient(rng, ps.chart, run.coeff_degree)
                residual = (extended_bracket(ps, O.fn(f), O.fn(g))
                            - GradedTensor(O, Kind.FORM, 0,
                                           {(): poisson_bracket(ps, f, g)}))
                yield name, {"f": O.fn(f), "g": O.fn(g)}, residual

    run.identity("poisson-on-functions", "{f, g}_P is the Poisson bracket",
                 on_functions("poisson-on-functions"))

    def antisymmetry(item_id):
        rng = run.rng(item_id)
        for name, ps in fixtures:
            O = ps.owner
            for _ in range(per):
                ka, kb = rng.choice([0, 1, 2]), rng.choice([0, 1])
                mu = run.draw(rng, O, Kind.FORM, ka)
                nu = run.draw(rng, O, Kind.FORM, kb)
                sign = -1 if (ka * kb) % 2 else 1
                residual = (extended_bracket(ps, mu, nu)
                            + extended_bracket(ps, nu, mu) * sign)
                yield name, {"mu": mu, "nu": nu}, residual

    run.identity("antisymmetry", "graded antisymmetry of {,}_P",
                 antisymmetry("antisymmetry"))

    def jacobi(item_id):
        rng = run.rng(item_id)
        for name, ps in fixtures:
            O = ps.owner
            for _ in range(per):
                ms = [run.draw(rng, O, Kind.FORM, rng.choice([0, 1, 2]), keys=1)
                      for _ in range(3)]
                a, b, c = (t.degree for t in ms)
                residual = (
                    extended_bracket(ps, ms[0], extended_bracket(ps, ms[1], ms[2]))
                    * (-1 if (a * c) % 2 else 1)
                    + extended_bracket(ps, ms[1], extended_bracket(ps, ms[2], ms[0]))
                    * (-1 if (b * a) % 2 else 1)
                    + extended_bracket(ps, ms[2], extended_bracket(ps, ms[0], ms[1]))
                    * (-1 if (c * b) % 2 else 1))
                yield name, {"mu": ms[0], "nu": ms[1], "rho": ms[2]}, residual

    run.identity("graded-jacobi", "graded Jacobi identity of {,}_P",
                 jacobi("graded-jacobi"))

    def d_compat(item_id):
        rng = run.rng(item_id)
        for name, ps in fixtures:
            O = ps.owner
            for _ in range(per):
                mu = run.draw(rng, O, Kind.FORM, rng.choice([0, 1]))
                nu = run.draw(rng, O, Kind.FORM, rng.choice([0, 1, 2]))
                residual = (extended_bracket(ps, differential(O, mu), nu)
                            - differential(O, extended_bracket(ps, mu, nu)))
                yield name, {"mu": mu, "nu": nu}, residual

    run.identity("d-compatibility", "{d mu, nu}_P = d{mu, nu}_P",
                 d_compat("d-compatibility"))

    def term_expansion_01(item_id):
        rng = run.rng(item_id)
        for name, ps in fixtures:
            O = ps.owner

            def d0(f):
                return differential(O, O.fn(f))

            for _ in range(per):
                g0, f0, f1 = (random_coefficient(rng, ps.chart, run.coeff_degree)
                              for _ in range(3))
                lhs = extended_bracket(ps, O.fn(g0), d0(f1) * f0)
                rhs = (d0(f1) * poisson_bracket(ps, g0, f0)
                       + d0(poisson_bracket(ps, g0, f1)) * f0)
                yield name, {"g0": O.fn(g0), "f0": O.fn(f0), "f1": O.fn(f1)}, \
                    lhs - rhs

    run.identity("term-expansion-0-1",
                 "{g0, f0 df1}_P = {g0,f0} df1 + f0 d{g0,f1}",
                 term_expansion_01("term-expansion-0-1"))

    def term_expansion_11(item_id):
        rng = run.rng(item_id)
        for name, ps in fixtures:
            O = ps.owner

            def d0(f):
                return differential(O, O.fn(f))

            def pb(a, b):
                return poisson_bracket(ps, a, b)

            for _ in range(per):
                g0, g1, f0, f1 = (
                    random_coefficient(rng, ps.chart, run.coeff_degree)
                    for _ in range(4))
                lhs = extended_bracket(ps, d0(g1) * g0, d0(f1) * f0)
                rhs = (wedge(d0(g1), d0(f1)) * pb(g0, f0)
                       + wedge(d0(pb(g1, f0)), d0(f1)) * g0
                       - wedge(d0(pb(g1, f1)), d0(f0)) * g0
                       - wedge(d0(pb(g0, f1)), d0(g1)) * f0
                       + wedge(d0(pb(g1, f1)), d0(g0)) * f0
                       - wedge(d0(g0), d0(f0)) * pb(g1, f1))
                yield name, {"g0": O.fn(g0), "g1": O.fn(g1),
                             "f0": O.fn(f0), "f1": O.fn(f1)}, lhs - rhs

    run.identity("term-expansion-1-1",
                 "six-term expansion of {g0 dg1, f0 df1}_P",
                 term_expansion_11("term-expansion-1-1"))


def _suite_theorem_7(run):
    """d, H and G intertwine the extended bracket with the Koszul–Schouten,
    Frölicher–Nijenhuis and Schouten brackets."""
    fixtures = run.poisson()
    per = run.share(len(fixtures))

    def d_homomorphism(item_id):
        rng = run.rng(item_id)
        for name, ps in fixtures:
            O = ps.owner
            for _ in range(per):
                mu = run.draw(rng, O, Kind.FORM, rng.choice([0, 1]))
                nu = run.draw(rng, O, Kind.FORM, rng.choice([0, 1]))
                residual = (koszul_schouten(ps, differential(O, mu),
                                            differential(O, nu))
                            - differential(O, extended_bracket(ps, mu, nu)))
                yield name, {"mu": mu, "nu": nu}, residual

    run.identity("d-homomorphism", "[d mu, d nu]_P = d{mu, nu}_P",
                 d_homomorphism("d-homomorphism"))

    def h_homomorphism(item_id):
        rng = run.rng(item_id)
        for name, ps in fixtures:
            O = ps.owner
            for _ in range(per):
                mu = run.draw(rng, O, Kind.FORM, rng.choice([0, 1]))
                nu = run.draw(rng, O, Kind.FORM, rng.choice([0, 1]))
                residual = (h_p(ps, extended_bracket(ps, mu, nu))
                            - fn_bracket(O, h_p(ps, mu), h_p(ps, nu)))
                yield name, {"mu": mu, "nu": nu}, residual

    run.identity("h-homomorphism", "H{mu,nu}_P = [H mu, H nu]^{F-N}",
                 h_homomorphism("h-homomorphism"))

    def g_homomorphism(item_id):
        rng = run.rng(item_id)
        for name, ps in fixtures:
            O = ps.owner
            for _ in range(per):
                mu = run.draw(rng, O, Kind.FORM, rng.choice([0, 1, 2]))
                nu = run.draw(rng, O, Kind.FORM, rng.choice([0, 1]))
                residual = (g_p(ps, extended_bracket(ps, mu, nu))
                            - schouten(O, g_p(ps, mu), g_p(ps, nu)))
                yield name, {"mu": mu, "nu": nu}, residual

    run.identity("g-homomorphism", "G{mu,nu}_P = [G mu, G nu]",
                 g_homomorphism("g-homomorphism"))


def _suite_eq_2_6(run):
    """The Koszul–Schouten bracket agrees with its insertion/Lie expansion."""
    fixtures = run.poisson()
    per = run.share(len(fixtures))

    def expansion(item_id):
        rng = run.rng(item_id)
        for name, ps in fixtures:
            O = ps.owner
            for _ in range(per):
                ka = rng.choice([0, 1, 2])
                mu = run.draw(rng, O, Kind.FORM, ka)
                nu = run.draw(rng, O, Kind.FORM, rng.choice([0, 1, 2]))
                sign = -1 if ka % 2 else 1
                residual = (koszul_schouten(ps, mu, nu)
                            - contract_mixed(h_p(ps, mu), nu)
                            + lie_derivative(O, r_p(ps, mu), nu) * sign)
                yield name, {"mu": mu, "nu": nu}, residual

    run.identity("h-r-expansion",
                 "[mu,nu]_P = i_{H mu} nu − (−1)^k L_{R mu} nu",
                 expansion("h-r-expansion"))


# -- lifts to the tangent algebroid ------------------------------------------

def _suite_theorem_8(run):
    """Vertical and complete lifts: function laws and module structure."""
    fixtures = run.algebroids()
    per = run.share(len(fixtures))

    def function_laws(item_id):
        rng = run.rng(item_id)
        for name, A in fixtures:
            TL = tangent_lift(A)
            for _ in range(per):
                f = random_coefficient(rng, A.base, run.coeff_degree)
                vf = vertical_lift_V(A, A.fn(f)).tensor
                tf = complete_lift_T(A, A.fn(f)).tensor
                pulled = GradedTensor(TL, Kind.MV, 0, {(): f.transport(TL.base)})
                drift = GradedTensor(TL, Kind.MV, 0,
                                     {(): _velocity(f, A.base, TL.base)})
                yield name, {"V(f)": vf, "T(f)": tf}, (vf - pulled) + (tf - drift)

    run.identity("function-lifts",
                 "V(f) is the pullback; T(f) is the velocity derivative",
                 function_laws("function-lifts"))

    def module_laws(item_id):
        rng = run.rng(item_id)
        for name, A in fixtures:
            for _ in range(per):
                f = random_coefficient(rng, A.base, run.coeff_degree)
                x = run.draw(rng, A, Kind.MV, 1)
                fx = x * f
                vf = vertical_lift_V(A, A.fn(f)).tensor.as_function()
                tf = complete_lift_T(A, A.fn(f)).tensor.as_function()
                residual_v = (vertical_lift_V(A, fx).tensor
                              - vertical_lift_V(A, x).tensor * vf)
                residual_t = (complete_lift_T(A, fx).tensor
                              - vertical_lift_V(A, x).tensor * tf
                              - complete_lift_T(A, x).tensor * vf)
                yield name, {"x": x}, residual_v + residual_t

    run.identity("module-laws",
                 "V(fX) = V(f)V(X) and T(fX) = T(f)V(X) + V(f)T(X)",
                 module_laws("module-laws"))


def _suite_theorem_9(run):
    """V and T form a Leibniz pair for wedge and symmetric products."""
    fixtures = run.algebroids()
    per = run.share(len(fixtures))

    def products(kind, product, item_id):
        rng = run.rng(item_id)
        for name, A in fixtures:
            for _ in range(per):
                degrees = [1, min(2, A.rank)]
                s = run.draw(rng, A, kind, rng.choice(degrees))
                t = run.draw(rng, A, kind, rng.choice(degrees))
                residual_v = (vertical_lift_V(A, product(s, t)).tensor
                              - product(vertical_lift_V(A, s).tensor,
                                        vertical_lift_V(A, t).tensor))
                residual_t = (complete_lift_T(A, product(s, t)).tensor
                              - product(complete_lift_T(A, s).tensor,
                                        vertical_lift_V(A, t).tensor)
                              - product(vertical_lift_V(A, s).tensor,
                                        complete_lift_T(A, t).tensor))
                yield name, {"s": s, "t": t}, residual_v + residual_t

    run.identity("wedge-leibniz", "V/T Leibniz pair on multivector wedges",
                 products(Kind.MV, wedge, "wedge-leibniz"))
    run.identity("sym-leibniz", "V/T Leibniz pair on symmetric products",
                 products(Kind.SYM, sym_product, "sym-leibniz"))
    run.identity("form-leibniz", "V/T Leibniz pair on form wedges",
                 products(Kind.FORM, wedge, "form-leibniz"))


def _suite_theorem_10(run):
    """The tangent-lift anchor intertwines V/T with the classical lifts."""
    fixtures = [(n, A) for n, A in run.algebroids() if A.base.dim]
    skipped = [n for n, A in run.algebroids() if not A.base.dim]
    if skipped:
        run.note("skipped over a point (no vector fields to lift): "
                 + ", ".join(skipped))
    per = run.share(len(fixtures) or 1)

    def anchor(item_id):
        rng = run.rng(item_id)
        for name, A in fixtures:
            TL = tangent_lift(A)
            for _ in range(per):
                x = run.draw(rng, A, Kind.MV, 1)
                residual_v = (anchor_apply(TL, vertical_lift_V(A, x).tensor)
                              - classical_vertical_lift(anchor_apply(A, x)))
                residual_t = (anchor_apply(TL, complete_lift_T(A, x).tensor)
                              - classical_complete_lift(anchor_apply(A, x)))
                yield name, {"x": x}, residual_v + residual_t

    run.identity("anchor-intertwines",
                 "anchor∘V = v_T∘anchor and anchor∘T = d_T∘anchor",
                 anchor("anchor-intertwines"))


def _suite_theorem_11(run):
    """The V/T multiplication table for the Schouten brackets."""
    fixtures = run.algebroids()
    per = run.share(len(fixtures))

    def table(item_id):
        rng = run.rng(item_id)
        for name, A in fixtures:
            TL = tangent_lift(A)
            for _ in range(per):
                x = run.draw(rng, A, Kind.MV, rng.choice([1, min(2, A.rank)]))
                y = run.draw(rng, A, Kind.MV, rng.choice([1, min(2, A.rank)]))
                vx = vertical_lift_V(A, x).tensor
                vy = vertical_lift_V(A, y).tensor
                tx = complete_lift_T(A, x).tensor
                ty = complete_lift_T(A, y).tensor
                br = schouten(A, x, y)
                residual = (schouten(TL, vx, vy)
                            + (schouten(TL, vx, ty) - vertical_lift_V(A, br).tensor)
                            + (schouten(TL, tx, vy) - vertical_lift_V(A, br).tensor)
                            + (schouten(TL, tx, ty) - complete_lift_T(A, br).tensor))
                yield name, {"x": x, "y": y}, residual

    run.identity("schouten-table",
                 "[VV]=0, [VT]=[TV]=V[,], [TT]=T[,]", table("schouten-table"))

    def sym_table(item_id):
        rng = run.rng(item_id)
        for name, A in fixtures:
            TL = tangent_lift(A)
            for _ in range(per):
                x = run.draw(rng, A, Kind.SYM, rng.choice([1, 2]))
                y = run.draw(rng, A, Kind.SYM, rng.choice([1, 2]))
                vx = vertical_lift_V(A, x).tensor
                vy = vertical_lift_V(A, y).tensor
                tx = complete_lift_T(A, x).tensor
                ty = complete_lift_T(A, y).tensor
                br = sym_schouten(A, x, y)
                residual = (sym_schouten(TL, vx, vy)
                            + (sym_schouten(TL, tx, vy)
                               - vertical_lift_V(A, br).tensor)
                            + (sym_schouten(TL, vx, ty)
                               - vertical_lift_V(A, br).tensor)
                            + (sym_schouten(TL, tx, ty)
                               - complete_lift_T(A, br).tensor))
                yield name, {"x": x, "y": y}, residual

    run.identity("sym-schouten-table",
                 "the same table for the symmetric bracket",
                 sym_table("sym-schouten-table"))


def _suite_theorem_12(run):
    """Contraction, differential and Lie derivative against V/T lifts."""
    fixtures = run.algebroids()
    per = run.share(len(fixtures))

    def contraction(item_id):
        rng = run.rng(item_id)
        for name, A in fixtures:
            for _ in range(per):
                x = run.draw(rng, A, Kind.MV, 1)
                mu = run.draw(rng, A, Kind.FORM, rng.choice([1, min(2, A.rank)]))
                vx = vertical_lift_V(A, x).tensor
                tx = complete_lift_T(A, x).tensor
                vm = vertical_lift_V(A, mu).tensor
                tm = complete_lift_T(A, mu).tensor
                ix = contract(x, mu)
                residual = (contract(vx, vm)
                            + (contract(vx, tm) - vertical_lift_V(A, ix).tensor)
                            + (contract(tx, vm) - vertical_lift_V(A, ix).tensor)
                            + (contract(tx, tm) - complete_lift_T(A, ix).tensor))
                yield name, {"x": x, "mu": mu}, residual

    run.identity("contraction-table",
                 "i_{V/T} on V/T-lifted forms", contraction("contraction-table"))

    def differential_table(item_id):
        rng = run.rng(item_id)
        for name, A in fixtures:
            TL = tangent_lift(A)
            for _ in range(per):
                mu = run.draw(rng, A, Kind.FORM, rng.choice([0, 1, min(2, A.rank)]))
                vm = vertical_lift_V(A, mu).tensor
                tm = complete_lift_T(A, mu).tensor
                dmu = differential(A, mu)
                residual = ((differential(TL, vm)
                             - vertical_lift_V(A, dmu).tensor)
                            + (differential(TL, tm)
                               - complete_lift_T(A, dmu).tensor))
                yield name, {"mu": mu}, residual

    run.identity("differential-table", "d∘V = V∘d and d∘T = T∘d",
                 differential_table("differential-table"))

    def lie_table(item_id):
        rng = run.rng(item_id)
        for name, A in fixtures:
            TL = tangent_lift(A)
            for _ in range(per):
                x = run.draw(rng, A, Kind.MV, 1)
                mu = run.draw(rng, A, Kind.FORM, rng.choice([1, min(2, A.rank)]))
                vx = vertical_lift_V(A, x).tensor
                tx = complete_lift_T(A, x).tensor
                vm = vertical_lift_V(A, mu).tensor
                tm = complete_lift_T(A, mu).tensor
                lx = lie_derivative(A, x, mu)
                residual = (lie_derivative(TL, vx, vm)
                            + (lie_derivative(TL, vx, tm)
                               - vertical_lift_V(A, lx).tensor)
                            + (lie_derivative(TL, tx, vm)
                               - vertical_lift_V(A, lx).tensor)
                            + (lie_derivative(TL, tx, tm)
                               - complete_lift_T(A, lx).tensor))
                yield name, {"x": x, "mu": mu}, residual

    run.identity("lie-table", "L_{V/T} on V/T-lifted forms",
                 lie_table("lie-table"))


def _suite_theorem_13(run):
    """The V/T table for the Nijenhuis–Richardson bracket."""
    fixtures = run.algebroids()
    per = run.share(len(fixtures))

    def table(item_id):
        rng = run.rng(item_id)
        for name, A in fixtures:
            for _ in range(per):
                k = run.draw(rng, A, Kind.MIXED, rng.choice([0, 1]))
                l = run.draw(rng, A, Kind.MIXED, rng.choice([0, 1]))
                vk = vertical_lift_V(A, k).tensor
                vl = vertical_lift_V(A, l).tensor
                tk = complete_lift_T(A, k).tensor
                tl = complete_lift_T(A, l).tensor
                br = nr_bracket(k, l)
                residual = (nr_bracket(vk, vl)
                            + (nr_bracket(vk, tl) - vertical_lift_V(A, br).tensor)
                            + (nr_bracket(tk, vl) - vertical_lift_V(A, br).tensor)
                            + (nr_bracket(tk, tl) - complete_lift_T(A, br).tensor))
                yield name, {"K": k, "L": l}, residual

    run.identity("nr-table", "the V/T table for the N-R bracket",
                 table("nr-table"))


def _suite_theorem_14(run):
    """The V/T table for the Frölicher–Nijenhuis bracket."""
    fixtures = run.algebroids()
    per = run.share(len(fixtures))

    def table(item_id):
        rng = run.rng(item_id)
        for name, A in fixtures:
            TL = tangent_lift(A)
            for _ in range(per):
                k = run.draw(rng, A, Kind.MIXED, rng.choice([0, 1]))
                l = run.draw(rng, A, Kind.MIXED, rng.choice([0, 1]))
                vk = vertical_lift_V(A, k).tensor
                vl = vertical_lift_V(A, l).tensor
                tk = complete_lift_T(A, k).tensor
                tl = complete_lift_T(A, l).tensor
                br = fn_bracket(A, k, l)
                residual = (fn_bracket(TL, vk, vl)
                            + (fn_bracket(TL, vk, tl)
                               - vertical_lift_V(A, br).tensor)
                            + (fn_bracket(TL, tk, vl)
                               - vertical_lift_V(A, br).tensor)
                            + (fn_bracket(TL, tk, tl)
                               - complete_lift_T(A, br).tensor))
                yield name, {"K": k, "L": l}, residual

    run.identity("fn-table", "the V/T table for the F-N bracket",
                 table("fn-table"))


# -- lifts to the dual bundle ------------------------------------------------

def _suite_theorem_15(run):
    """The dual-chart Schouten identities tying iota, V_pi and G together."""
    fixtures = run.algebroids()
    per = run.share(len(fixtures))

    def an_instance(name, A, rng):
        ps = linear_poisson(A)
        D = ps.owner
        x = run.draw(rng, A, Kind.MV, 1)
        y = run.draw(rng, A, Kind.MV, 1)
        mu = run.draw(rng, A, Kind.FORM, rng.choice([1, min(2, A.rank)]))
        nu = run.draw(rng, A, Kind.FORM, 1)
        return ps, D, x, y, mu, nu

    def wedge_mult(item_id):
        rng = run.rng(item_id)
        for name, A in fixtures:
            for _ in range(per):
                _, _, _, _, mu, nu = an_instance(name, A, rng)
                residual = (vertical_pi(A, wedge(mu, nu))
                            - wedge(vertical_pi(A, mu), vertical_pi(A, nu)))
                yield name, {"mu": mu, "nu": nu}, residual

    run.identity("a-multiplicative", "V_pi(mu∧nu) = V_pi(mu)∧V_pi(nu)",
                 wedge_mult("a-multiplicative"))

    def commute(item_id):
        rng = run.rng(item_id)
        for name, A in fixtures:
            for _ in range(per):
                _, D, _, _, mu, nu = an_instance(name, A, rng)
                residual = schouten(D, vertical_pi(A, mu), vertical_pi(A, nu))
                yield name, {"mu": mu, "nu": nu}, residual

    run.identity("b-commuting", "[V_pi mu, V_pi nu] = 0", commute("b-commuting"))

    def iota_bracket(item_id):
        rng = run.rng(item_id)
        for name, A in fixtures:
            for _ in range(per):
                _, D, x, _, mu, _ = an_instance(name, A, rng)
                residual = (schouten(D, D.fn(iota(A, x)), vertical_pi(A, mu))
                            + vertical_pi(A, contract(x, mu)))
                yield name, {"x": x, "mu": mu}, residual

    run.identity("c-iota", "[iota(X), V_pi mu] = −V_pi(i_X mu)",
                 iota_bracket("c-iota"))

    def p_bracket(item_id):
        rng = run.rng(item_id)
        for name, A in fixtures:
            for _ in range(per):
                ps, D, _, _, mu, _ = an_instance(name, A, rng)
                residual = (schouten(D, ps.bivector, vertical_pi(A, mu))
                            - vertical_pi(A, differential(A, mu)))
                yield name, {"mu": mu}, residual

    run.identity("d-differential", "[P, V_pi mu] = V_pi(d mu)",
                 p_bracket("d-differential"))

    def g_lie(item_id):
        rng = run.rng(item_id)
        for name, A in fixtures:
            for _ in range(per):
                _, D, x, _, mu, _ = an_instance(name, A, rng)
                residual = (schouten(D, cot_complete_G_vec(A, x),
                                     vertical_pi(A, mu))
                            - vertical_pi(A, lie_derivative(A, x, mu)))
                yield name, {"x": x, "mu": mu}, residual

    run.identity("e-lie", "[G(X), V_pi mu] = V_pi(L_X mu)", g_lie("e-lie"))

    def g_g(item_id):
        rng = run.rng(item_id)
        for name, A in fixtures:
            for _ in range(per):
                _, D, x, y, _, _ = an_instance(name, A, rng)
                residual = (schouten(D, cot_complete_G_vec(A, x),
                                     cot_complete_G_vec(A, y))
                            - cot_complete_G_vec(A, section_bracket(A, x, y)))
                yield name, {"x": x, "y": y}, residual

    run.identity("f-bracket", "[G(X), G(Y)] = G([X, Y])", g_g("f-bracket"))

    def g_iota(item_id):
        rng = run.rng(item_id)
        for name, A in fixtures:
            for _ in range(per):
                _, D, x, y, _, _ = an_instance(name, A, rng)
                residual = (schouten(D, cot_complete_G_vec(A, x),
                                     D.fn(iota(A, y)))
                            - D.fn(iota(A, section_bracket(A, x, y))))
                yield name, {"x": x, "y": y}, residual

    run.identity("g-iota", "[G(X), iota(Y)] = iota([X, Y])", g_iota("g-iota"))


def _g_expanded(A, k):
    """The product-rule branch of the dual complete lift of a mixed tensor."""
    ps = linear_poisson(A)
    out = GradedTensor.zero(ps.owner, Kind.MV, k.degree + 1)
    for (form_key, j), coeff in k.terms.items():
        mu = GradedTensor(A, Kind.FORM, k.degree, {form_key: coeff})
        out = out + wedge(cot_complete_G_vec(A, A.e(j)), vertical_pi(A, mu)) \
            - vertical_pi(A, differential(A, mu)) * iota(A, A.e(j))
    return out


def _suite_theorem_16(run):
    """The mixed-tensor maps J and G extend −iota and the vector lift, and
    the two routes to G agree."""
    fixtures = run.algebroids()
    per = run.share(len(fixtures))

    def degree_zero(item_id):
        rng = run.rng(item_id)
        for name, A in fixtures:
            D = canonical_algebroid(dual_chart(A))
            for _ in range(per):
                x = run.draw(rng, A, Kind.MV, 1)
                k = mixed_from_vector(x)
                yield name, {"x": x}, (
                    J_map(A, k) + D.fn(iota(A, x)),
                    G_map(A, k) - cot_complete_G_vec(A, x))

    run.identity("degree-zero", "J(X) = −iota(X) and G(X) = G_vec(X)",
                 degree_zero("degree-zero"))

    def dual_routes(item_id):
        rng = run.rng(item_id)
        for name, A in fixtures:
            ps = linear_poisson(A)
            for _ in range(per):
                k = run.draw(rng, A, Kind.MIXED, rng.choice([0, 1, min(2, A.rank)]))
                residual = (schouten(ps.owner, ps.bivector, J_map(A, k))
                            - _g_expanded(A, k))
                yield name, {"K": k}, residual

    run.identity("dual-routes",
                 "[P, J(K)] equals the product-rule expansion of G(K)",
                 dual_routes("dual-routes"))


def _suite_theorem_17(run):
    """J is an injective homomorphism of the N-R bracket."""
    fixtures = run.algebroids()
    per = run.share(len(fixtures))

    def homomorphism(item_id):
        rng = run.rng(item_id)
        for name, A in fixtures:
            D = canonical_algebroid(dual_chart(A))
            for _ in range(per):
                k = run.draw(rng, A, Kind.MIXED, rng.choice([0, 1]))
                l = run.draw(rng, A, Kind.MIXED, rng.choice([0, 1]))
                residual = (schouten(D, J_map(A, k), J_map(A, l))
                            - J_map(A, nr_bracket(k, l)))
                yield name, {"K": k, "L": l}, residual

    run.identity("nr-homomorphism", "[J(K), J(L)] = J([K,L]^{N-R})",
                 homomorphism("nr-homomorphism"))

    def injectivity(item_id):
        rng = run.rng(item_id)
        plane = None
        for name, A in fixtures:
            if A.is_canonical and A.rank == 2:
                plane = (name, A)
                break
        if plane is None:
            return
        name, A = plane
        slots = [(key, j) for degree in (0, 1, 2)
                 for key in basis_keys(A, Kind.FORM, degree)
                 for j in range(A.rank)]
        for _ in range(run.trials):
            terms = {}
            degree = rng.choice([0, 1, 2])
            for key, j in slots:
                if len(key) == degree and rng.random() < 0.5:
                    c = rng.randint(-2, 2)
                    if c:
                        terms[(key, j)] = c
            k = GradedTensor(A, Kind.MIXED, degree, terms)
            yield name, {"K": k}, J_map(A, k).is_zero() == k.is_zero()

    run.predicate("injectivity",
                  "J(K) = 0 only for K = 0 on a spanning set of mixed "
                  "tensors of form degree ≤ 2",
                  injectivity("injectivity"))


def _suite_theorem_18(run):
    """The dual complete lift G is a homomorphism of the F-N bracket."""
    fixtures = run.algebroids()
    per = run.share(len(fixtures))

    def homomorphism(item_id):
        rng = run.rng(item_id)
        for name, A in fixtures:
            for _ in range(per):
                k = run.draw(rng, A, Kind.MIXED, rng.choice([0, 1]))
                l = run.draw(rng, A, Kind.MIXED, rng.choice([0, 1]))
                residual = (schouten(canonical_algebroid(dual_chart(A)),
                                     G_map(A, k), G_map(A, l))
                            - G_map(A, fn_bracket(A, k, l)))
                yield name, {"K": k, "L": l}, residual

    run.identity("fn-homomorphism", "[G(K), G(L)] = G([K,L]^{F-N})",
                 homomorphism("fn-homomorphism"))


# -- the canonical case ------------------------------------------------------

def _direct_vertical_vector(chart, x):
    target = canonical_algebroid(dotted_chart(chart))
    n = chart.dim
    return GradedTensor(target, Kind.MV, 1,
                        {(n + key[0],): c.transport(target.base)
                         for key, c in x.terms.items()})


def _direct_complete_vector(chart, x):
    target = canonical_algebroid(dotted_chart(chart))
    n = chart.dim
    out = GradedTensor.zero(target, Kind.MV, 1)
    for (a,), c in x.terms.items():
        out = out + GradedTensor(target, Kind.MV, 1,
                                 {(a,): c.transport(target.base)})
        drift = _velocity(c, chart, target.base)
        if not drift.is_zero():
            out = out + GradedTensor(target, Kind.MV, 1, {(n + a,): drift})
    return out


def _direct_vertical_form(chart, mu):
    target = canonical_algebroid(dotted_chart(chart))
    return GradedTensor(target, Kind.FORM, mu.degree,
                        {key: c.transport(target.base)
                         for key, c in mu.terms.items()})


def _direct_complete_form(chart, mu):
    target = canonical_algebroid(dotted_chart(chart))
    n = chart.dim
    out = GradedTensor.zero(target, Kind.FORM, mu.degree)
    for key, c in mu.terms.items():
        drift = _velocity(c, chart, target.base)
        if not drift.is_zero():
            out = out + GradedTensor(target, Kind.FORM, mu.degree, {key: drift})
        for r in range(len(key)):
            piece = GradedTensor(target, Kind.FORM, 0,
                                 {(): c.transport(target.base)})
            for s, idx in enumerate(key):
                piece = wedge(piece, target.estar(n + idx if s == r else idx))
            out = out + piece
    return out


def _direct_vertical_bivector(chart, p):
    target = canonical_algebroid(dotted_chart(chart))
    n = chart.dim
    return GradedTensor(target, Kind.MV, 2,
                        {(n + u, n + v): c.transport(target.base)
                         for (u, v), c in p.terms.items()})


def _direct_complete_bivector(chart, p):
    target = canonical_algebroid(dotted_chart(chart))
    n = chart.dim
    out = GradedTensor.zero(target, Kind.MV, 2)
    for (u, v), c in p.terms.items():
        drift = _velocity(c, chart, target.base)
        if not drift.is_zero():
            out = out + wedge(target.e(n + u), target.e(n + v)) * drift
        pulled = c.transport(target.base)
        out = out + (wedge(target.e(u), target.e(n + v))
                     + wedge(target.e(n + u), target.e(v))) * pulled
    return out


def _suite_theorem_19(run):
    """The flip transports carry V/T to the classical vertical/complete
    lifts, written out independently."""
    fixtures = run.canonical()
    if not fixtures:
        run.note("no canonical algebroids in the model")
    per = run.share(len(fixtures) or 1)

    def vectors(item_id):
        rng = run.rng(item_id)
        for name, A in fixtures:
            chart = A.base
            for _ in range(per):
                x = run.draw(rng, A, Kind.MV, 1)
                residual = ((canonical_transport("kappa", vertical_lift_V(A, x))
                             - _direct_vertical_vector(chart, x))
                            + (canonical_transport("kappa", complete_lift_T(A, x))
                               - _direct_complete_vector(chart, x)))
                yield name, {"x": x}, residual

    run.identity("vectors", "kappa∘V = v_T and kappa∘T = d_T on vector fields",
                 vectors("vectors"))

    def bivectors(item_id):
        rng = run.rng(item_id)
        for name, A in fixtures:
            chart = A.base
            if A.rank < 2:
                continue
            for _ in range(per):
                p = run.draw(rng, A, Kind.MV, 2)
                residual = ((canonical_transport("kappa", vertical_lift_V(A, p))
                             - _direct_vertical_bivector(chart, p))
                            + (canonical_transport("kappa", complete_lift_T(A, p))
                               - _direct_complete_bivector(chart, p)))
                yield name, {"p": p}, residual

    run.identity("bivectors", "the same on bivectors", bivectors("bivectors"))

    def forms(item_id):
        rng = run.rng(item_id)
        for name, A in fixtures:
            chart = A.base
            for _ in range(per):
                mu = run.draw(rng, A, Kind.FORM,
                              rng.choice([1, min(2, A.rank)]))
                residual = ((canonical_transport("alpha", vertical_lift_V(A, mu))
                             - _direct_vertical_form(chart, mu))
                            + (canonical_transport("alpha", complete_lift_T(A, mu))
                               - _direct_complete_form(chart, mu)))
                yield name, {"mu": mu}, residual

    run.identity("forms", "alpha∘V = v_T and alpha∘T = d_T on forms",
                 forms("forms"))

    def involution(item_id):
        rng = run.rng(item_id)
        for name, A in fixtures:
            TL = tangent_lift(A)
            for _ in range(per):
                s = run.draw(rng, TL, Kind.MV, rng.choice([1, 2]))
                mu = run.draw(rng, TL, Kind.FORM, rng.choice([1, 2]))
                yield name, {"s": s, "mu": mu}, (
                    canonical_transport(
                        "kappa", canonical_transport("kappa", s)) - s,
                    canonical_transport(
                        "alpha", canonical_transport("alpha", mu)) - mu)

    run.identity("involution", "kappa∘kappa = id and alpha∘alpha = id",
                 involution("involution"))


def _suite_theorem_20(run):
    """The flip is the tangent-lift anchor and an algebroid isomorphism; the
    two routes to the tangent Poisson structure agree."""
    fixtures = run.canonical()
    per = run.share(len(fixtures) or 1)

    def anchor(item_id):
        rng = run.rng(item_id)
        for name, A in fixtures:
            TL = tangent_lift(A)
            for _ in range(per):
                s = run.draw(rng, TL, Kind.MV, 1)
                residual = anchor_apply(TL, s) - canonical_transport("kappa", s)
                yield name, {"s": s}, residual

    run.identity("anchor-is-kappa", "the tangent-lift anchor is the flip",
                 anchor("anchor-is-kappa"))

    def bracket_iso(item_id):
        rng = run.rng(item_id)
        for name, A in fixtures:
            TL = tangent_lift(A)
            target = canonical_algebroid(dotted_chart(A.base))
            for _ in range(per):
                s = run.draw(rng, TL, Kind.MV, 1)
                t = run.draw(rng, TL, Kind.MV, 1)
                residual = (canonical_transport("kappa", section_bracket(TL, s, t))
                            - section_bracket(target,
                                              canonical_transport("kappa", s),
                                              canonical_transport("kappa", t)))
                yield name, {"s": s, "t": t}, residual

    run.identity("bracket-isomorphism",
                 "kappa intertwines the section brackets",
                 bracket_iso("bracket-isomorphism"))

    def poisson_routes(item_id):
        for name, A in run.algebroids():
            lifted = tangent_poisson(linear_poisson(A))
            relinearized = linear_poisson(tangent_lift(A))
            position = {c: i for i, c in enumerate(relinearized.chart.coords)}
            fiber_map = {i: position[c]
                         for i, c in enumerate(lifted.chart.coords)}
            residual = (remap(lifted.bivector, relinearized.owner, fiber_map)
                        - relinearized.bivector)
            yield name, {"lifted": lifted.bivector,
                         "relinearized": relinearized.bivector}, residual

    run.identity("poisson-routes",
                 "lifting the fiberwise-linear bivector matches linearizing "
                 "the tangent lift",
                 poisson_routes("poisson-routes"))


def _suite_theorem_21(run):
    """The classical-lift tables on the canonical case."""
    fixtures = run.canonical()
    per = run.share(len(fixtures) or 1)

    def schouten_table(item_id):
        rng = run.rng(item_id)
        for name, A in fixtures:
            target = canonical_algebroid(dotted_chart(A.base))
            for _ in range(per):
                x = run.draw(rng, A, Kind.MV, rng.choice([1, min(2, A.rank)]))
                y = run.draw(rng, A, Kind.MV, 1)
                br = schouten(A, x, y)
                residual = (schouten(target, classical_vertical_lift(x),
                                     classical_vertical_lift(y))
                            + (schouten(target, classical_complete_lift(x),
                                        classical_vertical_lift(y))
                               - classical_vertical_lift(br))
                            + (schouten(target, classical_complete_lift(x),
                                        classical_complete_lift(y))
                               - classical_complete_lift(br)))
                yield name, {"x": x, "y": y}, residual

    run.identity("schouten-table", "the v_T/d_T Schouten table",
                 schouten_table("schouten-table"))

    def mixed_tables(item_id):
        rng = run.rng(item_id)
        for name, A in fixtures:
            target = canonical_algebroid(dotted_chart(A.base))
            for _ in range(per):
                k = run.draw(rng, A, Kind.MIXED, rng.choice([0, 1]))
                l = run.draw(rng, A, Kind.MIXED, rng.choice([0, 1]))
                nr = nr_bracket(k, l)
                fn = fn_bracket(A, k, l)
                yield name, {"K": k, "L": l}, (
                    nr_bracket(classical_vertical_lift(k),
                               classical_vertical_lift(l)),
                    nr_bracket(classical_complete_lift(k),
                               classical_vertical_lift(l))
                    - classical_vertical_lift(nr),
                    nr_bracket(classical_complete_lift(k),
                               classical_complete_lift(l))
                    - classical_complete_lift(nr),
                    fn_bracket(target, classical_vertical_lift(k),
                               classical_vertical_lift(l)),
                    fn_bracket(target, classical_complete_lift(k),
                               classical_vertical_lift(l))
                    - classical_vertical_lift(fn),
                    fn_bracket(target, classical_complete_lift(k),
                               classical_complete_lift(l))
                    - classical_complete_lift(fn))

    run.identity("mixed-tables", "the v_T/d_T tables for N-R and F-N",
                 mixed_tables("mixed-tables"))

    def cartan_tables(item_id):
        rng = run.rng(item_id)
        for name, A in fixtures:
            target = canonical_algebroid(dotted_chart(A.base))
            for _ in range(per):
                x = run.draw(rng, A, Kind.MV, 1)
                mu = run.draw(rng, A, Kind.FORM, rng.choice([1, min(2, A.rank)]))
                ix = contract(x, mu)
                dmu = differential(A, mu)
                lx = lie_derivative(A, x, mu)
                yield name, {"x": x, "mu": mu}, (
                    contract(classical_vertical_lift(x),
                             classical_vertical_lift(mu)),
                    contract(classical_complete_lift(x),
                             classical_vertical_lift(mu))
                    - classical_vertical_lift(ix),
                    contract(classical_complete_lift(x),
                             classical_complete_lift(mu))
                    - classical_complete_lift(ix),
                    differential(target, classical_vertical_lift(mu))
                    - classical_vertical_lift(dmu),
                    differential(target, classical_complete_lift(mu))
                    - classical_complete_lift(dmu),
                    lie_derivative(target, classical_vertical_lift(x),
                                   classical_vertical_lift(mu)),
                    lie_derivative(target, classical_complete_lift(x),
                                   classical_vertical_lift(mu))
                    - classical_vertical_lift(lx),
                    lie_derivative(target, classical_complete_lift(x),
                                   classical_complete_lift(mu))
                    - classical_complete_lift(lx))

    run.identity("cartan-tables", "the v_T/d_T tables for i, d and L",
                 cartan_tables("cartan-tables"))


def _pullback(A, owner, mu):
    return GradedTensor(owner, Kind.FORM, mu.degree,
                        {key: c.transport(owner.base)
                         for key, c in mu.terms.items()})


def _suite_theorem_22(run):
    """The degreewise-signed bundle map of the fiberwise-linear bivector
    recovers the dual lifts of forms and mixed tensors."""
    fixtures = run.canonical()
    per = run.share(len(fixtures) or 1)

    def pullbacks(item_id):
        rng = run.rng(item_id)
        for name, A in fixtures:
            ps = linear_poisson(A)
            for _ in range(per):
                mu = run.draw(rng, A, Kind.FORM,
                              rng.choice([0, 1, min(2, A.rank)]))
                residual = (lambda_p(ps, _pullback(A, ps.owner, mu), "star")
                            - vertical_pi(A, mu))
                yield name, {"mu": mu}, residual

    run.identity("pullbacks", "Λ*(pullback mu) = V_pi(mu)",
                 pullbacks("pullbacks"))

    def contracted(item_id):
        rng = run.rng(item_id)
        for name, A in fixtures:
            ps = linear_poisson(A)
            for _ in range(per):
                k = run.draw(rng, A, Kind.MIXED, rng.choice([0, 1, min(2, A.rank)]))
                residual = lambda_p(ps, Jstar(k), "star") + J_map(A, k)
                yield name, {"K": k}, residual

    run.identity("contracted-pullbacks", "Λ*(J*(K)) = −J(K)",
                 contracted("contracted-pullbacks"))

    def differentials(item_id):
        rng = run.rng(item_id)
        for name, A in fixtures:
            ps = linear_poisson(A)
            for _ in range(per):
                k = run.draw(rng, A, Kind.MIXED, rng.choice([0, 1]))
                residual = (lambda_p(ps, differential(ps.owner, Jstar(k)), "star")
                            + G_map(A, k))
                yield name, {"K": k}, residual

    run.identity("differentials", "Λ*(d J*(K)) = −G(K)",
                 differentials("differentials"))

    def d_intertwine(item_id):
        rng = run.rng(item_id)
        for name, A in fixtures:
            ps = linear_poisson(A)
            D = ps.owner
            for _ in range(per):
                nu = run.draw(rng, D, Kind.FORM, rng.choice([1, 2]))
                residual = (lambda_p(ps, differential(D, nu), "star")
                            - schouten(D, ps.bivector, lambda_p(ps, nu, "star")))
                yield name, {"nu": nu}, residual

    run.identity("d-intertwine", "Λ*(d nu) = [P, Λ*(nu)]",
                 d_intertwine("d-intertwine"))


def _suite_theorem_23(run):
    """J* maps the F-N bracket to the extended bracket."""
    fixtures = run.canonical()
    per = run.share(len(fixtures) or 1)

    def homomorphism(item_id):
        rng = run.rng(item_id)
        for name, A in fixtures:
            ps = linear_poisson(A)
            for _ in range(per):
                k = run.draw(rng, A, Kind.MIXED, rng.choice([0, 1]))
                l = run.draw(rng, A, Kind.MIXED,
                             rng.choice([0, 1, min(2, A.rank)]))
                residual = (extended_bracket(ps, Jstar(k), Jstar(l))
                            - Jstar(fn_bracket(A, k, l)))
                yield name, {"K": k, "L": l}, residual

    run.identity("extended-homomorphism", "{J*K, J*L}_P = J*([K,L]^{F-N})",
                 homomorphism("extended-homomorphism"))


def _literal_h(A, k):
    """The slot-by-slot momentum expansion of H on a canonical algebroid,
    written out independently of the Hamiltonian-map route."""
    D = canonical_algebroid(dual_chart(A))
    chart = D.base
    n = A.base.dim
    out = GradedTensor.zero(D, Kind.MIXED, k.degree)
    for (form_key, a), coeff in k.terms.items():
        f = coeff.transport(chart)
        out = out + GradedTensor(D, Kind.MIXED, k.degree, {(form_key, a): f})
        for i, slot in enumerate(form_key, start=1):
            sign = -1 if i % 2 else 1
            rest = form_key[:i - 1] + form_key[i:]
            out = out - GradedTensor(
                D, Kind.MIXED, k.degree,
                {((n + a,) + rest, n + slot): f * sign})
        momentum = chart.coordinate(chart.coords[n + a])
        for b, name in enumerate(A.base.coords):
            df = coeff.partial(name)
            if df.is_zero():
                continue
            weight = df.transport(chart) * momentum
            out = out - GradedTensor(D, Kind.MIXED, k.degree,
                                     {(form_key, n + b): weight})
            for i, slot in enumerate(form_key, start=1):
                sign = -1 if i % 2 else 1
                rest = form_key[:i - 1] + form_key[i:]
                out = out - GradedTensor(
                    D, Kind.MIXED, k.degree,
                    {((b,) + rest, n + slot): weight * sign})
    return out


def _literal_g(A, k):
    """The momentum expansion of G on a canonical algebroid (the orientation
    opposite to the shipped calibration)."""
    D = canonical_algebroid(dual_chart(A))
    chart = D.base
    n = A.base.dim
    out = GradedTensor.zero(D, Kind.MV, k.degree + 1)
    for (form_key, a), coeff in k.terms.items():
        f = coeff.transport(chart)
        key = (a,) + tuple(n + s for s in form_key)
        out = out - GradedTensor(D, Kind.MV, k.degree + 1, {key: f})
        momentum = chart.coordinate(chart.coords[n + a])
        for b, name in enumerate(A.base.coords):
            df = coeff.partial(name)
            if df.is_zero():
                continue
            key = (n + b,) + tuple(n + s for s in form_key)
            out = out + GradedTensor(D, Kind.MV, k.degree + 1,
                                     {key: df.transport(chart) * momentum})
    return out


def _suite_theorem_24(run):
    """H is an injective F-N homomorphism; the local momentum expansions of
    H and G; the Nijenhuis criterion instance."""
    run.note("orientation convention: G(dx⊗e_x) = +e_x∧e_p_x; the opposite "
             "global sign of G is a consistent alternative and is recorded "
             "by the literal-expansion item")
    fixtures = run.canonical()
    per = run.share(len(fixtures) or 1)

    def homomorphism(item_id):
        rng = run.rng(item_id)
        for name, A in fixtures:
            D = canonical_algebroid(dual_chart(A))
            for _ in range(per):
                k = run.draw(rng, A, Kind.MIXED, rng.choice([0, 1]))
                l = run.draw(rng, A, Kind.MIXED, rng.choice([0, 1]))
                residual = (fn_bracket(D, H_map(k), H_map(l))
                            - H_map(fn_bracket(A, k, l)))
                yield name, {"K": k, "L": l}, residual

    run.identity("fn-homomorphism", "[H(K), H(L)]^{F-N} = H([K,L]^{F-N})",
                 homomorphism("fn-homomorphism"))

    def h_expansion(item_id):
        rng = run.rng(item_id)
        for name, A in fixtures:
            for _ in range(per):
                k = run.draw(rng, A, Kind.MIXED, rng.choice([0, 1, min(2, A.rank)]))
                residual = H_map(k) - _literal_h(A, k)
                yield name, {"K": k}, residual

    run.identity("h-expansion", "H agrees with its momentum expansion",
                 h_expansion("h-expansion"))

    def g_expansion(item_id):
        rng = run.rng(item_id)
        for name, A in fixtures:
            for _ in range(per):
                k = run.draw(rng, A, Kind.MIXED, rng.choice([0, 1, min(2, A.rank)]))
                residual = G_map(A, k) + _literal_g(A, k)
                yield name, {"K": k}, residual

    run.identity("g-expansion",
                 "G agrees with its momentum expansion up to the recorded "
                 "global sign",
                 g_expansion("g-expansion"))

    def injectivity(item_id):
        rng = run.rng(item_id)
        for name, A in fixtures:
            if A.rank != 2:
                continue
            slots = [(key, j) for key in basis_keys(A, Kind.FORM, 1)
                     for j in range(A.rank)]
            for _ in range(run.trials):
                terms = {}
                for key, j in slots:
                    c = rng.randint(-2, 2)
                    if c:
                        terms[(key, j)] = c
                k = GradedTensor(A, Kind.MIXED, 1, terms)
                yield name, {"K": k}, H_map(k).is_zero() == k.is_zero()

    run.predicate("injectivity", "H(K) = 0 only for K = 0 on basis sums",
                  injectivity("injectivity"))

    def nijenhuis(item_id):
        for name, A in fixtures:
            if A.rank != 1:
                continue
            N = GradedTensor(A, Kind.MIXED, 1, {((0,), 0): 1})
            D = canonical_algebroid(dual_chart(A))
            fn_zero = fn_bracket(A, N, N).is_zero()
            g_zero = schouten(D, G_map(A, N), G_map(A, N)).is_zero()
            yield name, {"N": N}, fn_zero and g_zero

    run.predicate("nijenhuis-instance",
                  "[N,N]^{F-N} = 0 and [G(N), G(N)] = 0 for N = dx⊗e_x",
                  nijenhuis("nijenhuis-instance"))


def _suite_eq_7_12(run):
    """The dual flip intertwines the two exterior derivatives."""
    fixtures = run.canonical()
    per = run.share(len(fixtures) or 1)

    def intertwine(item_id):
        rng = run.rng(item_id)
        for name, A in fixtures:
            TL = tangent_lift(A)
            target = canonical_algebroid(dotted_chart(A.base))
            for _ in range(per):
                mu = run.draw(rng, TL, Kind.FORM, rng.choice([0, 1, 2]))
                residual = (canonical_transport("alpha", differential(TL, mu))
                            - differential(target,
                                           canonical_transport("alpha", mu)))
                yield name, {"mu": mu}, residual

    run.identity("alpha-d", "alpha∘d = d∘alpha", intertwine("alpha-d"))


def _tangent_anchor_map(A, s):
    """The tangent map of the anchor applied to a section of the tangent
    lift: barred components carry the anchor entries on the barred block,
    dotted components carry them on the dotted block and pick up the
    velocity derivative of the entries on the barred block."""
    n, m = A.base.dim, A.rank
    target = tangent_lift(canonical_algebroid(A.base))
    tb = target.base
    out = GradedTensor.zero(target, Kind.MV, 1)
    for (idx,), c in s.terms.items():
        i = idx if idx < m else idx - m
        for a in range(n):
            rho = A.anchor[i][a]
            if rho.is_zero():
                continue
            if idx < m:
                out = out + GradedTensor(target, Kind.MV, 1,
                                         {(a,): c * rho.transport(tb)})
            else:
                out = out + GradedTensor(target, Kind.MV, 1,
                                         {(n + a,): c * rho.transport(tb)})
                drift = _velocity(rho, A.base, tb)
                if not drift.is_zero():
                    out = out + GradedTensor(target, Kind.MV, 1,
                                             {(a,): c * drift})
    return out


def _suite_eq_7_13(run):
    """Flipping the tangent-lift anchor gives the tangent map of the
    anchor."""
    fixtures = [(n, A) for n, A in run.algebroids() if A.base.dim]
    skipped = [n for n, A in run.algebroids() if not A.base.dim]
    if skipped:
        run.note("skipped over a point (the tangent of the base is trivial): "
                 + ", ".join(skipped))
    per = run.share(len(fixtures) or 1)

    def intertwine(item_id):
        rng = run.rng(item_id)
        for name, A in fixtures:
            TL = tangent_lift(A)
            for _ in range(per):
                s = run.draw(rng, TL, Kind.MV, 1)
                residual = (canonical_transport("kappa", anchor_apply(TL, s))
                            - _tangent_anchor_map(A, s))
                yield name, {"s": s}, residual

    run.identity("kappa-anchor", "kappa∘(tangent-lift anchor) = T(anchor)",
                 intertwine("kappa-anchor"))


# -- registry ----------------------------------------------------------------

SUITES = {
    "theorem-1": ("exterior calculus: d, insertion and Lie derivative",
                  _suite_theorem_1),
    "theorem-2": ("the generalized Schouten bracket's operator identity",
                  _suite_theorem_2),
    "theorem-3": ("Nijenhuis–Richardson graded Lie laws", _suite_theorem_3),
    "theorem-4": ("Frölicher–Nijenhuis graded Lie laws", _suite_theorem_4),
    "theorem-5": ("Λ as a bracket homomorphism", _suite_theorem_5),
    "theorem-6": ("the extended bracket on forms", _suite_theorem_6),
    "theorem-7": ("d, H and G as bracket homomorphisms", _suite_theorem_7),
    "theorem-8": ("vertical and complete lifts of functions and sections",
                  _suite_theorem_8),
    "theorem-9": ("the V/T Leibniz pair", _suite_theorem_9),
    "theorem-10": ("the tangent-lift anchor on lifted sections",
                   _suite_theorem_10),
    "theorem-11": ("the V/T Schouten tables", _suite_theorem_11),
    "theorem-12": ("i, d and L against V/T lifts", _suite_theorem_12),
    "theorem-13": ("the V/T Nijenhuis–Richardson table", _suite_theorem_13),
    "theorem-14": ("the V/T Frölicher–Nijenhuis table", _suite_theorem_14),
    "theorem-15": ("dual-chart Schouten identities for iota, V_pi and G",
                   _suite_theorem_15),
    "theorem-16": ("the mixed-tensor maps J and G", _suite_theorem_16),
    "theorem-17": ("J as an injective N-R homomorphism", _suite_theorem_17),
    "theorem-18": ("G as an F-N homomorphism", _suite_theorem_18),
    "theorem-19": ("flip transports against direct classical lifts",
                   _suite_theorem_19),
    "theorem-20": ("the flip as anchor and isomorphism", _suite_theorem_20),
    "theorem-21": ("classical-lift bracket tables", _suite_theorem_21),
    "theorem-22": ("the signed bundle map recovers the dual lifts",
                   _suite_theorem_22),
    "theorem-23": ("J* maps F-N to the extended bracket", _suite_theorem_23),
    "theorem-24": ("H as an injective F-N homomorphism; expansions; the "
                   "Nijenhuis criterion", _suite_theorem_24),
    "eq-1-12": ("insertion operators compose to the N-R bracket",
                _suite_eq_1_12),
    "eq-2-6": ("the Koszul–Schouten insertion/Lie expansion", _suite_eq_2_6),
    "eq-7-12": ("the dual flip intertwines the differentials", _suite_eq_7_12),
    "eq-7-13": ("the flip carries the lifted anchor to the tangent anchor",
                _suite_eq_7_13),
}

SUITE_NAMES = tuple(SUITES)


def run_suite(name, model=None, seed=None, trials=None) -> dict:
    """Run one named suite and return its structured result."""
    if name not in SUITES:
        raise UnknownName(f"no suite named {name!r}; choose from "
                          f"{', '.join(SUITE_NAMES)}")
    if model is None:
        model = builtin_model()
    if seed is None:
        seed = model.suite.get("seed", DEFAULT_SEED)
    if trials is None:
        trials = model.suite.get("trials", DEFAULT_TRIALS)
    coeff_degree = model.suite.get("max_degree", 2)
    title, runner = SUITES[name]
    run = _Run(name, title, model, seed, trials, coeff_degree)
    runner(run)
    return run.result()


def run_all(model=None, seed=None, trials=None) -> list:
    """Run every suite, in registry order."""
    return [run_suite(name, model, seed, trials) for name in SUITE_NAMES]
