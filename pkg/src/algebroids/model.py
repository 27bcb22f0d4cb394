"""Model files: named charts, algebroids, Poisson structures and tensors in a
canonical JSON layout.

The schema is sparse and diff-friendly.  Top-level sections (each optional,
omitted when empty)::

    {
      "charts":     {name: [coord, ...]},
      "algebroids": {name: {"chart": name, "fibers": [name, ...],
                            "anchor": [[poly, ...], ...],
                            "c": {"i,j": {"k": poly}}}},
      "poisson":    {name: {"chart": name, "bivector": {"i,j": poly}}},
      "tensors":    {name: {"owner": name, "kind": "mv"|"form"|"mixed"|"sym",
                            "degree": int, "terms": {key: poly}}},
      "suite":      {"seed": int, "trials": int, "max_degree": int}
    }

Index keys are comma-joined and 1-based ("1,3"); a mixed-tensor key appends
its fiber index after a bar ("1,2|3", degree zero is "|3").  Polynomials are
strings in the grammar of :func:`algebroids.ring.parse_poly` and are dumped in
canonical form, so ``dump_model(load_model(path))`` reproduces a canonical
file byte for byte.

A tensor's ``owner`` may name either an algebroid or a chart; a chart name
stands for the canonical algebroid over that chart (which is how bivectors of
Poisson structures are owned).

``load_model`` is strict: malformed JSON or schema violations raise
``ParseError`` with a location; an algebroid or bivector that fails its
axioms raises ``ValidationError`` carrying the structured witness.
"""

from __future__ import annotations

import json

from .algebroid import Algebroid, build_algebroid, canonical_algebroid
from .errors import AlgebroidError, ParseError, StructureViolation, UnknownName, ValidationError
from .poisson import PoissonStructure, build_poisson
from .ring import Chart, parse_poly
from .tensor import GradedTensor, Kind

_KINDS = {"mv": Kind.MV, "form": Kind.FORM, "mixed": Kind.MIXED, "sym": Kind.SYM}
_KIND_NAMES = {kind: name for name, kind in _KINDS.items()}
_SUITE_KEYS = ("seed", "trials", "max_degree")


class Model:
    """A resolved bundle of named objects, as loaded from a model file.

    ``tensor_owners`` remembers the owner *name* each tensor was declared
    with, so a dump reproduces the author's wording.
    """

    __slots__ = ("charts", "algebroids", "poisson", "tensors", "tensor_owners",
                 "suite")

    def __init__(self, charts=None, algebroids=None, poisson=None,
                 tensors=None, tensor_owners=None, suite=None):
        self.charts: dict[str, Chart] = dict(charts or {})
        self.algebroids: dict[str, Algebroid] = dict(algebroids or {})
        self.poisson: dict[str, PoissonStructure] = dict(poisson or {})
        self.tensors: dict[str, GradedTensor] = dict(tensors or {})
        self.tensor_owners: dict[str, str] = dict(tensor_owners or {})
        self.suite: dict[str, int] = dict(suite or {})

    def __repr__(self):
        return (f"<Model charts={len(self.charts)} "
                f"algebroids={len(self.algebroids)} "
                f"poisson={len(self.poisson)} tensors={len(self.tensors)}>")

    def algebroid(self, name: str) -> Algebroid:
        try:
            return self.algebroids[name]
        except KeyError:
            raise UnknownName(f"no algebroid named {name!r} in the model") from None

    def poisson_structure(self, name: str) -> PoissonStructure:
        try:
            return self.poisson[name]
        except KeyError:
            raise UnknownName(f"no poisson structure named {name!r} in the model") from None

    def owner_named(self, name: str) -> Algebroid:
        """Resolve an owner name: an algebroid, or the canonical algebroid
        over a named chart."""
        if name in self.algebroids:
            return self.algebroids[name]
        if name in self.charts:
            return canonical_algebroid(self.charts[name])
        raise UnknownName(f"{name!r} names neither an algebroid nor a chart")

    def tensor(self, name: str) -> GradedTensor:
        """A named tensor; Poisson entries expose their bivector here too."""
        if name in self.tensors:
            return self.tensors[name]
        if name in self.poisson:
            return self.poisson[name].bivector
        raise UnknownName(f"no tensor named {name!r} in the model")


# -- decoding ----------------------------------------------------------------

def _expect_object(value, where):
    if not isinstance(value, dict):
        raise ParseError(f"{where}: expected an object, got {type(value).__name__}")
    return value


def _expect_name(name, where):
    if not isinstance(name, str) or not name:
        raise ParseError(f"{where}: names must be non-empty strings")
    return name


def _decode_poly(text, chart, where):
    if not isinstance(text, str):
        raise ParseError(f"{where}: polynomials are strings, got {type(text).__name__}")
    try:
        return parse_poly(text, chart)
    except AlgebroidError as exc:
        raise ParseError(f"{where}: {exc}") from exc


def _decode_indices(text, where, *, expect=None):
    """\"1,3\" (1-based) → (0, 2).  The empty string is the empty key."""
    if not isinstance(text, str):
        raise ParseError(f"{where}: index keys are strings")
    if text == "":
        out = ()
    else:
        try:
            out = tuple(int(part) - 1 for part in text.split(","))
        except ValueError:
            raise ParseError(f"{where}: bad index key {text!r}") from None
        if any(i < 0 for i in out):
            raise ParseError(f"{where}: indices are 1-based, got {text!r}")
    if expect is not None and len(out) != expect:
        raise ParseError(f"{where}: key {text!r} should list {expect} indices")
    return out


def _decode_chart(name, body):
    where = f"charts.{name}"
    if not isinstance(body, list) or not all(isinstance(c, str) for c in body):
        raise ParseError(f"{where}: a chart is a list of coordinate names")
    try:
        return Chart(tuple(body))
    except AlgebroidError as exc:
        raise ParseError(f"{where}: {exc}") from exc


def _decode_algebroid(name, body, charts):
    where = f"algebroids.{name}"
    body = _expect_object(body, where)
    unknown = set(body) - {"chart", "fibers", "anchor", "c"}
    if unknown:
        raise ParseError(f"{where}: unknown keys {sorted(unknown)}")
    chart_name = body.get("chart")
    if chart_name not in charts:
        raise ParseError(f"{where}: unknown chart {chart_name!r}")
    chart = charts[chart_name]
    fibers = body.get("fibers")
    if (not isinstance(fibers, list) or not fibers
            or not all(isinstance(f, str) for f in fibers)):
        raise ParseError(f"{where}: 'fibers' is a non-empty list of names")
    rank = len(fibers)
    anchor_rows = body.get("anchor")
    if not isinstance(anchor_rows, list) or len(anchor_rows) != rank:
        raise ParseError(f"{where}: 'anchor' needs one row per fiber")
    anchor = []
    for i, row in enumerate(anchor_rows):
        if not isinstance(row, list) or len(row) != chart.dim:
            raise ParseError(
                f"{where}.anchor[{i + 1}]: expected {chart.dim} entries")
        anchor.append(tuple(
            _decode_poly(entry, chart, f"{where}.anchor[{i + 1}][{a + 1}]")
            for a, entry in enumerate(row)))
    structure = {}
    for pair_key, column in _expect_object(body.get("c", {}), f"{where}.c").items():
        i, j = _decode_indices(pair_key, f"{where}.c", expect=2)
        if not i < j < rank:
            raise ParseError(f"{where}.c: key {pair_key!r} is not an ordered "
                             f"fiber pair of rank {rank}")
        column = _expect_object(column, f"{where}.c[{pair_key!r}]")
        entry = {}
        for k_key, poly in column.items():
            (k,) = _decode_indices(k_key, f"{where}.c[{pair_key!r}]", expect=1)
            if k >= rank:
                raise ParseError(f"{where}.c[{pair_key!r}]: fiber {k_key!r} "
                                 f"out of range")
            entry[k] = _decode_poly(poly, chart, f"{where}.c[{pair_key!r}][{k_key!r}]")
        structure[(i, j)] = entry
    try:
        return build_algebroid(chart, tuple(fibers), anchor=tuple(anchor),
                               structure=structure)
    except StructureViolation as exc:
        err = ValidationError(f"algebroid {name!r}: {exc}")
        err.witness = dict(exc.witness)
        raise err from exc
    except AlgebroidError as exc:
        raise ParseError(f"{where}: {exc}") from exc


def _decode_poisson(name, body, charts):
    where = f"poisson.{name}"
    body = _expect_object(body, where)
    unknown = set(body) - {"chart", "bivector"}
    if unknown:
        raise ParseError(f"{where}: unknown keys {sorted(unknown)}")
    chart_name = body.get("chart")
    if chart_name not in charts:
        raise ParseError(f"{where}: unknown chart {chart_name!r}")
    chart = charts[chart_name]
    terms = {}
    for key, poly in _expect_object(body.get("bivector", {}), f"{where}.bivector").items():
        i, j = _decode_indices(key, f"{where}.bivector", expect=2)
        if not i < j < chart.dim:
            raise ParseError(f"{where}.bivector: key {key!r} is not an "
                             f"ordered coordinate pair")
        terms[(i, j)] = _decode_poly(poly, chart, f"{where}.bivector[{key!r}]")
    bivector = GradedTensor(canonical_algebroid(chart), Kind.MV, 2, terms)
    try:
        return build_poisson(chart, bivector)
    except StructureViolation as exc:
        err = ValidationError(f"poisson {name!r}: {exc}")
        err.witness = dict(exc.witness)
        raise err from exc


def _decode_tensor(name, body, model):
    where = f"tensors.{name}"
    body = _expect_object(body, where)
    unknown = set(body) - {"owner", "kind", "degree", "terms"}
    if unknown:
        raise ParseError(f"{where}: unknown keys {sorted(unknown)}")
    owner_name = body.get("owner")
    try:
        owner = model.owner_named(owner_name)
    except (UnknownName, TypeError):
        raise ParseError(f"{where}: unknown owner {owner_name!r}") from None
    kind_name = body.get("kind")
    if kind_name not in _KINDS:
        raise ParseError(f"{where}: kind must be one of {sorted(_KINDS)}")
    kind = _KINDS[kind_name]
    degree = body.get("degree")
    if not isinstance(degree, int) or isinstance(degree, bool) or degree < 0:
        raise ParseError(f"{where}: degree must be a non-negative integer")
    terms = {}
    for key_text, poly in _expect_object(body.get("terms", {}), f"{where}.terms").items():
        if kind is Kind.MIXED:
            if not isinstance(key_text, str) or "|" not in key_text:
                raise ParseError(f"{where}.terms: mixed keys look like "
                                 f"\"1,2|3\", got {key_text!r}")
            form_text, _, fiber_text = key_text.partition("|")
            form_key = _decode_indices(form_text, f"{where}.terms", expect=degree)
            (fiber,) = _decode_indices(fiber_text, f"{where}.terms", expect=1)
            key = (form_key, fiber)
        else:
            key = _decode_indices(key_text, f"{where}.terms", expect=degree)
        terms[key] = _decode_poly(poly, owner.base, f"{where}.terms[{key_text!r}]")
    try:
        return owner_name, GradedTensor(owner, kind, degree, terms)
    except AlgebroidError as exc:
        raise ParseError(f"{where}: {exc}") from exc


def _decode_suite(body):
    body = _expect_object(body, "suite")
    unknown = set(body) - set(_SUITE_KEYS)
    if unknown:
        raise ParseError(f"suite: unknown keys {sorted(unknown)}")
    out = {}
    for key in _SUITE_KEYS:
        if key in body:
            value = body[key]
            if not isinstance(value, int) or isinstance(value, bool):
                raise ParseError(f"suite.{key}: expected an integer")
            out[key] = value
    return out


def loads_model(text: str) -> Model:
    """Parse and fully resolve a model from JSON text."""
    try:
        raw = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(
            f"not valid JSON: {exc.msg} (line {exc.lineno} column {exc.colno})"
        ) from exc
    raw = _expect_object(raw, "model")
    unknown = set(raw) - {"charts", "algebroids", "poisson", "tensors", "suite"}
    if unknown:
        raise ParseError(f"model: unknown sections {sorted(unknown)}")
    model = Model()
    for name, body in _expect_object(raw.get("charts", {}), "charts").items():
        model.charts[_expect_name(name, "charts")] = _decode_chart(name, body)
    for name, body in _expect_object(raw.get("algebroids", {}), "algebroids").items():
        model.algebroids[_expect_name(name, "algebroids")] = \
            _decode_algebroid(name, body, model.charts)
    for name, body in _expect_object(raw.get("poisson", {}), "poisson").items():
        model.poisson[_expect_name(name, "poisson")] = \
            _decode_poisson(name, body, model.charts)
    for name, body in _expect_object(raw.get("tensors", {}), "tensors").items():
        owner_name, tensor = _decode_tensor(_expect_name(name, "tensors"), body, model)
        model.tensors[name] = tensor
        model.tensor_owners[name] = owner_name
    if "suite" in raw:
        model.suite = _decode_suite(raw["suite"])
    return model


def load_model(path) -> Model:
    """Load a model file; see the module docstring for the schema."""
    with open(path, "r", encoding="utf-8") as handle:
        return loads_model(handle.read())


# -- encoding ----------------------------------------------------------------

def _indices_key(key) -> str:
    return ",".join(str(i + 1) for i in key)


def tensor_key_string(kind: Kind, key) -> str:
    """The schema's 1-based key string for one tensor term."""
    if kind is Kind.MIXED:
        form_key, fiber = key
        return f"{_indices_key(form_key)}|{fiber + 1}"
    return _indices_key(key)


def _chart_name_for(model: Model, chart: Chart, where: str) -> str:
    for name in sorted(model.charts):
        if model.charts[name] == chart:
            return name
    raise ValidationError(f"{where}: its chart {chart.coords!r} is not a "
                          f"named chart of the model")


def _encode_algebroid(model, name, algebroid):
    out = {
        "chart": _chart_name_for(model, algebroid.base, f"algebroid {name!r}"),
        "fibers": list(algebroid.fiber_names),
        "anchor": [[str(entry) for entry in row] for row in algebroid.anchor],
    }
    structure = {}
    for (i, j) in sorted(algebroid.structure):
        column = algebroid.structure[(i, j)]
        encoded = {str(k + 1): str(column[k]) for k in sorted(column)
                   if not column[k].is_zero()}
        if encoded:
            structure[f"{i + 1},{j + 1}"] = encoded
    if structure:
        out["c"] = structure
    return out


def _encode_poisson(model, name, ps):
    return {
        "chart": _chart_name_for(model, ps.chart, f"poisson {name!r}"),
        "bivector": {_indices_key(key): str(coeff)
                     for key, coeff in sorted(ps.bivector.terms.items())},
    }


def _encode_tensor(model, name, tensor):
    owner_name = model.tensor_owners.get(name)
    if owner_name is None:
        for candidate in sorted(model.algebroids):
            if model.algebroids[candidate] == tensor.owner:
                owner_name = candidate
                break
        else:
            owner_name = _chart_name_for(model, tensor.owner.base,
                                         f"tensor {name!r}")
    return {
        "owner": owner_name,
        "kind": _KIND_NAMES[tensor.kind],
        "degree": tensor.degree,
        "terms": {tensor_key_string(tensor.kind, key): str(coeff)
                  for key, coeff in sorted(tensor.terms.items(), key=repr)},
    }


def dumps_model(model: Model) -> str:
    """Canonical JSON text: sorted names, 1-based keys, canonical
    polynomials, two-space indent, trailing newline."""
    doc = {}
    if model.charts:
        doc["charts"] = {name: list(model.charts[name].coords)
                         for name in sorted(model.charts)}
    if model.algebroids:
        doc["algebroids"] = {
            name: _encode_algebroid(model, name, model.algebroids[name])
            for name in sorted(model.algebroids)}
    if model.poisson:
        doc["poisson"] = {name: _encode_poisson(model, name, model.poisson[name])
                          for name in sorted(model.poisson)}
    if model.tensors:
        doc["tensors"] = {name: _encode_tensor(model, name, model.tensors[name])
                          for name in sorted(model.tensors)}
    if model.suite:
        doc["suite"] = {key: model.suite[key] for key in _SUITE_KEYS
                        if key in model.suite}
    return json.dumps(doc, indent=2, ensure_ascii=False) + "\n"


def dump_model(model: Model, path) -> None:
    with open(path, "w", encoding="utf-8") as handle:
        handle.write(dumps_model(model))


# -- the built-in model ------------------------------------------------------

def builtin_model() -> Model:
    """The fixture registry as a Model: what the CLI uses when no --model is
    given, and the content of the shipped standard file."""
    from . import fixtures

    model = Model(suite={"seed": 0, "trials": 50})
    model.charts = {
        "point": Chart(()),
        "line": Chart(("x",)),
        "plane": Chart(("x", "y")),
        "space": Chart(("x", "y", "z")),
        "plane-xp": Chart(("x", "p")),
        "four": Chart(("x", "y", "p_x", "p_y")),
        "so3-dual": Chart(("xi_1", "xi_2", "xi_3")),
        "nc-dual": Chart(("x", "xi_e1", "xi_e2")),
    }
    model.algebroids = {name: make() for name, make in fixtures.ALGEBROIDS.items()}
    model.poisson = {name: make() for name, make in fixtures.POISSON.items()}
    four = model.poisson["poisson-four"]
    model.tensors = {"P": four.bivector}
    model.tensor_owners = {"P": "four"}
    return model
