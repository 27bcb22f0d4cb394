"""Command-line front end.

One verb per construct: ``validate`` checks every named structure, ``bracket``
/ ``d`` / ``lie`` / ``contract`` compute with named tensors, ``lift`` applies
the lift maps or builds lifted structures, ``suite`` runs the named identity
suites, and ``eval`` evaluates a tensor's coefficients at a rational point.

Every run prints a JSON report on stdout and a short human summary on stderr,
and exits 0 when everything passed, 1 when some checked identity failed, and
2 on input errors (unreadable models, unknown names, kind mismatches).
"""

from __future__ import annotations

import argparse
import json
import re
import sys
import time
from fractions import Fraction

from .algebroid import cotangent_lift, linear_poisson, tangent_lift
from .calculus import (differential, fn_bracket, lie_derivative, nr_bracket,
                       schouten, sym_schouten)
from .errors import AlgebroidError, KindMismatch, UnknownName
from .lifts import (G_map, H_map, J_map, Jstar, canonical_transport,
                    complete_lift_T, cot_complete_G_vec, vertical_lift_V,
                    vertical_pi, vertical_tau)
from .model import (Model, builtin_model, dumps_model, load_model,
                    tensor_key_string)
from .poisson import extended_bracket, koszul_schouten, tangent_poisson
from .ring import poly_to_string
from .suites import SUITE_NAMES, run_suite
from .tensor import GradedTensor, Kind, contract, contract_mixed, pretty

_BASIS_NAME = re.compile(r"^(e|estar)([1-9][0-9]*)$")


def _load(path):
    return load_model(path) if path else builtin_model()


def _resolve_tensor(model: Model, name: str, algebroid: str | None) -> GradedTensor:
    """A named tensor: model tensors and Poisson bivectors first, then basis
    sections ``e<i>`` / ``estar<i>`` of ``--algebroid`` (1-based)."""
    try:
        return model.tensor(name)
    except UnknownName:
        pass
    match = _BASIS_NAME.match(name)
    if match and algebroid is not None:
        owner = model.owner_named(algebroid)
        index = int(match.group(2)) - 1
        if index >= owner.rank:
            raise UnknownName(
                f"{name!r}: index out of range for {algebroid!r} "
                f"(rank {owner.rank})")
        return owner.e(index) if match.group(1) == "e" else owner.estar(index)
    if match:
        raise UnknownName(
            f"{name!r} is a basis name; pass --algebroid to pick its owner")
    raise UnknownName(f"no tensor named {name!r} in the model")


def _encode_tensor(t: GradedTensor) -> dict:
    return {
        "kind": t.kind.value,
        "degree": t.degree,
        "chart": list(t.owner.base.coords),
        "terms": {tensor_key_string(t.kind, key): poly_to_string(coeff)
                  for key, coeff in sorted(t.terms.items(), key=repr)},
        "pretty": pretty(t),
    }


def _encode_structure(kind: str, value) -> dict:
    """Serialize an algebroid or Poisson structure through the model format
    so the CLI's output matches what a model file would say."""
    if kind == "algebroid":
        shell = Model(charts={"chart": value.base}, algebroids={"out": value})
    else:
        shell = Model(charts={"chart": value.chart}, poisson={"out": value})
    encoded = json.loads(dumps_model(shell))
    body = encoded["algebroids" if kind == "algebroid" else "poisson"]["out"]
    body["chart"] = list(value.base.coords if kind == "algebroid"
                         else value.chart.coords)
    if kind == "algebroid":
        body["provenance"] = value.provenance
    return body


def _result_item(item_id: str, result) -> dict:
    if isinstance(result, GradedTensor):
        payload = _encode_tensor(result)
    else:
        payload = result
    return {"id": item_id, "status": "pass", "result": payload}


# -- subcommand handlers -----------------------------------------------------

def _cmd_validate(model, args):
    items = []
    for name in sorted(model.algebroids):
        items.append({"id": f"algebroid/{name}", "status": "pass"})
    for name in sorted(model.poisson):
        items.append({"id": f"poisson/{name}", "status": "pass"})
    if not items:
        items.append({"id": "model", "status": "pass"})
    return items


def _cmd_bracket(model, args):
    a = _resolve_tensor(model, args.a, args.algebroid)
    b = _resolve_tensor(model, args.b, args.algebroid)
    if args.kind in ("koszul", "extended"):
        if not args.poisson:
            raise UnknownName(
                f"bracket --kind {args.kind} needs --poisson NAME")
        ps = model.poisson_structure(args.poisson)
        op = koszul_schouten if args.kind == "koszul" else extended_bracket
        result = op(ps, a, b)
    elif args.kind == "nr":
        result = nr_bracket(a, b)
    else:
        op = {"schouten": schouten, "sym": sym_schouten,
              "fn": fn_bracket}[args.kind]
        result = op(a.owner, a, b)
    return [_result_item(f"bracket/{args.kind}", result)]


def _cmd_d(model, args):
    mu = _resolve_tensor(model, args.form, args.algebroid)
    return [_result_item("d", differential(mu.owner, mu))]


def _cmd_lie(model, args):
    x = _resolve_tensor(model, args.x, args.algebroid)
    t = _resolve_tensor(model, args.t, args.algebroid)
    return [_result_item("lie", lie_derivative(x.owner, x, t))]


def _cmd_contract(model, args):
    x = _resolve_tensor(model, args.x, args.algebroid)
    t = _resolve_tensor(model, args.t, args.algebroid)
    op = contract_mixed if x.kind is Kind.MIXED else contract
    return [_result_item("contract", op(x, t))]


def _cmd_lift(model, args):
    kind = args.kind
    if kind in ("tangent-algebroid", "cotangent-algebroid", "linear-poisson"):
        if not args.algebroid:
            raise UnknownName(f"lift --kind {kind} needs --algebroid NAME")
        A = model.owner_named(args.algebroid)
        if kind == "tangent-algebroid":
            return [_result_item(f"lift/{kind}",
                                 _encode_structure("algebroid", tangent_lift(A)))]
        if kind == "cotangent-algebroid":
            return [_result_item(f"lift/{kind}",
                                 _encode_structure("algebroid", cotangent_lift(A)))]
        return [_result_item(f"lift/{kind}",
                             _encode_structure("poisson", linear_poisson(A)))]
    if kind == "tangent-poisson":
        if not args.poisson:
            raise UnknownName("lift --kind tangent-poisson needs --poisson NAME")
        ps = model.poisson_structure(args.poisson)
        return [_result_item(f"lift/{kind}",
                             _encode_structure("poisson", tangent_poisson(ps)))]
    if not args.t:
        raise UnknownName(f"lift --kind {kind} needs --t TENSOR")
    t = _resolve_tensor(model, args.t, args.algebroid)
    A = t.owner
    ops = {
        "V": lambda: vertical_lift_V(A, t).tensor,
        "T": lambda: complete_lift_T(A, t).tensor,
        "Vpi": lambda: vertical_pi(A, t),
        "Vtau": lambda: vertical_tau(A, t),
        "G": lambda: cot_complete_G_vec(A, t),
        "J": lambda: J_map(A, t),
        "Gmix": lambda: G_map(A, t),
        "kappa": lambda: canonical_transport("kappa", t),
        "alpha": lambda: canonical_transport("alpha", t),
        "jstar": lambda: Jstar(t),
        "hmap": lambda: H_map(t),
    }
    return [_result_item(f"lift/{kind}", ops[kind]())]


def _cmd_suite(model, args):
    if args.name == "all":
        names = SUITE_NAMES
    elif args.name in SUITE_NAMES:
        names = (args.name,)
    else:
        raise UnknownName(f"no suite named {args.name!r}; choose from "
                          f"all, {', '.join(SUITE_NAMES)}")
    items = []
    for name in names:
        result = run_suite(name, model, seed=args.seed, trials=args.trials)
        result["items"] = sorted(result["items"], key=lambda i: i["id"])
        items.append({"id": f"suite/{name}", "status": result["status"],
                      "result": result})
    return items


def _parse_point(text, chart):
    point = {name: Fraction(0) for name in chart.coords}
    if not text:
        return point
    for piece in text.split(","):
        name, sep, value = piece.partition("=")
        name = name.strip()
        if not sep:
            raise UnknownName(f"--at expects coord=rational, got {piece!r}")
        if name not in point:
            raise UnknownName(f"--at: {name!r} is not a coordinate of the "
                              f"tensor's chart {tuple(chart.coords)}")
        try:
            point[name] = Fraction(value.strip())
        except (ValueError, ZeroDivisionError) as exc:
            raise UnknownName(f"--at: bad rational for {name!r}: {exc}") from exc
    return point


def _cmd_eval(model, args):
    t = _resolve_tensor(model, args.tensor, args.algebroid)
    point = _parse_point(args.at, t.owner.base)
    values = {tensor_key_string(t.kind, key): str(coeff.eval_at(point))
              for key, coeff in sorted(t.terms.items(), key=repr)}
    payload = {
        "kind": t.kind.value,
        "degree": t.degree,
        "point": {name: str(value) for name, value in point.items()},
        "values": values,
        "nonzero": any(v != "0" for v in values.values()),
    }
    return [_result_item("eval", payload)]


_HANDLERS = {
    "validate": _cmd_validate,
    "bracket": _cmd_bracket,
    "d": _cmd_d,
    "lie": _cmd_lie,
    "contract": _cmd_contract,
    "lift": _cmd_lift,
    "suite": _cmd_suite,
    "eval": _cmd_eval,
}


def build_parser() -> argparse.ArgumentParser:
    shared = argparse.ArgumentParser(add_help=False)
    shared.add_argument("--model", metavar="PATH", default=None,
                        help="model JSON file (default: the built-in model)")
    shared.add_argument("--algebroid", metavar="NAME", default=None,
                        help="owner for basis names like e1 / estar3")

    parser = argparse.ArgumentParser(
        prog="algebroids",
        description="exact symbolic calculus on Lie algebroids")
    sub = parser.add_subparsers(dest="command", required=True)

    sub.add_parser("validate", parents=[shared],
                   help="validate every structure in the model")

    bracket = sub.add_parser("bracket", parents=[shared],
                             help="a graded bracket of two named tensors")
    bracket.add_argument("--kind", required=True,
                         choices=["schouten", "sym", "nr", "fn",
                                  "koszul", "extended"])
    bracket.add_argument("--a", required=True, metavar="TENSOR")
    bracket.add_argument("--b", required=True, metavar="TENSOR")
    bracket.add_argument("--poisson", metavar="NAME", default=None,
                         help="Poisson structure for koszul/extended")

    d = sub.add_parser("d", parents=[shared], help="the exterior derivative")
    d.add_argument("--form", required=True, metavar="TENSOR")

    lie = sub.add_parser("lie", parents=[shared], help="a Lie derivative")
    lie.add_argument("--x", required=True, metavar="TENSOR",
                     help="the deriving section")
    lie.add_argument("--t", required=True, metavar="TENSOR")

    contract_p = sub.add_parser("contract", parents=[shared],
                                help="insert a multivector or mixed tensor")
    contract_p.add_argument("--x", required=True, metavar="TENSOR")
    contract_p.add_argument("--t", required=True, metavar="TENSOR")

    lift = sub.add_parser("lift", parents=[shared],
                          help="a lift map or lifted structure")
    lift.add_argument("--kind", required=True,
                      choices=["V", "T", "Vpi", "Vtau", "G", "J", "Gmix",
                               "kappa", "alpha", "jstar", "hmap",
                               "tangent-algebroid", "cotangent-algebroid",
                               "linear-poisson", "tangent-poisson"])
    lift.add_argument("--t", metavar="TENSOR", default=None)
    lift.add_argument("--poisson", metavar="NAME", default=None)

    suite = sub.add_parser("suite", parents=[shared],
                           help="run a named identity suite")
    suite.add_argument("--name", required=True,
                       metavar="|".join(("all", "theorem-N", "eq-N-M")))
    suite.add_argument("--seed", type=int, default=None)
    suite.add_argument("--trials", type=int, default=None)

    eval_p = sub.add_parser("eval", parents=[shared],
                            help="evaluate a tensor at a rational point")
    eval_p.add_argument("--tensor", required=True, metavar="TENSOR")
    eval_p.add_argument("--at", metavar="coord=rational,...", default="",
                        help="unlisted coordinates default to 0")

    return parser


def _summarize(report, stream):
    for item in report["items"]:
        line = f"{item['status']:5s} {item['id']}"
        result = item.get("result")
        if isinstance(result, dict):
            if "pretty" in result:
                line += f": {result['pretty']}"
            elif "items" in result:
                checked = sum(i.get("checked", 0) for i in result["items"])
                line += (f": {len(result['items'])} identities, "
                         f"{checked} instances")
                failing = [i["id"] for i in result["items"]
                           if i["status"] != "pass"]
                if failing:
                    line += f", FAILING: {', '.join(failing)}"
            elif "values" in result:
                line += f": {result['values']}"
        print(line, file=stream)
    counts = [i["status"] for i in report["items"]]
    print(f"{report['status']}: {len(counts)} item(s), "
          f"{counts.count('pass')} pass, {counts.count('fail')} fail "
          f"({report['timing']['seconds']}s)", file=stream)


def main(argv=None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    parser = build_parser()
    args = parser.parse_args(argv)
    started = time.perf_counter()
    try:
        model = _load(args.model)
        items = _HANDLERS[args.command](model, args)
    except AlgebroidError as exc:
        elapsed = round(time.perf_counter() - started, 3)
        report = {
            "command": argv,
            "status": "error",
            "error": {"type": type(exc).__name__, "message": str(exc)},
            "items": [],
            "timing": {"seconds": elapsed},
        }
        witness = getattr(exc, "witness", None)
        if witness:
            report["error"]["witness"] = {k: str(v) for k, v in witness.items()}
        print(json.dumps(report, indent=2, ensure_ascii=False))
        print(f"error {type(exc).__name__}: {exc}", file=sys.stderr)
        return 2
    elapsed = round(time.perf_counter() - started, 3)
    status = "pass" if all(i["status"] == "pass" for i in items) else "fail"
    report = {
        "command": argv,
        "status": status,
        "items": items,
        "timing": {"seconds": elapsed},
    }
    print(json.dumps(report, indent=2, ensure_ascii=False))
    _summarize(report, sys.stderr)
    return 0 if status == "pass" else 1


if __name__ == "__main__":
    sys.exit(main())
