"""Differential operators and graded brackets over an algebroid.

Everything here is generated by the structure data of the owning algebroid:

* the exterior differential acts on generators by
  ``d f = sum_i (anchor e_i)(f) e*_i`` and
  ``d e*_k = -sum_{i<j} c_ij^k e*_i∧e*_j``,
  extended as a graded derivation;
* Lie differentials are graded commutators of contraction with d — with a
  minus sign for multivector actors and a plus sign for vector-valued forms
  (the two conventions are deliberately kept distinct, since the simple-
  tensor expansion of the mixed one depends on the plus);
* the generalized Schouten bracket is defined by bilinear recursion from the
  section bracket and the anchor, expanding decomposables factor against
  factor with alternating signs; its symmetric sibling does the same without
  signs on the symmetric algebra;
* the Nijenhuis–Richardson bracket is the purely algebraic commutator of
  insertions of vector-valued forms (no algebroid structure involved), and
  the Frölicher–Nijenhuis bracket combines it with Lie differentials on
  simple split terms.

Degrees are graded with a shift for the Schouten and N-R brackets (a
degree-a multivector sits in graded slot a-1), and unshifted (raw form
degree) for the F-N bracket; antisymmetry and Jacobi tests must use the
matching convention.
"""

from __future__ import annotations

from typing import List, Tuple

from .algebroid import Algebroid, anchor_derivative, section_bracket
from .errors import ChartMismatch, KindMismatch
from .ring import Poly
from .tensor import (
    GradedTensor,
    Kind,
    as_sym,
    contract,
    contract_mixed,
    mixed_from_vector,
    sym_product,
    vector_from_mixed,
    wedge,
)


def _require_owner(algebroid: Algebroid, *tensors: GradedTensor) -> None:
    for t in tensors:
        if t.owner != algebroid:
            raise ChartMismatch("tensor does not live over the given algebroid")


# -- exterior differential ------------------------------------------------------


def _d_function(algebroid: Algebroid, f: Poly) -> GradedTensor:
    terms = {}
    for i in range(algebroid.rank):
        df = anchor_derivative(algebroid, i, f)
        if not df.is_zero():
            terms[(i,)] = df
    return GradedTensor(algebroid, Kind.FORM, 1, terms)


def _d_dual_generators(algebroid: Algebroid) -> List[GradedTensor]:
    """d of each dual basis form: d e*_k = -sum_{i<j} c_ij^k e*_i∧e*_j."""
    tables: List[dict] = [{} for _ in range(algebroid.rank)]
    for (i, j), entries in algebroid.structure.items():
        for k, coeff in entries.items():
            tables[k][(i, j)] = -coeff
    return [GradedTensor(algebroid, Kind.FORM, 2, t) for t in tables]


def differential(algebroid: Algebroid, mu: GradedTensor) -> GradedTensor:
    """The exterior differential of a form (degree-0 multivectors count as
    forms of degree 0).  Squares to zero and is a graded derivation."""
    _require_owner(algebroid, mu)
    if mu.kind is Kind.MV and mu.degree == 0:
        return _d_function(algebroid, mu.as_function())
    if mu.kind is not Kind.FORM:
        raise KindMismatch(f"cannot differentiate {mu.describe()}")
    if mu.degree == 0:
        return _d_function(algebroid, mu.as_function())
    duals = _d_dual_generators(algebroid)
    out = GradedTensor.zero(algebroid, Kind.FORM, mu.degree + 1)
    for key, coeff in mu.terms.items():
        basis_form = GradedTensor.basis(algebroid, Kind.FORM, key)
        out = out + wedge(_d_function(algebroid, coeff), basis_form)
        for r, k in enumerate(key):
            dek = duals[k]
            if dek.is_zero():
                continue
            prefix = GradedTensor.basis(algebroid, Kind.FORM, key[:r])
            suffix = GradedTensor.basis(algebroid, Kind.FORM, key[r + 1:])
            piece = wedge(prefix, wedge(dek, suffix)) * coeff
            out = out + (piece if r % 2 == 0 else -piece)
    return out


# -- Lie differentials ----------------------------------------------------------


def lie_derivative(algebroid: Algebroid, actor: GradedTensor,
                   mu: GradedTensor) -> GradedTensor:
    """Lie differential of a form along a multivector or vector-valued form.

    For a degree-k multivector X:      L_X = i_X∘d − (−1)^k d∘i_X.
    For a mixed tensor K of form-degree k:  L_K = i_K∘d + (−1)^k d∘i_K.

    The degree-1 multivector case is the classical Cartan formula; the two
    sign conventions agree there.
    """
    _require_owner(algebroid, actor, mu)
    if mu.kind is Kind.MV and mu.degree == 0:
        mu = GradedTensor(algebroid, Kind.FORM, 0, dict(mu.terms))
    if mu.kind is not Kind.FORM:
        raise KindMismatch(f"Lie differentials act on forms, got {mu.describe()}")
    sign = -1 if actor.degree % 2 else 1
    if actor.kind is Kind.MV:
        first = contract(actor, differential(algebroid, mu))
        second = differential(algebroid, contract(actor, mu))
        return first - second * sign
    if actor.kind is Kind.MIXED:
        first = contract_mixed(actor, differential(algebroid, mu))
        second = differential(algebroid, contract_mixed(actor, mu))
        return first + second * sign
    raise KindMismatch(f"cannot take a Lie differential along {actor.describe()}")


# -- generalized Schouten bracket -------------------------------------------------


def _as_multivector(t: GradedTensor) -> GradedTensor:
    if t.kind is Kind.MV:
        return t
    if t.kind is Kind.MIXED and t.degree == 0:
        return vector_from_mixed(t)
    raise KindMismatch(f"expected a multivector, got {t.describe()}")


def _term_factors(algebroid: Algebroid, key: Tuple[int, ...],
                  coeff: Poly) -> List[GradedTensor]:
    """Split a term f·e_{k_1}∧…∧e_{k_p} into section factors, absorbing the
    coefficient into the first factor."""
    factors = [algebroid.e(key[0]) * coeff]
    factors.extend(algebroid.e(k) for k in key[1:])
    return factors


def _wedge_all(algebroid: Algebroid, factors: List[GradedTensor]) -> GradedTensor:
    out = GradedTensor.function(algebroid, 1)
    for f in factors:
        out = wedge(out, f)
    return out


def _schouten_with_function(algebroid: Algebroid, x: GradedTensor,
                            g: Poly) -> GradedTensor:
    """[X, g] for X of degree p ≥ 1:
    sum_i (−1)^{p−i} (anchor X_i)(g) · X_1∧…X̂_i…∧X_p (1-based i)."""
    p = x.degree
    out = GradedTensor.zero(algebroid, Kind.MV, p - 1)
    for key, coeff in x.terms.items():
        for r, k in enumerate(key):
            dg = anchor_derivative(algebroid, k, g)
            if dg.is_zero():
                continue
            rest = key[:r] + key[r + 1:]
            sign = 1 if (p - 1 - r) % 2 == 0 else -1
            out = out + GradedTensor(algebroid, Kind.MV, p - 1,
                                     {rest: coeff * dg * sign})
    return out


def schouten(algebroid: Algebroid, x: GradedTensor, y: GradedTensor) -> GradedTensor:
    """The generalized Schouten bracket on multivectors.

    Base cases: the section bracket on degree 1, the anchor action
    [X, f] = (anchor X)(f) against degree 0, zero on two functions.  Higher
    degrees expand factor against factor:

        [X_1∧…∧X_p, Y_1∧…∧Y_q] =
            sum_{i,j} (−1)^{i+j} [X_i, Y_j] ∧ X∖i ∧ Y∖j.

    Antisymmetry and Jacobi hold in the shifted grading (degree a sits in
    slot a−1).
    """
    _require_owner(algebroid, x, y)
    x, y = _as_multivector(x), _as_multivector(y)
    a, b = x.degree, y.degree
    if a == 0 and b == 0:
        return GradedTensor.zero(algebroid, Kind.MV, 0)
    if b == 0:
        return _schouten_with_function(algebroid, x, y.as_function())
    if a == 0:
        flipped = _schouten_with_function(algebroid, y, x.as_function())
        return flipped if b % 2 == 0 else -flipped
    out = GradedTensor.zero(algebroid, Kind.MV, a + b - 1)
    for kx, cx in x.terms.items():
        fx = _term_factors(algebroid, kx, cx)
        for ky, cy in y.terms.items():
            fy = _term_factors(algebroid, ky, cy)
            for i in range(a):
                rest_x = fx[:i] + fx[i + 1:]
                for j in range(b):
                    rest_y = fy[:j] + fy[j + 1:]
                    head = section_bracket(algebroid, fx[i], fy[j])
                    if head.is_zero():
                        continue
                    piece = _wedge_all(algebroid, [head] + rest_x + rest_y)
                    out = out + (piece if (i + j) % 2 == 0 else -piece)
    return out


# -- symmetric Schouten bracket ----------------------------------------------------


def _sym_factors(algebroid: Algebroid, key: Tuple[int, ...],
                 coeff: Poly) -> List[GradedTensor]:
    factors = [algebroid.e(key[0]) * coeff]
    factors.extend(algebroid.e(k) for k in key[1:])
    return factors


def _sym_all(algebroid: Algebroid, factors: List[GradedTensor]) -> GradedTensor:
    out = as_sym(GradedTensor.function(algebroid, 1))
    for f in factors:
        out = sym_product(out, f)
    return out


def sym_schouten(algebroid: Algebroid, x: GradedTensor, y: GradedTensor) -> GradedTensor:
    """The symmetric Schouten bracket: the same factor-against-factor
    expansion as the alternating one but on the symmetric algebra and with
    no signs.  An (ungraded) Lie bracket and a biderivation — the abstract
    Poisson algebra structure on symmetric multivectors."""
    _require_owner(algebroid, x, y)
    x, y = as_sym(x), as_sym(y)
    a, b = x.degree, y.degree
    if a == 0 and b == 0:
        return GradedTensor.zero(algebroid, Kind.SYM, 0)
    if b == 0:
        g = y.terms.get((), algebroid.base.zero())
        out = GradedTensor.zero(algebroid, Kind.SYM, a - 1)
        for key, coeff in x.terms.items():
            for r, k in enumerate(key):
                dg = anchor_derivative(algebroid, k, g)
                if dg.is_zero():
                    continue
                rest = key[:r] + key[r + 1:]
                out = out + GradedTensor(algebroid, Kind.SYM, a - 1,
                                         {rest: coeff * dg})
        return out
    if a == 0:
        return -sym_schouten(algebroid, y, x)
    out = GradedTensor.zero(algebroid, Kind.SYM, a + b - 1)
    for kx, cx in x.terms.items():
        fx = _sym_factors(algebroid, kx, cx)
        for ky, cy in y.terms.items():
            fy = _sym_factors(algebroid, ky, cy)
            for i in range(a):
                rest_x = fx[:i] + fx[i + 1:]
                for j in range(b):
                    rest_y = fy[:j] + fy[j + 1:]
                    head = section_bracket(algebroid, fx[i], fy[j])
                    if head.is_zero():
                        continue
                    out = out + _sym_all(algebroid, [as_sym(head)] + rest_x + rest_y)
    return out


# -- Nijenhuis–Richardson bracket ---------------------------------------------------


def _as_mixed(t: GradedTensor) -> GradedTensor:
    if t.kind is Kind.MIXED:
        return t
    if t.kind is Kind.MV and t.degree == 1:
        return mixed_from_vector(t)
    raise KindMismatch(f"expected a vector-valued form, got {t.describe()}")


def nr_bracket(k: GradedTensor, l: GradedTensor) -> GradedTensor:
    """The Nijenhuis–Richardson bracket of vector-valued forms:

        [K, L] = i_K L − (−1)^{(a−1)(b−1)} i_L K

    with a, b the form degrees.  Purely algebraic — it never touches the
    anchor or the structure functions."""
    k, l = _as_mixed(k), _as_mixed(l)
    if k.owner != l.owner:
        raise ChartMismatch("bracket operands live over different owners")
    first = contract_mixed(k, l)
    second = contract_mixed(l, k)
    sign = -1 if ((k.degree - 1) * (l.degree - 1)) % 2 else 1
    return first - second * sign


# -- Frölicher–Nijenhuis bracket -----------------------------------------------------


def _tensor_form_section(theta: GradedTensor, z: GradedTensor) -> GradedTensor:
    """theta ⊗ Z for a form theta and a section Z, as a mixed tensor."""
    owner = theta.owner
    out = GradedTensor.zero(owner, Kind.MIXED, theta.degree)
    for fkey, c in theta.terms.items():
        for (j,), g in z.terms.items():
            out = out + GradedTensor(owner, Kind.MIXED, theta.degree,
                                     {(fkey, j): c * g})
    return out


def fn_bracket_simple(algebroid: Algebroid, mu: GradedTensor, x: GradedTensor,
                      nu: GradedTensor, y: GradedTensor) -> GradedTensor:
    """The Frölicher–Nijenhuis bracket on a pair of simple tensors
    mu⊗X, nu⊗Y (mu, nu forms; X, Y sections):

        mu∧nu⊗[X,Y] + mu∧(L_X nu)⊗Y − (L_Y mu)∧nu⊗X
        + (−1)^{deg mu} (d mu∧i_X nu⊗Y + i_Y mu∧d nu⊗X).

    The total is C∞-linear in each simple tensor even though individual
    terms are not; the well-definedness test exercises exactly that.
    """
    _require_owner(algebroid, mu, x, nu, y)
    sign = -1 if mu.degree % 2 else 1
    out = _tensor_form_section(wedge(mu, nu), section_bracket(algebroid, x, y))
    out = out + _tensor_form_section(
        wedge(mu, lie_derivative(algebroid, x, nu)), y)
    out = out - _tensor_form_section(
        wedge(lie_derivative(algebroid, y, mu), nu), x)
    out = out + _tensor_form_section(
        wedge(differential(algebroid, mu), contract(x, nu)), y) * sign
    out = out + _tensor_form_section(
        wedge(contract(y, mu), differential(algebroid, nu)), x) * sign
    return out


def fn_bracket(algebroid: Algebroid, k: GradedTensor, l: GradedTensor) -> GradedTensor:
    """The Frölicher–Nijenhuis bracket, extended bilinearly over the simple
    split of each term.  Graded by raw form degree (no shift): antisymmetry
    and Jacobi use (−1)^{ab}, and L_[K,L] = L_K∘L_L − (−1)^{ab} L_L∘L_K."""
    _require_owner(algebroid, k, l)
    k, l = _as_mixed(k), _as_mixed(l)
    out = GradedTensor.zero(algebroid, Kind.MIXED, k.degree + l.degree)
    for (fk, i), ck in k.terms.items():
        mu = GradedTensor(algebroid, Kind.FORM, len(fk), {fk: ck})
        x = algebroid.e(i)
        for (fl, j), cl in l.terms.items():
            nu = GradedTensor(algebroid, Kind.FORM, len(fl), {fl: cl})
            y = algebroid.e(j)
            out = out + fn_bracket_simple(algebroid, mu, x, nu, y)
    return out
