"""Semi-completeness obstruction calculus: one-dimensional germ rules,
time-form residues along invariant lines, the homogeneous-scalar exponent
test, saddle-node normal forms, and recognition of the three distinguished
blow-up models and their collapsed towers.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional

from .algebra import BiPoly, GaussRat, UniPoly, rational_roots
from .blowup import CHART_SY, CHART_XT, blow_up
from .charts import MeroField, make_mero_field
from .invariants import (
    DEFAULT_TRUNCATION,
    CurveWitness,
    EigenData,
    InvariantError,
    LJ,
    RATIONAL_RATIO,
    SADDLE_NODE,
    SADDLE_NODE_CLASS,
    classify_singularity,
    eigen_data,
    index_along,
    is_simple,
    multiplicity_along,
    resonant_node_linearizable,
    straighten,
)

SEMICOMPLETE = "SEMICOMPLETE"
NOT_SEMICOMPLETE = "NOT_SEMICOMPLETE"
CONDITIONAL = "CONDITIONAL"
UNKNOWN = "UNKNOWN"


class RuleError(Exception):
    pass


@dataclass(frozen=True)
class ScVerdict:
    status: str
    rule: str
    reason: str = ""

    def to_json(self):
        return {"status": self.status, "rule": self.rule, "reason": self.reason}


# ---------------------------------------------------------------------------
# Dimension one


@dataclass(frozen=True)
class LaurentGerm:
    """One-variable germ sum c_k x^k with integer exponents of both signs."""

    coeffs: tuple  # sorted (exponent, coefficient) pairs, coefficients nonzero

    @staticmethod
    def of(data) -> "LaurentGerm":
        if isinstance(data, LaurentGerm):
            return data
        if isinstance(data, UniPoly):
            pairs = [(k, c) for k, c in enumerate(data.coeffs) if not c.is_zero()]
            return LaurentGerm(tuple(pairs))
        pairs = sorted(
            (int(k), GaussRat.of(c)) for k, c in dict(data).items()
            if not GaussRat.of(c).is_zero()
        )
        return LaurentGerm(tuple(pairs))

    def order(self) -> Optional[int]:
        return self.coeffs[0][0] if self.coeffs else None


def sc_1d_germ(f) -> ScVerdict:
    """Semi-completeness of f(x) d/dx as a germ at 0.

    Strictly meromorphic germs and zeros of order three or more are
    obstructed; orders zero through two are semi-complete.
    """
    germ = LaurentGerm.of(f)
    order = germ.order()
    if order is None:
        raise RuleError("zero germ")
    if order < 0:
        return ScVerdict(NOT_SEMICOMPLETE, "obsidiota", "strictly meromorphic germ")
    if order >= 3:
        return ScVerdict(NOT_SEMICOMPLETE, "obsidiota", f"zero of order {order} >= 3")
    return ScVerdict(SEMICOMPLETE, "obsidiota", f"order {order} germ")


# ---------------------------------------------------------------------------
# Time-form residues along an invariant line


def _residue_at(num: UniPoly, den: UniPoly, root: GaussRat, mult: int) -> GaussRat:
    """Residue of num/den dx at a root of den of the given multiplicity."""
    shifted_den = den.shift(root)
    unit = UniPoly(shifted_den.coeffs[mult:])
    series = num.shift(root) * unit.series_inverse(max(mult - 1, 0))
    return series[mult - 1]


def timeform_residues(germ: MeroField, invariant_line: CurveWitness):
    """Residues of dT = dx/f(x) at every zero and pole of the restriction f
    of the field to the straightened invariant line.

    Returns (points, flagged_subsets): points is a list of (location,
    residue); flagged_subsets lists every nonempty subset of point indices
    whose residues sum to zero, an advisory loop obstruction.
    """
    st = straighten(germ, invariant_line)
    num = st.numerator.eval_y0() * st.core.p_comp.eval_y0()
    den = st.denominator.eval_y0()
    if num.is_zero():
        raise RuleError("field restricts to zero along the line")
    # dT = den/num dx: poles at roots of num, zeros at roots of den
    num_roots, num_residual = rational_roots(num)
    den_roots, den_residual = rational_roots(den)
    if num_residual.degree() >= 1 or den_residual.degree() >= 1:
        raise RuleError("non-rational pole of the restriction")
    points = []
    for root, mult in num_roots:
        points.append((root, _residue_at(den, num, root, mult)))
    for root, _mult in den_roots:
        if all(root != r for r, _ in num_roots):
            points.append((root, GaussRat(0)))
    points.sort(key=lambda p: p[0].sort_key())
    flagged = []
    n = len(points)
    if n <= 16:
        for mask in range(1, 1 << n):
            total = GaussRat(0)
            for i in range(n):
                if mask >> i & 1:
                    total = total + points[i][1]
            if total.is_zero():
                flagged.append(tuple(i for i in range(n) if mask >> i & 1))
    return points, flagged


# ---------------------------------------------------------------------------
# Exponent test for homogeneous scalars against x d/dx - (n/m) y d/dy


def _strip_monomial(p: BiPoly):
    i0, j0 = p.ord_x(), p.ord_y()
    return (i0, j0), BiPoly({(i - i0, j - j0): c for (i, j), c in p.terms.items()})


def check_le31(p_num: BiPoly, p_den: BiPoly, m: int, n: int) -> ScVerdict:
    """Semi-completeness obstruction for P * (m x d/dx - n y d/dy) with
    P = p_num/p_den a homogeneous rational scalar and gcd(m, n) = 1.

    Compatible exactly when P is a monomial x^c y^d with m c - n d in
    {-1, 0, 1}, or m = n = 1 and P = (x - y)(xy)^a.
    """
    if p_num.is_zero() or p_den.is_zero():
        raise RuleError("zero scalar")
    for p in (p_num, p_den):
        degs = {i + j for i, j in p.terms}
        if len(degs) != 1:
            raise RuleError("scalar is not homogeneous")
    if m <= 0 or n <= 0:
        raise RuleError("m, n must be positive")
    if p_num.is_monomial() and p_den.is_monomial():
        (a, b), _ = _strip_monomial(p_num)
        (a2, b2), _ = _strip_monomial(p_den)
        c, d = a - a2, b - b2
        if abs(m * c - n * d) <= 1:
            return ScVerdict(UNKNOWN, "le3.1", f"monomial exponents ({c}, {d})")
        return ScVerdict(
            NOT_SEMICOMPLETE, "le3.1", f"m*c - n*d = {m * c - n * d} outside {{-1,0,1}}"
        )
    if m == 1 and n == 1:
        (a, b), rest = _strip_monomial(p_num)
        (a2, b2), rest_den = _strip_monomial(p_den)
        x, y = BiPoly.var_x(), BiPoly.var_y()
        lead = rest.lead_coeff()
        if (
            rest_den.is_constant()
            and rest * lead.inv() == (x - y)
            and a - a2 == b - b2
        ):
            return ScVerdict(UNKNOWN, "le3.1", "scalar (x-y)(xy)^a with m = n = 1")
    return ScVerdict(NOT_SEMICOMPLETE, "le3.1", "scalar not of an admissible shape")


def le32_obstruction(germ: MeroField) -> ScVerdict:
    """Positive irrational eigenvalue ratio with a vanishing or polar scalar
    at the origin cannot be semi-complete (the ratio would have to be
    rational)."""
    z0 = GaussRat(0)
    scalar_degenerate = germ.numerator.eval(z0, z0).is_zero() or (
        germ.denominator.eval(z0, z0).is_zero()
    )
    if not scalar_degenerate:
        return ScVerdict(UNKNOWN, "le3.2", "scalar is a unit at the origin")
    eig = eigen_data(germ)
    if eig.ratio_class != "IRRATIONAL_OR_NONREAL":
        return ScVerdict(UNKNOWN, "le3.2", "ratio not irrational")
    if eig.det.is_zero():
        return ScVerdict(UNKNOWN, "le3.2", "not two nonzero eigenvalues")
    s = eig.trace * eig.trace / eig.det - 2
    if s.is_rational() and s.re > 2:
        return ScVerdict(
            NOT_SEMICOMPLETE, "le3.2", "positive irrational eigenvalue ratio"
        )
    return ScVerdict(UNKNOWN, "le3.2", "ratio not positive real")


def le33_filter(germ: MeroField, truncation: int = DEFAULT_TRUNCATION) -> ScVerdict:
    """Filter for resonant-node germs with degenerate scalar: the resonance
    must be 1 (a Jordan block) and the pole exactly of order one on the
    unique separatrix."""
    z0 = GaussRat(0)
    scalar_degenerate = germ.numerator.eval(z0, z0).is_zero() or (
        germ.denominator.eval(z0, z0).is_zero()
    )
    if not scalar_degenerate:
        return ScVerdict(UNKNOWN, "le3.3", "scalar is a unit at the origin")
    eig = eigen_data(germ)
    kind = classify_singularity(germ)
    if kind == LJ:
        n = 1
    elif (
        eig.ratio_class == RATIONAL_RATIO
        and eig.ratio is not None
        and eig.ratio.denominator == 1
        and eig.ratio >= 2
        and not resonant_node_linearizable(germ, truncation)
    ):
        n = int(eig.ratio)
    else:
        return ScVerdict(UNKNOWN, "le3.3", "not a non-linearizable resonant node")
    if n != 1:
        return ScVerdict(NOT_SEMICOMPLETE, "le3.3", f"resonance {n} > 1")
    sep = _unique_separatrix_direction(germ)
    if sep is None:
        return ScVerdict(UNKNOWN, "le3.3", "separatrix direction not rational")
    st = straighten(germ, sep)
    k = -(st.numerator.ord_y() - st.denominator.ord_y())
    if k != 1:
        return ScVerdict(NOT_SEMICOMPLETE, "le3.3", f"pole order {k} != 1 on the separatrix")
    return ScVerdict(UNKNOWN, "le3.3", "Jordan block with order-one pole")


def _unique_separatrix_direction(germ: MeroField) -> Optional[CurveWitness]:
    """Eigendirection line of the repeated eigenvalue of an LJ-type germ."""
    (a, b), (c, d) = germ.core.linear_matrix()
    lam = (a + d) / 2
    # kernel of M - lam: direction (e1, e2); line through origin along it
    if not b.is_zero():
        e1, e2 = b, lam - a
    elif not c.is_zero():
        e1, e2 = lam - d, c
    else:
        return None
    # line {e2 x - e1 y = 0}
    return CurveWitness.line(e2, -e1)


# ---------------------------------------------------------------------------
# Saddle-node normal forms

FORM1 = "FORM1"
FORM2 = "FORM2"
FORM3_CONDITIONAL = "FORM3_CONDITIONAL"
NONE_FORM = "NONE"


@dataclass(frozen=True)
class SaddleNodeData:
    p: int
    strong_manifold: Optional[CurveWitness]
    pole_order_on_strong: Optional[int]
    selano_form: str
    reason: str = ""

    def verdict(self) -> ScVerdict:
        if self.selano_form == FORM1:
            return ScVerdict(SEMICOMPLETE, "selano.1", "holomorphic saddle-node form")
        if self.selano_form == FORM2:
            return ScVerdict(SEMICOMPLETE, "selano.2", "pole order equals p")
        if self.selano_form == FORM3_CONDITIONAL:
            return ScVerdict(
                CONDITIONAL, "selano.3", "requires trivial monodromy (not decided)"
            )
        return ScVerdict(NOT_SEMICOMPLETE, "selano", self.reason)


def _strong_manifold_witness(germ: MeroField, truncation: int):
    """Witness for the strong invariant manifold, exact when polynomial.

    Works in coordinates diagonalizing the linear part; returns (witness in
    the original coordinates or None, diagnostic).  Only polynomial graphs
    (verified exactly) are accepted; anything else reports failure.
    """
    from .invariants import _diagonalize_core  # shared exact diagonalization

    try:
        diag, l1, l2 = _diagonalize_core(germ)
    except InvariantError:
        return None, "linear part not diagonalizable over Q(i)"
    if l2.is_zero():
        strong_first = True
        lam = l1
    elif l1.is_zero():
        strong_first = False
        lam = l2
    else:
        return None, "not a saddle-node"
    p = diag.core.p_comp if strong_first else diag.core.q_comp.swap()
    q = diag.core.q_comp if strong_first else diag.core.p_comp.swap()
    # solve q(x, phi) = phi'(x) p(x, phi) for phi = O(x^2), coefficient by
    # coefficient; the k-th step divides by -k*lam != 0
    phi = UniPoly()
    for k in range(2, truncation + 1):
        phi_b = BiPoly.from_uni(phi, "x")
        resid = q.subst(BiPoly.var_x(), phi_b) - BiPoly.from_uni(
            phi.derivative(), "x"
        ) * p.subst(BiPoly.var_x(), phi_b)
        coeff = resid.eval_y0()[k]
        if coeff.is_zero():
            continue
        ck = coeff / (GaussRat(k) * lam)
        phi = phi + UniPoly.x_power(k, ck)
    phi_b = BiPoly.from_uni(phi, "x")
    resid = q.subst(BiPoly.var_x(), phi_b) - BiPoly.from_uni(
        phi.derivative(), "x"
    ) * p.subst(BiPoly.var_x(), phi_b)
    if not resid.is_zero():
        return None, "increase truncation"
    return (diag, strong_first, phi), "ok"


def classify_saddle_node(germ: MeroField, truncation: int = DEFAULT_TRUNCATION) -> SaddleNodeData:
    """Match a saddle-node germ against the three semi-complete normal forms.

    p comes from the intersection number of the core components minus one;
    k is the pole order along the strong invariant manifold.  Forms:
    holomorphic with p = 1; pole order k = p; k = p - 1 with monodromy left
    undecided.  A pole or zero divisor not contained in the strong manifold
    disqualifies the germ.
    """
    from .invariants import milnor_number

    eig = eigen_data(germ)
    if eig.ratio_class != SADDLE_NODE_CLASS:
        raise RuleError("not a saddle-node")
    mu = milnor_number(germ)
    if mu is None:
        raise RuleError("core components share a branch")
    p = mu - 1
    z0 = GaussRat(0)
    holo = not germ.numerator.eval(z0, z0).is_zero() and not (
        germ.denominator.eval(z0, z0).is_zero()
    )
    if holo:
        if p == 1:
            return SaddleNodeData(p, None, 0, FORM1)
        return SaddleNodeData(p, None, 0, NONE_FORM, f"holomorphic but p = {p} != 1")
    if germ.numerator.eval(z0, z0).is_zero():
        return SaddleNodeData(
            p, None, None, NONE_FORM, "scalar vanishes at the origin (no inversible factor)"
        )
    data, diag_msg = _strong_manifold_witness(germ, truncation)
    if data is None:
        if diag_msg == "increase truncation":
            raise RuleError("increase truncation")
        return SaddleNodeData(p, None, None, NONE_FORM, diag_msg)
    diag, strong_first, phi = data
    work = diag
    if not strong_first:
        work = make_mero_field(
            diag.core.q_comp.swap(),
            diag.core.p_comp.swap(),
            diag.numerator.swap(),
            diag.denominator.swap(),
            diag.chart,
        )
    witness = CurveWitness("graph_y", phi)
    st = straighten(work, witness)
    oy_num, oy_den = st.numerator.ord_y(), st.denominator.ord_y()
    k = oy_den - oy_num
    # every den factor must sit on the strong manifold
    stripped = BiPoly(
        {(i, j - oy_den): c for (i, j), c in st.denominator.terms.items()}
    )
    if not stripped.is_constant():
        return SaddleNodeData(
            p,
            witness,
            k,
            NONE_FORM,
            "pole divisor must be contained in the strong invariant manifold",
        )
    if k == p:
        return SaddleNodeData(p, witness, k, FORM2)
    if k == p - 1:
        return SaddleNodeData(p, witness, k, FORM3_CONDITIONAL)
    return SaddleNodeData(p, witness, k, NONE_FORM, f"pole order {k} not in {{p, p-1}}")


# ---------------------------------------------------------------------------
# Model recognition

Z_1_11 = "Z_1_11"
Z_0_12 = "Z_0_12"
Z_1_00 = "Z_1_00"
NONE_TAG = "NONE"


class ModelPreconditionError(Exception):
    pass


@dataclass(frozen=True)
class ModelTag:
    tag: str
    tower_level: int = 0  # 0 for the base models
    evidence: tuple = ()

    def rule_id(self) -> str:
        if self.tag == NONE_TAG:
            return "none"
        if self.tower_level:
            return f"tower.{self.tower_level}"
        return "prop4.2." + {Z_1_11: "Z111", Z_0_12: "Z012", Z_1_00: "Z100"}[self.tag]

    def to_json(self):
        return {
            "tag": self.tag,
            "tower_level": self.tower_level,
            "rule": self.rule_id(),
            "evidence": [dict(e) for e in self.evidence],
        }


def _point_record(chart: str, loc, local: MeroField):
    kind = classify_singularity(local)
    divisor_witness = (
        CurveWitness.y_axis() if chart == CHART_XT else CurveWitness.x_axis()
    )
    mult = multiplicity_along(local, divisor_witness)
    ind = index_along(local, divisor_witness)
    eig = eigen_data(local)
    # order along the transverse coordinate axis, when that axis is invariant
    if chart == CHART_XT:
        trans_invariant = local.core.q_comp.eval_y0().is_zero()
        trans_order = local.order_along("y") if trans_invariant else None
        stripped_den = _strip_monomial(local.denominator)[1]
        trans_clean = stripped_den.is_constant()
    else:
        trans_invariant = local.core.p_comp.eval_x0().is_zero()
        trans_order = local.order_along("x") if trans_invariant else None
        stripped_den = _strip_monomial(local.denominator)[1]
        trans_clean = stripped_den.is_constant()
    return {
        "chart": chart,
        "loc": loc,
        "kind": kind,
        "eigen": eig,
        "mult_along_divisor": mult,
        "index_along_divisor": ind,
        "transverse_order": trans_order,
        "den_monomial": trans_clean,
        "local": local,
    }


def _evidence(records, blowup):
    out = []
    for r in records:
        out.append(
            (
                ("chart", r["chart"]),
                ("location", (str(r["loc"][0]), str(r["loc"][1]))),
                ("kind", r["kind"]),
                ("ratio", str(r["eigen"].ratio) if r["eigen"].ratio is not None else None),
                ("index_along_divisor", str(r["index_along_divisor"])),
                ("mult_along_divisor", r["mult_along_divisor"]),
                ("transverse_order", r["transverse_order"]),
                ("divisor_order", blowup.exceptional_order),
            )
        )
    return tuple(out)


def recognize_model(germ: MeroField, _depth: int = 0) -> ModelTag:
    """Match the germ's blow-up roster against the three distinguished
    models, recursing through collapsed towers.

    Preconditions: monomial pole divisor (coordinate axes), non-dicritical,
    both eigenvalues of the linear part zero.  A germ with a nonzero
    eigenvalue is not a candidate and yields NONE; a dicritical germ or a
    non-axis pole raises, naming the failed assumption.
    """
    if _depth > 16:
        raise ModelPreconditionError("tower recursion too deep")
    _mon, rest = _strip_monomial(germ.denominator)
    if not rest.is_constant():
        raise ModelPreconditionError(
            "assumption 1: pole divisor is not supported on the coordinate axes"
        )
    kind = classify_singularity(germ)
    if kind == "REGULAR":
        return ModelTag(NONE_TAG)
    eig = eigen_data(germ)
    if eig.ratio_class != "BOTH_ZERO":
        return ModelTag(NONE_TAG)  # assumption 4: both eigenvalues zero
    if germ.core.tangent_pairing().is_zero():
        raise ModelPreconditionError("assumption 6: germ is dicritical")
    result = blow_up(germ)
    if result.unresolved:
        raise ModelPreconditionError(
            "assumption 5: non-rational singularity on the divisor"
        )
    records = []
    for chart, loc, _eig in result.divisor_singularities:
        m = result.chart_xt if chart == CHART_XT else result.chart_sy
        records.append(_point_record(chart, loc, m.shift(loc[0], loc[1])))
    simple = [r for r in records if r["kind"] in ("SIMPLE_HYPERBOLIC", "SADDLE_NODE", "LJ")]
    non_simple = [r for r in records if r not in simple]
    div_order = result.exceptional_order
    evidence = _evidence(records, result)

    if not non_simple:
        tag = _match_base(records, div_order, germ)
        return ModelTag(tag, 0, evidence)

    if len(non_simple) != 1:
        raise ModelPreconditionError(
            "assumption 5: more than one non-simple singularity after one blow-up"
        )
    inner_rec = non_simple[0]
    inner = recognize_model(inner_rec["local"], _depth + 1)
    if inner.tag == NONE_TAG:
        return ModelTag(NONE_TAG, 0, evidence)
    others = [r for r in records if r is not inner_rec]
    if inner.tag == Z_0_12 and not others:
        # single-point collapse over a strong separatrix of index -1
        if inner_rec["index_along_divisor"] == GaussRat(-1) and div_order <= -1:
            return ModelTag(Z_0_12, inner.tower_level + 1, evidence)
        return ModelTag(NONE_TAG, 0, evidence)
    if len(others) != 1:
        return ModelTag(NONE_TAG, 0, evidence)
    linear = others[0]
    linear_ok = (
        linear["kind"] == "SIMPLE_HYPERBOLIC"
        and linear["eigen"].ratio == -1
        and linear["index_along_divisor"] == GaussRat(-1)
    )
    index_zero = inner_rec["index_along_divisor"] == GaussRat(0)
    if not (linear_ok and index_zero):
        return ModelTag(NONE_TAG, 0, evidence)
    if inner.tag == Z_1_11 and div_order == -1 and linear["transverse_order"] == -1:
        return ModelTag(Z_1_11, inner.tower_level + 1, evidence)
    if inner.tag in (Z_1_00, Z_0_12) and div_order <= -1 and (
        linear["transverse_order"] == div_order - 1
    ):
        return ModelTag(inner.tag, inner.tower_level + 1, evidence)
    return ModelTag(NONE_TAG, 0, evidence)


def _match_base(records, div_order, germ) -> str:
    if len(records) != 3 or germ.core.order() != 2:
        return NONE_TAG
    kinds = sorted(r["kind"] for r in records)
    ljs = [r for r in records if r["kind"] == LJ]
    sns = [r for r in records if r["kind"] == SADDLE_NODE]
    hyps = [r for r in records if r["kind"] == "SIMPLE_HYPERBOLIC"]
    if len(ljs) == 1 and len(hyps) == 2 and not sns:
        if div_order != -1:
            return NONE_TAG
        if all(
            h["eigen"].ratio == -1 and h["transverse_order"] == -1 and h["den_monomial"]
            for h in hyps
        ):
            return Z_1_11
        return NONE_TAG
    # saddle-nodes must carry their strong manifold inside the divisor
    strong_ok = all(r["mult_along_divisor"] == 1 for r in sns)
    if len(sns) == 1 and len(hyps) == 2 and strong_ok:
        orders = {h["transverse_order"] for h in hyps}
        if len(orders) != 1:
            return NONE_TAG
        d = -orders.pop()
        if d >= 1 and div_order == -(2 * d - 1) and all(
            h["eigen"].ratio == -2 for h in hyps
        ):
            return Z_0_12
        return NONE_TAG
    if len(sns) == 2 and len(hyps) == 1 and strong_ok:
        h = hyps[0]
        if h["eigen"].ratio != -1 or h["transverse_order"] is None:
            return NONE_TAG
        d = -h["transverse_order"]
        if d >= 1 and div_order == -(d - 1):
            return Z_1_00
        return NONE_TAG
    return NONE_TAG
