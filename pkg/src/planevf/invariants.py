"""Local numerics at a singular germ: eigenvalue data, multiplicity and index
along a separatrix, asymptotic order, Milnor number, and the conservation
laws that tie the invariants of a blow-up to those of the original germ.

Conventions, fixed once and used everywhere: for a saturated core
P d/dx + Q d/dy with invariant curve straightened to {y = 0},

    multiplicity = ord of x -> P(x, 0) at 0,
    index        = residue at 0 of d/dy (Q/P)(x, 0) dx,

so a linear field x d/dx + c y d/dy has index c along {y = 0}, and the
two blow-up points of a saddle each carry index -1/2 along the divisor.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .algebra import (
    AlgebraError,
    BiPoly,
    GaussRat,
    UniPoly,
    bi_resultant_y,
    gauss_sqrt,
)
from .charts import MeroField, make_mero_field
from .fields import PolyVectorField

DEFAULT_TRUNCATION = 32


class InvariantError(Exception):
    pass


# ---------------------------------------------------------------------------
# Eigenvalue data

BOTH_ZERO = "BOTH_ZERO"
SADDLE_NODE_CLASS = "SADDLE_NODE"
RATIONAL_RATIO = "RATIONAL_RATIO"
IRRATIONAL_OR_NONREAL = "IRRATIONAL_OR_NONREAL"


@dataclass(frozen=True)
class EigenData:
    trace: GaussRat
    det: GaussRat
    jordan_nontrivial: bool
    ratio_class: str
    ratio: Optional[Fraction] = None  # reduced p/q with |p| >= q for RATIONAL_RATIO

    def ratio_pair(self):
        """(p, q) with ratio = p/q, q > 0, gcd(|p|, q) = 1."""
        if self.ratio is None:
            raise InvariantError("no rational ratio available")
        return self.ratio.numerator, self.ratio.denominator


def eigen_data(germ: MeroField) -> EigenData:
    """Eigenvalue classification of the core's linear part at the origin."""
    core = germ.core
    if not core.p_comp.eval(GaussRat(0), GaussRat(0)).is_zero() or not (
        core.q_comp.eval(GaussRat(0), GaussRat(0)).is_zero()
    ):
        raise InvariantError("not singular")
    (a, b), (c, d) = core.linear_matrix()
    trace = a + d
    det = a * d - b * c
    if trace.is_zero() and det.is_zero():
        return EigenData(trace, det, False, BOTH_ZERO)
    if det.is_zero():
        return EigenData(trace, det, False, SADDLE_NODE_CLASS)
    # ratio r of the two (nonzero) eigenvalues solves r^2 - s r + 1 = 0,
    # s = trace^2/det - 2; rational iff s is rational with s^2 - 4 a square
    s = trace * trace / det - 2
    disc = s * s - 4
    root = gauss_sqrt(disc)
    jordan = False
    if disc.is_zero():
        # equal eigenvalues; Jordan block iff the matrix is not lambda * Id
        lam = trace / 2
        jordan = not (a == lam and d == lam and b.is_zero() and c.is_zero())
    if root is None:
        return EigenData(trace, det, jordan, IRRATIONAL_OR_NONREAL)
    r1 = (s + root) / 2
    r2 = (s - root) / 2
    rational = [r for r in (r1, r2) if r.is_rational()]
    if not rational:
        return EigenData(trace, det, jordan, IRRATIONAL_OR_NONREAL)
    # r and 1/r describe the same unordered pair; report the one with |r| >= 1
    fr = sorted((r.re for r in rational), key=abs)[-1]
    return EigenData(trace, det, jordan, RATIONAL_RATIO, ratio=fr)


# singularity types
REGULAR = "REGULAR"
SIMPLE_HYPERBOLIC = "SIMPLE_HYPERBOLIC"
SADDLE_NODE = "SADDLE_NODE"
LJ = "LJ"
NILPOTENT = "NILPOTENT"
ZERO_LINEAR_PART = "ZERO_LINEAR_PART"
DICRITICAL_LINEARIZABLE = "DICRITICAL_LINEARIZABLE"


def classify_singularity(germ: MeroField) -> str:
    core = germ.core
    if not core.p_comp.eval(GaussRat(0), GaussRat(0)).is_zero() or not (
        core.q_comp.eval(GaussRat(0), GaussRat(0)).is_zero()
    ):
        return REGULAR
    eig = eigen_data(germ)
    if eig.ratio_class == SADDLE_NODE_CLASS:
        return SADDLE_NODE
    if eig.ratio_class == BOTH_ZERO:
        (a, b), (c, d) = core.linear_matrix()
        if a.is_zero() and b.is_zero() and c.is_zero() and d.is_zero():
            return ZERO_LINEAR_PART
        return NILPOTENT
    if eig.ratio_class == RATIONAL_RATIO and eig.ratio == 1 and eig.jordan_nontrivial:
        return LJ
    return SIMPLE_HYPERBOLIC


def is_simple(germ: MeroField) -> bool:
    """At least one nonzero eigenvalue of the saturated linear part."""
    return classify_singularity(germ) in (
        SIMPLE_HYPERBOLIC,
        SADDLE_NODE,
        LJ,
        DICRITICAL_LINEARIZABLE,
    )


# ---------------------------------------------------------------------------
# Separatrix witnesses and straightening


@dataclass(frozen=True)
class CurveWitness:
    """A smooth invariant curve through the origin with its straightening.

    kind "graph_y": the curve {y = phi(x)} with phi(0) = 0; straightened by
    (x, y) -> (x, y - phi(x)).  kind "graph_x": {x = psi(y)}, straightened by
    swapping coordinates first.  Lines a*x + b*y = 0 reduce to one of these.
    """

    kind: str
    graph: UniPoly

    @staticmethod
    def x_axis() -> "CurveWitness":
        return CurveWitness("graph_y", UniPoly())

    @staticmethod
    def y_axis() -> "CurveWitness":
        return CurveWitness("graph_x", UniPoly())

    @staticmethod
    def line(a, b) -> "CurveWitness":
        """The line a*x + b*y = 0 through the origin."""
        a, b = GaussRat.of(a), GaussRat.of(b)
        if b.is_zero():
            if a.is_zero():
                raise InvariantError("degenerate line")
            return CurveWitness.y_axis()
        return CurveWitness("graph_y", UniPoly([GaussRat(0), -a / b]))

    def equation(self) -> BiPoly:
        g = BiPoly.from_uni(self.graph, "x")
        if self.kind == "graph_y":
            return BiPoly.var_y() - g
        return BiPoly.var_x() - g.swap()


def straighten(germ: MeroField, witness: CurveWitness) -> MeroField:
    """Move the witness curve to {y = 0}; verifies invariance and smoothness."""
    phi = witness.graph
    if not phi.is_zero() and phi.order() == 0:
        raise InvariantError("curve does not pass through the origin")
    p, q = germ.core.p_comp, germ.core.q_comp
    num, den = germ.numerator, germ.denominator
    if witness.kind == "graph_x":
        p, q = q.swap(), p.swap()
        num, den = num.swap(), den.swap()
    # substitution (x, y) -> (x, y + phi(x)); new q-component is q - phi' p
    phi_b = BiPoly.from_uni(phi, "x")
    sx = BiPoly.var_x()
    sy = BiPoly.var_y() + phi_b
    dphi = BiPoly.from_uni(phi.derivative(), "x")
    new_p = p.subst(sx, sy)
    new_q = q.subst(sx, sy) - dphi * new_p
    out = make_mero_field(new_p, new_q, num.subst(sx, sy), den.subst(sx, sy), germ.chart)
    if not out.core.q_comp.eval_y0().is_zero():
        raise InvariantError("curve is not invariant")
    return out


# ---------------------------------------------------------------------------
# Multiplicity, index, asymptotic order


def multiplicity_along(germ: MeroField, witness: CurveWitness) -> int:
    """Order of the core's tangential component along the straightened curve."""
    st = straighten(germ, witness)
    restr = st.core.p_comp.eval_y0()
    if restr.is_zero():
        raise InvariantError("core vanishes identically along the curve")
    return restr.order()


def index_along(
    germ: MeroField, witness: CurveWitness, truncation: int = DEFAULT_TRUNCATION
) -> GaussRat:
    """Residue at 0 of d/dy(Q/P)(x, 0) dx for the straightened core."""
    st = straighten(germ, witness)
    p, q = st.core.p_comp, st.core.q_comp
    num = (q.dy() * p - q * p.dy()).eval_y0()
    den_series = p.eval_y0()
    d2 = den_series * den_series
    v = d2.order()
    if v is None:
        raise InvariantError("core vanishes identically along the curve")
    if num.is_zero() or v == 0:
        return GaussRat(0)  # holomorphic quotient along the curve
    if v - 1 > truncation:
        raise InvariantError("increase truncation")
    # residue = coefficient of x^(v-1) in num * (d2 / x^v)^(-1)
    unit = UniPoly(d2.coeffs[v:])
    inv = unit.series_inverse(max(v - 1, 0))
    series = num * inv
    return series[v - 1]


def asymptotic_order(
    germ: MeroField, witness: CurveWitness, truncation: int = DEFAULT_TRUNCATION
) -> GaussRat:
    """Order of the scalar-weighted tangential restriction plus the divisor
    order along the curve times the index.

    With the germ written as y^d (f d/dx + y g d/dy) in straightened
    coordinates (f meromorphic along transverse curves, d the signed order of
    the field along {y = 0}), this is ord_0 f(x, 0) + d * index.
    """
    st = straighten(germ, witness)
    d = st.order_along("y")
    oy_num = st.numerator.ord_y()
    oy_den = st.denominator.ord_y()
    num0 = UniPoly(
        BiPoly(
            {(i, j - oy_num): c for (i, j), c in st.numerator.terms.items()}
        ).eval_y0().coeffs
    )
    den0 = UniPoly(
        BiPoly(
            {(i, j - oy_den): c for (i, j), c in st.denominator.terms.items()}
        ).eval_y0().coeffs
    )
    mult = multiplicity_along(germ, witness)
    restriction_order = num0.order() - den0.order() + mult
    ind = index_along(germ, witness, truncation)
    return GaussRat(restriction_order) + GaussRat(d) * ind


@dataclass(frozen=True)
class InvariantValues:
    multiplicity: int
    index: GaussRat
    asymptotic_order: GaussRat
    milnor: Optional[int]


def invariant_values(
    germ: MeroField, witness: CurveWitness, truncation: int = DEFAULT_TRUNCATION
) -> InvariantValues:
    return InvariantValues(
        multiplicity_along(germ, witness),
        index_along(germ, witness, truncation),
        asymptotic_order(germ, witness, truncation),
        milnor_number(germ),
    )


# ---------------------------------------------------------------------------
# Milnor number (intersection multiplicity of the core components)


def _shear_candidates():
    yield GaussRat(0)
    k = 1
    while True:
        yield GaussRat(k)
        yield GaussRat(0, k)
        k += 1


def milnor_number(germ: MeroField) -> Optional[int]:
    """Intersection multiplicity at the origin of the two core components.

    None when the components share a local branch (never the case for a
    saturated core, but kept for defensive callers).
    """
    p, q = germ.core.p_comp, germ.core.q_comp
    if not p.eval(GaussRat(0), GaussRat(0)).is_zero() or not q.eval(
        GaussRat(0), GaussRat(0)
    ).is_zero():
        return 0
    from .algebra import poly_gcd

    g = poly_gcd(p, q)
    if not g.is_constant() and g.eval(GaussRat(0), GaussRat(0)).is_zero():
        return None
    x = BiPoly.var_x()
    y = BiPoly.var_y()
    for count, lam in enumerate(_shear_candidates()):
        if count > 40:
            raise InvariantError("no valid shear found for the resultant")
        # shear x -> x + lam*y separates other intersection points off {x=0}
        ps = p.subst(x + y * lam, y)
        qs = q.subst(x + y * lam, y)
        pu, qu = ps.eval_x0(), qs.eval_x0()
        if pu.is_zero() or qu.is_zero():
            continue
        common = pu.gcd(qu)
        if common.degree() != common.order():
            continue  # another intersection point sits on the fiber x = 0
        res = bi_resultant_y(ps, qs)
        if res.is_zero():
            return None
        return res.order()
    raise InvariantError("unreachable")


# ---------------------------------------------------------------------------
# Conservation report for one blow-up


@dataclass(frozen=True)
class LawCheck:
    law: str
    summands: tuple
    total: object
    expected: object
    passed: bool
    applicable: bool


@dataclass(frozen=True)
class ConservationReport:
    checks: tuple
    complete: bool  # False when a non-rational divisor singularity was skipped
    dicritical: bool

    def passed(self) -> bool:
        return self.complete and all(c.passed for c in self.checks if c.applicable)

    def to_json(self):
        def enc(v):
            if isinstance(v, GaussRat):
                return str(v)
            return v

        return {
            "complete": self.complete,
            "dicritical": self.dicritical,
            "checks": [
                {
                    "law": c.law,
                    "summands": [enc(s) for s in c.summands],
                    "total": enc(c.total),
                    "expected": enc(c.expected),
                    "pass": c.passed,
                    "applicable": c.applicable,
                }
                for c in self.checks
            ],
        }


def check_conservation(parent: MeroField, blowup, semicomplete_candidate: bool = False
                       ) -> ConservationReport:
    """Verify the order-sum, index-sum and asymptotic-order-sum laws for one
    blow-up.

    Order sum: multiplicities along the divisor add to ord(parent) + 1.
    Index sum: indices along the divisor add to -1.  The asymptotic-order sum
    (= 2) is reported as advisory unless the caller flags the parent as a
    semi-completeness candidate.
    """
    ord_f = parent.core.order()
    dicritical = blowup.dicritical
    mults, inds, asys = [], [], []
    for chart, loc, _eig in blowup.divisor_singularities:
        m = blowup.chart_xt if chart == "xt" else blowup.chart_sy
        local = m.shift(loc[0], loc[1])
        witness = CurveWitness.y_axis() if chart == "xt" else CurveWitness.x_axis()
        mults.append(GaussRat(multiplicity_along(local, witness)))
        inds.append(index_along(local, witness))
        asys.append(asymptotic_order(local, witness))
    complete = not blowup.unresolved
    checks = []
    applicable = (not dicritical) and complete
    tot_m = sum(mults, GaussRat(0))
    checks.append(
        LawCheck(
            "order_sum",
            tuple(mults),
            tot_m,
            GaussRat(ord_f + 1),
            tot_m == GaussRat(ord_f + 1),
            applicable,
        )
    )
    tot_i = sum(inds, GaussRat(0))
    checks.append(
        LawCheck("index_sum", tuple(inds), tot_i, GaussRat(-1), tot_i == GaussRat(-1), applicable)
    )
    tot_a = sum(asys, GaussRat(0))
    checks.append(
        LawCheck(
            "asymptotic_order_sum",
            tuple(asys),
            tot_a,
            GaussRat(2),
            tot_a == GaussRat(2),
            applicable and semicomplete_candidate,
        )
    )
    return ConservationReport(tuple(checks), complete, dicritical)


# ---------------------------------------------------------------------------
# Linearizability of resonant nodes, and the dicriticality hint


def _diagonalize_core(germ: MeroField):
    """Exact linear change making the core's linear part diagonal.

    Requires two distinct Gaussian-rational eigenvalues; returns the
    transformed MeroField and the eigenvalues (l1, l2) on d/dx, d/dy.
    """
    (a, b), (c, d) = germ.core.linear_matrix()
    tr, det = a + d, a * d - b * c
    disc = gauss_sqrt(tr * tr - 4 * det)
    if disc is None or disc.is_zero():
        raise InvariantError("linear part has no distinct rational eigenvalues")
    l1 = (tr + disc) / 2
    l2 = (tr - disc) / 2

    def eigvec(lam):
        # (a - lam) e1 + b e2 = 0 ; c e1 + (d - lam) e2 = 0
        if not b.is_zero():
            return (b, lam - a)
        if not c.is_zero():
            return (lam - d, c)
        return (GaussRat(1), GaussRat(0)) if a == lam else (GaussRat(0), GaussRat(1))

    v1, v2 = eigvec(l1), eigvec(l2)
    detS = v1[0] * v2[1] - v2[0] * v1[1]
    if detS.is_zero():
        raise InvariantError("eigenvectors are dependent")
    x, y = BiPoly.var_x(), BiPoly.var_y()
    sx = x * v1[0] + y * v2[0]
    sy = x * v1[1] + y * v2[1]
    p_old = germ.core.p_comp.subst(sx, sy)
    q_old = germ.core.q_comp.subst(sx, sy)
    inv = detS.inv()
    new_p = (p_old * v2[1] - q_old * v2[0]) * inv
    new_q = (q_old * v1[0] - p_old * v1[1]) * inv
    out = make_mero_field(
        new_p, new_q, germ.numerator.subst(sx, sy), germ.denominator.subst(sx, sy), germ.chart
    )
    return out, l1, l2


def resonant_node_linearizable(germ: MeroField, truncation: int = DEFAULT_TRUNCATION) -> bool:
    """Decide linearizability of a node with eigenvalue ratio n in N, n >= 2.

    All non-resonant jets up to degree n are removed by exact polynomial
    changes of coordinates; the germ is linearizable iff the single resonant
    coefficient then vanishes.  Exact: higher jets cannot feed back into
    degrees <= n.
    """
    eig = eigen_data(germ)
    if eig.ratio_class != RATIONAL_RATIO:
        raise InvariantError("not a rational-ratio singularity")
    n = eig.ratio
    if n.denominator != 1 or n <= 1:
        raise InvariantError("not a resonant node")
    n = int(n)
    if n > truncation:
        raise InvariantError("increase truncation")
    diag, l1, l2 = _diagonalize_core(germ)
    # arrange eigenvalues as (n*t, t) on (x, y)
    if l1 == l2 * n:
        p, q = diag.core.p_comp, diag.core.q_comp
        lam1, lam2 = l1, l2
    elif l2 == l1 * n:
        p, q = diag.core.q_comp.swap(), diag.core.p_comp.swap()
        lam1, lam2 = l2, l1
    else:
        raise InvariantError("eigenvalues are not in integer resonance")
    p = p.truncate_degree(n)
    q = q.truncate_degree(n)
    x, y = BiPoly.var_x(), BiPoly.var_y()
    for k in range(2, n + 1):
        # remove every degree-k term except the resonant y^n in the first slot
        hx = {}
        hy = {}
        for (i, j), c in p.homogeneous_part(k).terms.items():
            divisor = lam1 * i + lam2 * j - lam1
            if divisor.is_zero():
                continue  # resonant: (i, j) = (0, n)
            hx[(i, j)] = c / divisor
        for (i, j), c in q.homogeneous_part(k).terms.items():
            divisor = lam1 * i + lam2 * j - lam2
            if divisor.is_zero():
                continue
            hy[(i, j)] = c / divisor
        hx_p, hy_p = BiPoly(hx), BiPoly(hy)
        if hx_p.is_zero() and hy_p.is_zero():
            continue
        # substitute (x, y) = (X + hx, Y + hy) and invert the Jacobian
        # I + Dh by its Neumann series, exact modulo degree n since every
        # factor Dh raises the degree by k - 1 >= 1
        sx, sy = x + hx_p, y + hy_p
        p_phi = p.subst(sx, sy).truncate_degree(n)
        q_phi = q.subst(sx, sy).truncate_degree(n)
        term_x, term_y = p_phi, q_phi
        out_x, out_y = p_phi, q_phi
        while True:
            nx = (-(hx_p.dx() * term_x + hx_p.dy() * term_y)).truncate_degree(n)
            ny = (-(hy_p.dx() * term_x + hy_p.dy() * term_y)).truncate_degree(n)
            if nx.is_zero() and ny.is_zero():
                break
            out_x, out_y = out_x + nx, out_y + ny
            term_x, term_y = nx, ny
        p, q = out_x.truncate_degree(n), out_y.truncate_degree(n)
    return p.coeff(0, n).is_zero()


def dicritical_hint(germ: MeroField, truncation: int = DEFAULT_TRUNCATION) -> str:
    """Tri-state dicriticality decision for the germ's foliation.

    "yes" only with a certificate: a diagonalizable ratio-1 linear part, a
    positive non-resonant rational ratio (linearizable without obstruction),
    or a resonant node whose normal form is exactly linear.  Non-simple
    germs answer "needs-resolution".
    """
    kind = classify_singularity(germ)
    if kind == REGULAR:
        return "no"
    if kind in (NILPOTENT, ZERO_LINEAR_PART):
        return "needs-resolution"
    if kind in (SADDLE_NODE, LJ):
        return "no"
    eig = eigen_data(germ)
    if eig.ratio_class != RATIONAL_RATIO:
        return "no"
    ratio = eig.ratio
    if ratio < 0:
        return "no"
    if ratio == 1:
        return "no" if eig.jordan_nontrivial else "yes"
    if ratio.denominator == 1:
        n = int(ratio)
        if n > truncation:
            return "needs-resolution"
        return "yes" if resonant_node_linearizable(germ, truncation) else "no"
    # positive non-integer, non-reciprocal-integer rational ratio: in the
    # Poincare domain without resonances, hence linearizable, hence a
    # meromorphic first integral with infinitely many separatrices
    return "yes"
