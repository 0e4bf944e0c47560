"""The three standard charts of the projective plane and exact field transport.

Charts: AFFINE with coordinates (x, y); U_CHART with (u, v) = (1/x, y/x),
where the line at infinity is {u = 0}; S_CHART with (r, s) = (x/y, 1/y),
where it is {s = 0}.  A meromorphic field is carried as a scalar fraction
times a saturated polynomial core, so every transport stays exact.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .algebra import (
    AlgebraError,
    BiPoly,
    GaussRat,
    RatPoly,
    UniPoly,
    poly_gcd,
    rat_subst,
    rational_roots,
)
from .fields import PolyVectorField, saturate

AFFINE = "affine"
U_CHART = "u"
S_CHART = "s"

STANDARD_CHARTS = (AFFINE, U_CHART, S_CHART)


class ChartError(Exception):
    pass


@dataclass(frozen=True)
class MeroField:
    """Meromorphic field (numerator/denominator) * core in a named chart.

    Invariants: gcd(numerator, denominator) is a unit, the core components are
    coprime, the denominator and the core's graded-lex leading coefficient are
    monic (all unit freedom lives in the numerator).
    """

    chart: str
    numerator: BiPoly
    denominator: BiPoly
    core: PolyVectorField

    def order_along(self, var: str) -> int:
        """Zero(+)/pole(-) order along {x = 0} ('x') or {y = 0} ('y')."""
        on = self.numerator.ord_x() if var == "x" else self.numerator.ord_y()
        od = self.denominator.ord_x() if var == "x" else self.denominator.ord_y()
        return on - od

    def eval_scalar_at_origin_nonzero(self) -> bool:
        return not self.numerator.eval(GaussRat(0), GaussRat(0)).is_zero() and not (
            self.denominator.eval(GaussRat(0), GaussRat(0)).is_zero()
        )

    def shift(self, a, b) -> "MeroField":
        a, b = GaussRat.of(a), GaussRat.of(b)
        return make_mero_field(
            self.core.p_comp.shift(a, b),
            self.core.q_comp.shift(a, b),
            self.numerator.shift(a, b),
            self.denominator.shift(a, b),
            self.chart,
        )

    def scalar_orders_at_origin(self):
        """(ord numerator, ord denominator) at the origin."""
        return self.numerator.order(), self.denominator.order()


def make_mero_field(
    p: BiPoly,
    q: BiPoly,
    numerator: Optional[BiPoly] = None,
    denominator: Optional[BiPoly] = None,
    chart: str = AFFINE,
) -> MeroField:
    """Normalize raw data into the canonical MeroField form."""
    num = numerator if numerator is not None else BiPoly.const(1)
    den = denominator if denominator is not None else BiPoly.const(1)
    if num.is_zero():
        raise ChartError("zero numerator would collapse the field")
    if den.is_zero():
        raise ChartError("zero denominator")
    if p.is_zero() and q.is_zero():
        raise ChartError("zero core")
    sat = saturate(PolyVectorField(p, q))
    core = sat.core
    if not sat.scalar.is_constant():
        num = num * sat.scalar
    g = poly_gcd(num, den)
    if not g.is_constant():
        num = num.exact_div(g)
        den = den.exact_div(g)
    # push all units into the numerator
    cden = den.lead_coeff().inv()
    num, den = num * cden, den * cden
    ccore = _core_lead_coeff(core).inv()
    core = core.scale(ccore)
    num = num * ccore.inv()
    return MeroField(chart, num, den, core)


def _core_lead_coeff(core: PolyVectorField) -> GaussRat:
    # graded-lex leading coefficient across both components, x-component wins ties
    best = None
    for comp in (core.p_comp, core.q_comp):
        if comp.is_zero():
            continue
        m = comp.lead_mono()
        key = (m[0] + m[1], m[0])
        if best is None or key > best[0]:
            best = (key, comp.terms[m])
    return best[1]


def mero_from_rational(cx: RatPoly, cy: RatPoly, chart: str) -> MeroField:
    """Build a MeroField from rational components, clearing denominators."""
    if cx.is_zero() and cy.is_zero():
        raise ChartError("zero field after transport")
    den = cx.den * cy.den
    g = poly_gcd(cx.den, cy.den)
    if not g.is_constant():
        den = den.exact_div(g)
    nx = cx.num * den.exact_div(cx.den)
    ny = cy.num * den.exact_div(cy.den)
    if nx.is_zero():
        num = ny
    elif ny.is_zero():
        num = nx
    else:
        num = poly_gcd(nx, ny)
    if num.is_constant():
        return make_mero_field(nx, ny, BiPoly.const(1), den, chart)
    return make_mero_field(
        nx.exact_div(num), ny.exact_div(num), num, den, chart
    )


def field_to_mero(x_field: PolyVectorField) -> MeroField:
    return make_mero_field(x_field.p_comp, x_field.q_comp, chart=AFFINE)


# -- transport between the three standard charts ------------------------------
#
# Writing X/Y for the source coordinates expressed in the target coordinates,
# each entry gives (X, Y, cx, cy) with cx, cy functions of the transported
# source components A, B: the target components are cx(A, B), cy(A, B)
# evaluated after substituting (X, Y) into A and B.


def _transport_components(src: str, dst: str, a: BiPoly, b: BiPoly):
    x = RatPoly(BiPoly.var_x())
    y = RatPoly(BiPoly.var_y())
    one = RatPoly(BiPoly.const(1))

    if src == AFFINE and dst == U_CHART:
        # (x, y) = (1/u, v/u); target coords named (u, v) -> (x, y) slots
        sx, sy = one / x, y / x
        A, B = rat_subst(a, sx, sy), rat_subst(b, sx, sy)
        return (-(x**2) * A, x * (B - y * A))
    if src == AFFINE and dst == S_CHART:
        # (x, y) = (r/s, 1/s)
        sx, sy = x / y, one / y
        A, B = rat_subst(a, sx, sy), rat_subst(b, sx, sy)
        return (y * (A - x * B), -(y**2) * B)
    if src == U_CHART and dst == AFFINE:
        # (u, v) = (1/x, y/x)
        su, sv = one / x, y / x
        A, B = rat_subst(a, su, sv), rat_subst(b, su, sv)
        return (-(x**2) * A, x * (B - y * A))
    if src == S_CHART and dst == AFFINE:
        # (r, s) = (x/y, 1/y)
        sr, ss = x / y, one / y
        A, B = rat_subst(a, sr, ss), rat_subst(b, sr, ss)
        return (y * (A - x * B), -(y**2) * B)
    if src == U_CHART and dst == S_CHART:
        # (u, v) = (s/r, 1/r); target coords (r, s) in the (x, y) slots
        su, sv = y / x, one / x
        A, B = rat_subst(a, su, sv), rat_subst(b, su, sv)
        return (-(x**2) * B, x * (A - y * B))
    if src == S_CHART and dst == U_CHART:
        # (r, s) = (1/v, u/v) with target coords (u, v)
        sr, ss = one / y, x / y
        A, B = rat_subst(a, sr, ss), rat_subst(b, sr, ss)
        return (y * (B - x * A), -(y**2) * A)
    raise ChartError(f"no transport from {src} to {dst}")


def transport(m: MeroField, target: str) -> MeroField:
    """Carry a meromorphic field to another standard chart, exactly."""
    if m.chart not in STANDARD_CHARTS or target not in STANDARD_CHARTS:
        raise ChartError("transport is defined between the standard charts only")
    if m.chart == target:
        return m
    cx, cy = _transport_components(m.chart, target, m.core.p_comp, m.core.q_comp)
    scalar = RatPoly(m.numerator, m.denominator)
    if m.chart == AFFINE and target == U_CHART:
        sub = (RatPoly.of(1) / RatPoly(BiPoly.var_x()), RatPoly(BiPoly.var_y()) / RatPoly(BiPoly.var_x()))
    elif m.chart == AFFINE and target == S_CHART:
        sub = (RatPoly(BiPoly.var_x()) / RatPoly(BiPoly.var_y()), RatPoly.of(1) / RatPoly(BiPoly.var_y()))
    elif m.chart == U_CHART and target == AFFINE:
        sub = (RatPoly.of(1) / RatPoly(BiPoly.var_x()), RatPoly(BiPoly.var_y()) / RatPoly(BiPoly.var_x()))
    elif m.chart == S_CHART and target == AFFINE:
        sub = (RatPoly(BiPoly.var_x()) / RatPoly(BiPoly.var_y()), RatPoly.of(1) / RatPoly(BiPoly.var_y()))
    elif m.chart == U_CHART and target == S_CHART:
        sub = (RatPoly(BiPoly.var_y()) / RatPoly(BiPoly.var_x()), RatPoly.of(1) / RatPoly(BiPoly.var_x()))
    else:
        sub = (RatPoly.of(1) / RatPoly(BiPoly.var_y()), RatPoly(BiPoly.var_x()) / RatPoly(BiPoly.var_y()))
    s_num = rat_subst(m.numerator, *sub)
    s_den = rat_subst(m.denominator, *sub)
    scalar = s_num / s_den
    return mero_from_rational(scalar * cx, scalar * cy, target)


def to_chart(x_field: PolyVectorField, target: str) -> MeroField:
    """Meromorphic extension of an affine polynomial field into a chart at infinity."""
    if target == AFFINE:
        raise ChartError("field is already affine")
    return transport(field_to_mero(x_field), target)


def cross_chart_check(a: MeroField, b: MeroField) -> bool:
    """Whether a, transported to b's chart, reproduces b exactly after reduction."""
    if a.chart not in STANDARD_CHARTS or b.chart not in STANDARD_CHARTS:
        raise ChartError("cross-chart comparison needs standard charts")
    moved = transport(a, b.chart)
    return (
        moved.numerator == b.numerator
        and moved.denominator == b.denominator
        and moved.core == b.core
    )


# -- singularities on the line at infinity ------------------------------------


@dataclass(frozen=True)
class InfinitySingularity:
    chart: str
    location: tuple
    eigen: object  # EigenData, filled by callers that need it
    dicritical_hint: str  # "yes" | "no" | "needs-resolution"

    def projective_key(self):
        """Identify the point projectively: U (0, v) ~ S (1/v, 0) for v != 0."""
        if self.chart == U_CHART:
            v = self.location[1]
            return ("dir", v.re, v.im)
        r = self.location[0]
        if r.is_zero():
            return ("y-axis",)
        inv = r.inv()
        return ("dir", inv.re, inv.im)


@dataclass(frozen=True)
class InfinityScan:
    points: tuple
    unresolved: tuple  # (chart, residual UniPoly) pairs with no rational roots

    def count_known(self) -> int:
        return len(self.points)

    def has_unresolved(self) -> bool:
        return bool(self.unresolved)


def _divisor_restriction(m: MeroField):
    """Restriction of the core to the chart's line at infinity.

    Returns (tangential, normal) univariate polynomials in the coordinate
    along the line: for U_CHART the line is {u = 0} parametrized by v.
    """
    if m.chart == U_CHART:
        a = m.core.p_comp.eval_x0()  # u-component on u = 0
        b = m.core.q_comp.eval_x0()
        return b, a
    if m.chart == S_CHART:
        a = m.core.p_comp.eval_y0()  # r-component on s = 0
        b = m.core.q_comp.eval_y0()
        return a, b
    raise ChartError("restriction defined in the infinity charts")


def singularities_at_infinity(x_field: PolyVectorField, hint_fn=None) -> InfinityScan:
    """All Gaussian-rational singular points of the saturated foliation on
    the line at infinity, scanning both infinity charts and deduplicating.

    Residual factors without Gaussian-rational roots are reported explicitly
    rather than dropped.
    """
    if x_field.degree() < 1:
        raise ChartError("degree must be at least 1")
    points = []
    unresolved = []
    seen = set()

    mu = to_chart(x_field, U_CHART)
    tangential, normal = _divisor_restriction(mu)
    # singular points on {u=0}: where the core vanishes entirely
    defining = tangential if normal.is_zero() else tangential.gcd(normal)
    if defining.is_zero():
        raise ChartError("core vanishes along the line at infinity")
    if defining.degree() >= 1:
        roots, residual = rational_roots(defining)
        if residual.degree() >= 1:
            unresolved.append((U_CHART, residual))
        for v0, _ in roots:
            loc = (GaussRat(0), v0)
            local = mu.shift(GaussRat(0), v0)
            eigen, hint = (None, "needs-resolution") if hint_fn is None else hint_fn(local)
            pt = InfinitySingularity(U_CHART, loc, eigen, hint)
            if pt.projective_key() not in seen:
                seen.add(pt.projective_key())
                points.append(pt)

    ms = to_chart(x_field, S_CHART)
    tangential, normal = _divisor_restriction(ms)
    # only the point r = 0 is new in this chart
    r0 = GaussRat(0)
    if tangential.eval(r0).is_zero() and normal.eval(r0).is_zero():
        loc = (r0, GaussRat(0))
        local = ms  # already centered at (0, 0)
        eigen, hint = (None, "needs-resolution") if hint_fn is None else hint_fn(local)
        pt = InfinitySingularity(S_CHART, loc, eigen, hint)
        if pt.projective_key() not in seen:
            seen.add(pt.projective_key())
            points.append(pt)

    return InfinityScan(tuple(points), tuple(unresolved))
