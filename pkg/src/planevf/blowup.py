"""One point blow-up of a meromorphic germ at the origin.

Both standard charts are produced: (x, t) with map (x, t) -> (x, t*x) and
(s, y) with map (s, y) -> (s*y, y).  The exceptional divisor is {x = 0} in
the first chart and {y = 0} in the second; the point t = 0 corresponds to
the direction of {y = 0} downstairs and s = 0 to the direction of {x = 0}.
"""

from __future__ import annotations

from dataclasses import dataclass

from .algebra import BiPoly, GaussRat, RatPoly, UniPoly, rat_subst, rational_roots
from .charts import MeroField, make_mero_field, mero_from_rational
from .fields import PolyVectorField
from .invariants import EigenData, eigen_data

CHART_XT = "xt"
CHART_SY = "sy"


class BlowupError(Exception):
    pass


@dataclass(frozen=True)
class BlowupResult:
    chart_xt: MeroField
    chart_sy: MeroField
    exceptional_order: int
    dicritical: bool
    divisor_singularities: tuple  # (chart tag, (loc, loc), EigenData)
    unresolved: tuple  # residual factors without Gaussian-rational roots
    center_order: int


def _pullback_xt(germ: MeroField) -> MeroField:
    p, q = germ.core.p_comp, germ.core.q_comp
    x, t = BiPoly.var_x(), BiPoly.var_y()
    sx, sy = x, t * x
    pp = p.subst(sx, sy)
    qq = q.subst(sx, sy)
    # dx/dt components: x' = P(x, tx); t' = (Q - t P)(x, tx) / x
    a = RatPoly(pp)
    b = RatPoly(qq - t * pp, x)
    scalar = RatPoly(germ.numerator.subst(sx, sy), germ.denominator.subst(sx, sy))
    return mero_from_rational(scalar * a, scalar * b, CHART_XT)


def _pullback_sy(germ: MeroField) -> MeroField:
    p, q = germ.core.p_comp, germ.core.q_comp
    s, y = BiPoly.var_x(), BiPoly.var_y()
    sx, sy = s * y, y
    pp = p.subst(sx, sy)
    qq = q.subst(sx, sy)
    a = RatPoly(pp - s * qq, y)
    b = RatPoly(qq)
    scalar = RatPoly(germ.numerator.subst(sx, sy), germ.denominator.subst(sx, sy))
    return mero_from_rational(scalar * a, scalar * b, CHART_SY)


def blow_up(germ: MeroField, allow_regular: bool = False) -> BlowupResult:
    """Blow up the origin of the germ's chart.

    The exceptional order follows the divisor-order formula
    ord(numerator) + ord(foliation) - ord(denominator) - 1; dicriticality is
    decided by the tangent-cone pairing y*P_m - x*Q_m of the core.
    """
    core = germ.core
    m = core.order()
    singular = core.p_comp.eval(GaussRat(0), GaussRat(0)).is_zero() and (
        core.q_comp.eval(GaussRat(0), GaussRat(0)).is_zero()
    )
    if not singular and not allow_regular:
        raise BlowupError("origin is a regular point; pass allow_regular to proceed")
    onum = germ.numerator.order()
    oden = germ.denominator.order()
    exceptional_order = onum + (m if singular else 0) - oden - 1
    pairing = core.tangent_pairing() if singular else BiPoly.const(1)
    dicritical = singular and pairing.is_zero()

    xt = _pullback_xt(germ)
    sy = _pullback_sy(germ)

    sings = []
    unresolved = []
    # chart (x, t): singular points of the transformed core on {x = 0}
    a_res = xt.core.p_comp.eval_x0()
    b_res = xt.core.q_comp.eval_x0()
    defining = b_res if a_res.is_zero() else (a_res if b_res.is_zero() else a_res.gcd(b_res))
    if defining.is_zero():
        raise BlowupError("transformed core vanishes along the divisor")
    if defining.degree() >= 1:
        roots, residual = rational_roots(defining)
        if residual.degree() >= 1:
            unresolved.append((CHART_XT, residual))
        for t0, _ in roots:
            local = xt.shift(GaussRat(0), t0)
            sings.append((CHART_XT, (GaussRat(0), t0), eigen_data(local)))
    # chart (s, y): only s = 0 is new
    if sy.core.p_comp.eval(GaussRat(0), GaussRat(0)).is_zero() and (
        sy.core.q_comp.eval(GaussRat(0), GaussRat(0)).is_zero()
    ):
        sings.append((CHART_SY, (GaussRat(0), GaussRat(0)), eigen_data(sy)))
    return BlowupResult(
        xt, sy, exceptional_order, dicritical, tuple(sings), tuple(unresolved), m
    )


def blow_down_check(result: BlowupResult, original: MeroField) -> bool:
    """Push both charts back through the blow-down map and compare."""
    x, y = BiPoly.var_x(), BiPoly.var_y()
    ok = True
    for chart, m in ((CHART_XT, result.chart_xt), (CHART_SY, result.chart_sy)):
        if chart == CHART_XT:
            # (x, t) -> (x, y) = (x, t*x): t = y/x
            sub = (RatPoly(x), RatPoly(y, x))
            a = rat_subst(m.core.p_comp, *sub)
            b = rat_subst(m.core.q_comp, *sub)
            # y' = t'*x + t*x'
            cx = a
            cy = b * RatPoly(x) + RatPoly(y, x) * a
        else:
            # (s, y) -> (x, y) = (s*y, y): s = x/y
            sub = (RatPoly(x, y), RatPoly(y))
            a = rat_subst(m.core.p_comp, *sub)
            b = rat_subst(m.core.q_comp, *sub)
            cx = a * RatPoly(y) + RatPoly(x, y) * b
            cy = b
        scalar = RatPoly(rat_subst(m.numerator, *sub).num, rat_subst(m.numerator, *sub).den) / RatPoly(
            rat_subst(m.denominator, *sub).num, rat_subst(m.denominator, *sub).den
        )
        down = mero_from_rational(scalar * cx, scalar * cy, original.chart)
        ok = ok and (
            down.numerator == original.numerator
            and down.denominator == original.denominator
            and down.core == original.core
        )
    return ok


def counted_exceptional_order(result: BlowupResult) -> int:
    """Divisor order read off the chart fields (matches the formula for
    non-dicritical centers; one higher for dicritical ones)."""
    oxt = result.chart_xt.order_along("x")
    osy = result.chart_sy.order_along("y")
    if oxt != osy:
        raise BlowupError("charts disagree on the exceptional order")
    return oxt
