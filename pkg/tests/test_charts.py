import random

import pytest

from planevf.algebra import BiPoly, GaussRat
from planevf.charts import (
    AFFINE,
    ChartError,
    S_CHART,
    U_CHART,
    cross_chart_check,
    field_to_mero,
    make_mero_field,
    singularities_at_infinity,
    to_chart,
    transport,
)
from planevf.fields import PolyVectorField, infinity_invariant

from conftest import rand_field

X, Y = BiPoly.var_x(), BiPoly.var_y()


def mero_equal(a, b):
    return a.numerator == b.numerator and a.denominator == b.denominator and a.core == b.core


def test_to_chart_x2dx():
    m = to_chart(PolyVectorField(X**2, BiPoly()), U_CHART)
    # (1/u)(-u du - v dv): canonical form carries the unit in the numerator
    assert m.denominator == X
    assert m.numerator == BiPoly.const(-1)
    assert m.core.p_comp == X and m.core.q_comp == Y
    assert m.order_along("x") == -1  # pole order d - 1 = 1


def test_to_chart_saturated_example():
    m = to_chart(PolyVectorField(X**2 * Y, -(X * Y**2)), U_CHART)
    # (1/u^2)(-uv du - 2v^2 dv) reduced: numerator -v, denominator u^2
    assert m.denominator == X**2
    assert m.numerator == -Y
    assert m.core.p_comp == X and m.core.q_comp == 2 * Y
    assert m.order_along("x") == -2


def test_to_chart_linear_field_holomorphic():
    m = to_chart(PolyVectorField(X, Y), U_CHART)
    assert m.denominator == BiPoly.const(1)
    # -u du: numerator carries the unit and the u factor
    assert m.numerator == -X
    assert m.core.p_comp == BiPoly.const(1) and m.core.q_comp.is_zero()


def test_to_chart_rejects_affine_target():
    with pytest.raises(ChartError):
        to_chart(PolyVectorField(X, Y), AFFINE)


def test_pole_order_law(rng):
    hits = 0
    while hits < 100:
        d = rng.randint(2, 5)
        f = rand_field(rng, d, height=5)
        m = to_chart(f, U_CHART)
        expected = -(d - 1) if infinity_invariant(f) else -(d - 2)
        assert m.order_along("x") == expected
        # the chart computation agrees with the algebraic invariance test
        divisor_tangent = m.core.p_comp.eval_x0()
        assert divisor_tangent.is_zero() == infinity_invariant(f)
        hits += 1


def test_roundtrip_u_chart(rng):
    for _ in range(100):
        f = rand_field(rng, rng.randint(1, 4), height=5)
        m = to_chart(f, U_CHART)
        back = transport(m, AFFINE)
        assert mero_equal(back, field_to_mero(f))


def test_cross_chart_examples(rng):
    f = PolyVectorField(X, -Y)
    assert cross_chart_check(to_chart(f, U_CHART), to_chart(f, S_CHART))

    a = to_chart(f, U_CHART)
    doubled = make_mero_field(
        a.core.p_comp, a.core.q_comp, a.numerator * 2, a.denominator, a.chart
    )
    assert not cross_chart_check(doubled, to_chart(f, S_CHART))

    for _ in range(25):
        g = rand_field(rng, rng.randint(1, 4), height=4)
        assert cross_chart_check(to_chart(g, U_CHART), to_chart(g, S_CHART))


def test_singularities_at_infinity_examples():
    scan = singularities_at_infinity(PolyVectorField(X**2 * Y, -(X * Y**2)))
    keys = sorted(pt.projective_key() for pt in scan.points)
    assert len(scan.points) == 2  # the two axis directions
    assert not scan.unresolved

    scan2 = singularities_at_infinity(PolyVectorField(Y, BiPoly()))
    assert len(scan2.points) == 1

    # any member of the monomial family has at most 3 singularities on the line
    for m, n in [(1, 1), (2, 1), (3, 2), (5, 4)]:
        f = PolyVectorField(
            BiPoly.mono(n + 1, m, m), BiPoly.mono(n, m + 1, -n)
        )
        scan3 = singularities_at_infinity(f)
        assert scan3.count_known() + len(scan3.unresolved) <= 3


def test_singularity_union_chart_independent(rng):
    for _ in range(40):
        f = rand_field(rng, rng.randint(1, 4), height=4)
        scan = singularities_at_infinity(f)
        keys = {pt.projective_key() for pt in scan.points}
        # recompute from the S chart side: every point not at the y-axis
        # direction must also be visible in the U chart
        ms = to_chart(f, S_CHART)
        mu = to_chart(f, U_CHART)
        for pt in scan.points:
            if pt.chart == U_CHART and not pt.location[1].is_zero():
                v = pt.location[1]
                local = ms.shift(v.inv(), GaussRat(0))
                assert local.core.p_comp.eval(GaussRat(0), GaussRat(0)).is_zero()
                assert local.core.q_comp.eval(GaussRat(0), GaussRat(0)).is_zero()
        assert len(keys) == len(scan.points)


def test_unresolved_factor_reported():
    # top component x^2 - 2y^2-style direction polynomial has no rational roots
    f = PolyVectorField(Y * X, X**2 - 2 * Y**2)
    scan = singularities_at_infinity(f)
    assert scan.has_unresolved()
