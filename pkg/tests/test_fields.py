import random

import pytest

from planevf.algebra import BiPoly, GaussRat
from planevf.fields import (
    FieldError,
    PolyVectorField,
    foliation_order_at,
    infinity_invariant,
    saturate,
)

X, Y = BiPoly.var_x(), BiPoly.var_y()


def test_zero_field_rejected():
    with pytest.raises(FieldError):
        PolyVectorField(BiPoly(), BiPoly())


def test_saturate_examples():
    s = saturate(PolyVectorField(X * Y, X**2))
    assert s.scalar == X
    assert s.core.p_comp == Y and s.core.q_comp == X
    assert s.scalar * s.core.p_comp == X * Y

    s2 = saturate(PolyVectorField(X, -Y))
    assert s2.scalar == BiPoly.const(1)
    assert s2.core.p_comp == X and s2.core.q_comp == -Y

    s3 = saturate(PolyVectorField(X**2 * Y, -(X * Y**2)))
    assert s3.scalar == X * Y
    assert s3.core.p_comp == X and s3.core.q_comp == -Y


def test_saturate_idempotent_and_degrees(rng):
    for _ in range(30):
        deg = rng.randint(1, 4)
        terms_p = {(rng.randint(0, deg), rng.randint(0, deg)): GaussRat(rng.randint(-3, 3))
                   for _ in range(4)}
        terms_q = {(rng.randint(0, deg), rng.randint(0, deg)): GaussRat(rng.randint(-3, 3))
                   for _ in range(4)}
        p, q = BiPoly(terms_p), BiPoly(terms_q)
        if p.is_zero() and q.is_zero():
            continue
        f = PolyVectorField(p, q)
        s = saturate(f)
        assert s.scalar_degree + s.core_degree == f.degree()
        again = saturate(s.core)
        assert again.scalar == BiPoly.const(1)


def test_infinity_invariant_examples():
    # radial times x: the top component is a scalar multiple of the radial field
    f = PolyVectorField(X * X, X * Y)
    assert infinity_invariant(f) is False

    assert infinity_invariant(PolyVectorField(X, -Y)) is True
    assert infinity_invariant(PolyVectorField(X**2 * Y, -(X * Y**2))) is True


def test_foliation_order_examples():
    assert foliation_order_at(PolyVectorField(X, -Y), (0, 0)) == 1
    assert foliation_order_at(PolyVectorField(Y, X**2), (0, 0)) == 1
    # order is computed on the saturated core
    assert foliation_order_at(PolyVectorField(X**2 * Y, -(X * Y**2)), (0, 0)) == 1
    assert foliation_order_at(PolyVectorField(X, -Y), (1, 1)) == 0
