"""Shared corpus builders: deterministic random fields and germs whose
divisor singularities are guaranteed Gaussian-rational by construction."""

from __future__ import annotations

import random
from fractions import Fraction

import pytest

from planevf.algebra import BiPoly, GaussRat, UniPoly, poly_gcd
from planevf.charts import MeroField, make_mero_field
from planevf.fields import PolyVectorField


def rand_fraction(rng: random.Random, height: int = 8) -> Fraction:
    num = rng.randint(-height, height)
    den = rng.randint(1, height)
    return Fraction(num, den)


def rand_gauss(rng: random.Random, height: int = 8, imaginary: bool = True) -> GaussRat:
    re = rand_fraction(rng, height)
    im = rand_fraction(rng, height) if imaginary and rng.random() < 0.3 else 0
    return GaussRat(re, im)


def rand_bipoly(rng: random.Random, degree: int, height: int = 8,
                imaginary: bool = True) -> BiPoly:
    terms = {}
    for i in range(degree + 1):
        for j in range(degree + 1 - i):
            if rng.random() < 0.5:
                c = rand_gauss(rng, height, imaginary)
                if not c.is_zero():
                    terms[(i, j)] = c
    return BiPoly(terms)


def rand_field(rng: random.Random, degree: int, height: int = 8) -> PolyVectorField:
    while True:
        p = rand_bipoly(rng, degree, height)
        q = rand_bipoly(rng, degree, height)
        if p.is_zero() and q.is_zero():
            continue
        f = PolyVectorField(p, q)
        if f.degree() == degree:
            return f


def rand_homogeneous(rng: random.Random, degree: int, height: int = 4) -> BiPoly:
    terms = {}
    for i in range(degree + 1):
        c = rand_gauss(rng, height, imaginary=False)
        if not c.is_zero():
            terms[(i, degree - i)] = c
    return BiPoly(terms)


def rand_nondicritical_germ(rng: random.Random, order: int = None,
                            jet: int = 4, height: int = 8) -> MeroField:
    """Random saturated holomorphic germ, singular at the origin, with a
    non-vanishing tangent-cone pairing all of whose direction roots are
    Gaussian rational (so every divisor singularity of the blow-up is too).

    The lowest jet is produced from a prescribed pairing with rational roots:
    given the pairing C and a random P_m with matching top coefficient,
    Q_m = (y P_m - C) / x is exact.
    """
    x, y = BiPoly.var_x(), BiPoly.var_y()
    while True:
        m = order if order is not None else rng.randint(1, 3)
        # pairing of degree m+1 with rational direction roots
        nroots = rng.randint(0, m + 1)
        c = BiPoly.const(GaussRat(rng.randint(1, height)))
        for _ in range(nroots):
            tau = GaussRat(Fraction(rng.randint(-3, 3), rng.randint(1, 2)))
            c = c * (y - x * tau)
        c = c * x ** (m + 1 - nroots)
        # random degree-m jet for P with the y^m coefficient matched to C
        pm = rand_homogeneous(rng, m, height)
        pm = pm - BiPoly.mono(0, m, pm.coeff(0, m)) + BiPoly.mono(0, m, c.coeff(0, m + 1))
        rem = y * pm - c
        if rem.ord_x() is None or rem.ord_x() < 1:
            if not rem.is_zero():
                continue
            qm = BiPoly()
        else:
            qm = BiPoly({(i - 1, j): co for (i, j), co in rem.terms.items()})
        p = pm
        q = qm
        for k in range(m + 1, jet + 1):
            p = p + rand_homogeneous(rng, k, 2)
            q = q + rand_homogeneous(rng, k, 2)
        if p.is_zero() and q.is_zero():
            continue
        if not p.eval(GaussRat(0), GaussRat(0)).is_zero() or not (
            q.eval(GaussRat(0), GaussRat(0)).is_zero()
        ):
            continue
        f = PolyVectorField(p, q)
        if f.order() != m:
            continue
        if poly_gcd(p, q).degree() > 0:
            continue
        if f.tangent_pairing().is_zero():
            continue
        return make_mero_field(p, q)


def rand_monomial_scalar(rng: random.Random, max_exp: int = 3):
    a1, a2 = rng.randint(0, max_exp), rng.randint(0, max_exp)
    b1, b2 = rng.randint(0, max_exp), rng.randint(0, max_exp)
    x, y = BiPoly.var_x(), BiPoly.var_y()
    num = x**a1 * y**a2
    den = x**b1 * y**b2
    return num, den


@pytest.fixture
def rng():
    return random.Random(20260811)
