import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from planevf.algebra import (
    AlgebraError,
    BiPoly,
    GaussRat,
    UniPoly,
    bi_resultant_y,
    gauss_sqrt,
    homogeneous_parts,
    poly_gcd,
    rational_roots,
)

X, Y = BiPoly.var_x(), BiPoly.var_y()


def gauss(re, im=0):
    return GaussRat(Fraction(re), Fraction(im))


small_fraction = st.fractions(min_value=-4, max_value=4, max_denominator=4)
gauss_rats = st.builds(GaussRat, small_fraction, small_fraction)
nonzero_gauss = gauss_rats.filter(lambda z: not z.is_zero())


# -- Gaussian rational field axioms ------------------------------------------


@given(gauss_rats, gauss_rats, gauss_rats)
def test_field_axioms(a, b, c):
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a + b == b + a


@given(nonzero_gauss)
def test_inverses(a):
    assert a * a.inv() == GaussRat(1)
    assert (a.conj().conj()) == a
    assert (a.norm() == 0) == a.is_zero()


def test_gauss_sqrt_cases():
    assert gauss_sqrt(gauss(4)) == gauss(2)
    assert gauss_sqrt(gauss(-4)) == GaussRat(0, 2)
    r = gauss_sqrt(GaussRat(3, 4))
    assert r is not None and r * r == GaussRat(3, 4)
    assert gauss_sqrt(gauss(2)) is None
    assert gauss_sqrt(GaussRat(1, 1)) is None  # norm 2 is not a square


@given(gauss_rats)
def test_gauss_sqrt_roundtrip(z):
    sq = z * z
    r = gauss_sqrt(sq)
    assert r is not None
    assert r * r == sq


# -- polynomial gcd -----------------------------------------------------------


def test_gcd_examples():
    g = poly_gcd(X**2 * Y, X**3)
    assert g == X**2
    # verify by exact division both ways
    assert (X**2 * Y).exact_div(g) * g == X**2 * Y
    assert (X**3).exact_div(g) * g == X**3

    assert poly_gcd(X, Y) == BiPoly.const(1)

    g2 = poly_gcd(X * Y * (X - Y), X**2 * Y**2)
    assert g2 == X * Y
    assert (X * Y * (X - Y)).exact_div(g2) * g2 == X * Y * (X - Y)


def test_gcd_zero_pair():
    with pytest.raises(AlgebraError, match="gcd of zero pair"):
        poly_gcd(BiPoly(), BiPoly())


def _rand_poly(rng, deg):
    terms = {}
    for i in range(deg + 1):
        for j in range(deg + 1 - i):
            if rng.random() < 0.6:
                terms[(i, j)] = GaussRat(rng.randint(-3, 3), rng.randint(-1, 1))
    return BiPoly(terms)


def test_gcd_divides_and_scales():
    rng = random.Random(11)
    done = 0
    while done < 25:
        a, b, c = (_rand_poly(rng, 2) for _ in range(3))
        if a.is_zero() or b.is_zero() or c.is_zero():
            continue
        done += 1
        g = poly_gcd(a, b)
        assert g.divides(a) and g.divides(b)
        lhs = poly_gcd(a * c, b * c)
        rhs = c * g
        # equal up to a unit: both normalized monic graded-lex
        assert lhs == rhs.monic_grlex()


# -- homogeneous parts --------------------------------------------------------


def test_homogeneous_parts_examples():
    p = X**2 + X * Y + Y
    parts = homogeneous_parts(p)
    assert parts == [(1, Y), (2, X**2 + X * Y)]

    assert homogeneous_parts(BiPoly()) == []

    cube = (X - Y) * (X - Y) * (X - Y)
    parts = homogeneous_parts(X**3 - 3 * X**2 * Y + 3 * X * Y**2 - Y**3)
    assert parts == [(3, cube)]


@given(st.integers(0, 50))
def test_homogeneous_reassembly(seed):
    rng = random.Random(seed)
    p = _rand_poly(rng, 4)
    total = BiPoly()
    for k, part in homogeneous_parts(p):
        assert all(i + j == k for i, j in part.terms)
        total = total + part
    assert total == p


# -- rational roots -----------------------------------------------------------


def test_rational_roots_examples():
    p = UniPoly([0, 0, -1, 1])  # x^2 (x - 1)
    roots, residual = rational_roots(p)
    assert roots == [(GaussRat(0), 2), (GaussRat(1), 1)]
    assert residual.degree() == 0

    q = UniPoly([1, 0, 1])  # x^2 + 1
    roots, residual = rational_roots(q)
    assert sorted(str(r) for r, _ in roots) == ["-1i", "1i"]
    assert residual.degree() == 0

    r = UniPoly([-2, 0, 1])  # x^2 - 2: no Gaussian-rational roots
    roots, residual = rational_roots(r)
    assert roots == []
    assert residual == r
    # cross-check via the divisor bound: candidate roots a/b need a | 2, b | 1
    for cand in (gauss(1), gauss(-1), gauss(2), gauss(-2), GaussRat(0, 1),
                 GaussRat(0, -1), GaussRat(1, 1), GaussRat(1, -1),
                 GaussRat(-1, 1), GaussRat(-1, -1), GaussRat(0, 2), GaussRat(0, -2)):
        assert not r.eval(cand).is_zero()


@given(st.integers(0, 60))
@settings(deadline=None)
def test_rational_roots_reconstruction(seed):
    rng = random.Random(seed)
    coeffs = [GaussRat(rng.randint(-4, 4), rng.randint(-1, 1)) for _ in range(rng.randint(2, 6))]
    p = UniPoly(coeffs)
    if p.is_zero():
        p = UniPoly([1, 1])
    roots, residual = rational_roots(p)
    rebuilt = residual
    for root, mult in roots:
        rebuilt = rebuilt * UniPoly([-root, GaussRat(1)]) ** mult
    assert rebuilt == p
    for root, _ in roots:
        assert p.eval(root).is_zero()
    if residual.degree() >= 1:
        extra, _ = rational_roots(residual)
        assert extra == []


def test_resultant_order():
    assert bi_resultant_y(X, Y**3).order() == 3
    assert bi_resultant_y(Y, X**2).order() == 2


def test_exact_division_detects_failure():
    with pytest.raises(AlgebraError):
        (X**2 + Y).exact_div(X + 1)
