"""Affine polynomial vector fields P dx + Q dy and their saturation X = F*Z."""

from __future__ import annotations

from dataclasses import dataclass

from .algebra import AlgebraError, BiPoly, GaussRat, homogeneous_parts, poly_gcd


class FieldError(Exception):
    pass


@dataclass(frozen=True)
class PolyVectorField:
    """Polynomial field p_comp*d/dx + q_comp*d/dy, not identically zero."""

    p_comp: BiPoly
    q_comp: BiPoly

    def __post_init__(self):
        if self.p_comp.is_zero() and self.q_comp.is_zero():
            raise FieldError("zero vector field")

    def degree(self) -> int:
        return max(self.p_comp.degree(), self.q_comp.degree())

    def order(self) -> int:
        """Lowest degree of a nonvanishing jet at the origin."""
        op = self.p_comp.order()
        oq = self.q_comp.order()
        if op is None:
            return oq
        if oq is None:
            return op
        return min(op, oq)

    def top_component(self) -> "PolyVectorField":
        d = self.degree()
        return PolyVectorField(
            self.p_comp.homogeneous_part(d), self.q_comp.homogeneous_part(d)
        )

    def jet(self, k: int) -> "PolyVectorField":
        return PolyVectorField(
            self.p_comp.truncate_degree(k), self.q_comp.truncate_degree(k)
        )

    def shift(self, a: GaussRat, b: GaussRat) -> "PolyVectorField":
        return PolyVectorField(self.p_comp.shift(a, b), self.q_comp.shift(a, b))

    def scale(self, c) -> "PolyVectorField":
        return PolyVectorField(self.p_comp * c, self.q_comp * c)

    def linear_matrix(self):
        """Linear part at the origin as ((a, b), (c, d)) acting on (x, y)."""
        return (
            (self.p_comp.coeff(1, 0), self.p_comp.coeff(0, 1)),
            (self.q_comp.coeff(1, 0), self.q_comp.coeff(0, 1)),
        )

    def tangent_pairing(self) -> BiPoly:
        """y*P_m - x*Q_m for the lowest jet m; zero iff the jet is radial."""
        m = self.order()
        pm = self.p_comp.homogeneous_part(m)
        qm = self.q_comp.homogeneous_part(m)
        return BiPoly.var_y() * pm - BiPoly.var_x() * qm


@dataclass(frozen=True)
class SaturationResult:
    scalar: BiPoly
    core: PolyVectorField
    scalar_degree: int
    core_degree: int


def saturate(x_field: PolyVectorField) -> SaturationResult:
    """Write X = F*Z with Z of coprime components; F monic in graded-lex."""
    f = poly_gcd(x_field.p_comp, x_field.q_comp)
    if f.is_constant():
        f = BiPoly.const(1)
        core = x_field
    else:
        core = PolyVectorField(
            x_field.p_comp.exact_div(f), x_field.q_comp.exact_div(f)
        )
    return SaturationResult(f, core, f.degree(), core.degree())


def infinity_invariant(x_field: PolyVectorField) -> bool:
    """Whether the induced foliation leaves the line at infinity invariant.

    False exactly when the top homogeneous component is H*(x d/dx + y d/dy),
    i.e. when y*P_d - x*Q_d vanishes identically.
    """
    d = x_field.degree()
    pd = x_field.p_comp.homogeneous_part(d)
    qd = x_field.q_comp.homogeneous_part(d)
    pairing = BiPoly.var_y() * pd - BiPoly.var_x() * qd
    return not pairing.is_zero()


def foliation_order_at(x_field: PolyVectorField, point) -> int:
    """Order of the saturated foliation at a Gaussian-rational point."""
    a, b = (GaussRat.of(point[0]), GaussRat.of(point[1]))
    core = saturate(x_field).core
    local = core.shift(a, b)
    if not local.p_comp.eval(GaussRat(0), GaussRat(0)).is_zero() or not (
        local.q_comp.eval(GaussRat(0), GaussRat(0)).is_zero()
    ):
        return 0
    return local.order()
