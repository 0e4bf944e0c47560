"""Synthesized germs realizing the three distinguished blow-up models and
their collapsed towers.

Each template was assembled by prescribing the local models along an
exceptional curve and collapsing it: the first blow-up of the base germs
shows the advertised roster (one Jordan-block point plus two (-1,1)-points;
one saddle-node plus two (-1,2)-points; one (-1,1)-point plus two
saddle-nodes), and each tower germ blows up to the previous stage sitting on
the divisor next to a single (-1,1)-point.  The tests re-derive every one of
these facts through the recognizer.
"""

from __future__ import annotations

from .algebra import BiPoly
from .charts import MeroField, make_mero_field

_X = BiPoly.var_x()
_Y = BiPoly.var_y()


def z_1_11() -> MeroField:
    """Poles of order one on both axes; order-two core with a Jordan point."""
    p = _X**2
    q = _Y**2 * (1 + _Y)
    return make_mero_field(p, q, BiPoly.const(1), _X * _Y)


def z_0_12(d: int = 1) -> MeroField:
    """Poles of order d on both axes; saddle-node plus two (-1,2)-points."""
    if d < 1:
        raise ValueError("d must be positive")
    p = _X * (_X - _Y)
    q = _Y * (_Y - _X + _X**2)
    return make_mero_field(p, q, BiPoly.const(1), (_X * _Y) ** d)


def z_1_00(d: int = 1) -> MeroField:
    """Pole of order d on {y=0}; one (-1,1)-point plus two saddle-nodes."""
    if d < 1:
        raise ValueError("d must be positive")
    p = _X * (_X - _Y)
    q = _Y**3
    return make_mero_field(p, q, BiPoly.const(1), _Y**d)


def z_1_11_tower(n: int) -> MeroField:
    """Collapse stages of the Jordan-point model; n = 0 is the base."""
    if n == 0:
        return z_1_11()
    if n == 1:
        p = _X * (_X + _Y**2 + _Y**3)
        q = _Y**3 * (1 + _Y)
    elif n == 2:
        p = _X * (_X + 2 * _Y**3 + 2 * _Y**4)
        q = _Y**4 * (1 + _Y)
    else:
        raise ValueError("tower stages 0..2 are provided")
    return make_mero_field(p, q, BiPoly.const(1), _X * _Y)


def z_0_12_tower(n: int, d: int = 1) -> MeroField:
    """Collapse stages of the saddle-node model; stage one is the nilpotent
    single-singularity collapse, stage two adds a (-1,1)-point."""
    if d < 1:
        raise ValueError("d must be positive")
    if n == 0:
        return z_0_12(d)
    if n == 1:
        p = _Y + _X**2
        q = _Y**2
        return make_mero_field(p, q, BiPoly.const(1), _Y**d)
    if n == 2:
        p = _X**2 + _X * _Y**2 + _Y**3
        q = _Y**3
        return make_mero_field(p, q, BiPoly.const(1), _Y ** (d + 1))
    raise ValueError("tower stages 0..2 are provided")


def z_1_00_tower(n: int, d: int = 1) -> MeroField:
    """Collapse stages of the double-saddle-node model."""
    if d < 1:
        raise ValueError("d must be positive")
    if n == 0:
        return z_1_00(d)
    if n == 1:
        p = _X * (_X - _Y**2 + _Y**3)
        q = _Y**4
        return make_mero_field(p, q, BiPoly.const(1), _Y ** (d + 1))
    if n == 2:
        p = _X * (_X - _Y**3 + 2 * _Y**4)
        q = _Y**5
        return make_mero_field(p, q, BiPoly.const(1), _Y ** (d + 2))
    raise ValueError("tower stages 0..2 are provided")
