"""Exact arithmetic over the Gaussian rationals and sparse polynomial algebra.

Everything downstream (charts, blow-ups, indices) reduces to computations in
Q(i)[x,y], so this module is deliberately self-contained: rationals come from
the standard library, Gaussian rationals and the two polynomial types are
implemented here, and root finding works over the Gaussian integers so that
non-real singular points are found exactly.
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Iterable, Iterator, Optional


class AlgebraError(Exception):
    pass


# ---------------------------------------------------------------------------
# Gaussian rationals


class GaussRat:
    """Element of Q(i), stored as exact real and imaginary Fractions."""

    __slots__ = ("re", "im")

    def __init__(self, re=0, im=0):
        object.__setattr__(self, "re", Fraction(re))
        object.__setattr__(self, "im", Fraction(im))

    def __setattr__(self, name, value):
        raise AttributeError("GaussRat is immutable")

    # -- constructors ------------------------------------------------------

    @staticmethod
    def of(value) -> "GaussRat":
        if isinstance(value, GaussRat):
            return value
        return GaussRat(value)

    # -- predicates --------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.re and not self.im

    def is_rational(self) -> bool:
        return not self.im

    def is_integer(self) -> bool:
        return not self.im and self.re.denominator == 1

    # -- arithmetic --------------------------------------------------------

    def __add__(self, other):
        other = GaussRat.of(other)
        return GaussRat(self.re + other.re, self.im + other.im)

    __radd__ = __add__

    def __neg__(self):
        return GaussRat(-self.re, -self.im)

    def __sub__(self, other):
        return self + (-GaussRat.of(other))

    def __rsub__(self, other):
        return GaussRat.of(other) + (-self)

    def __mul__(self, other):
        other = GaussRat.of(other)
        return GaussRat(
            self.re * other.re - self.im * other.im,
            self.re * other.im + self.im * other.re,
        )

    __rmul__ = __mul__

    def conj(self) -> "GaussRat":
        return GaussRat(self.re, -self.im)

    def norm(self) -> Fraction:
        return self.re * self.re + self.im * self.im

    def inv(self) -> "GaussRat":
        n = self.norm()
        if not n:
            raise ZeroDivisionError("inverse of zero Gaussian rational")
        return GaussRat(self.re / n, -self.im / n)

    def __truediv__(self, other):
        return self * GaussRat.of(other).inv()

    def __rtruediv__(self, other):
        return GaussRat.of(other) * self.inv()

    def __pow__(self, k: int):
        if k < 0:
            return self.inv() ** (-k)
        out = ONE
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    # -- comparison / hashing ---------------------------------------------

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = GaussRat(other)
        if not isinstance(other, GaussRat):
            return NotImplemented
        return self.re == other.re and self.im == other.im

    def __hash__(self):
        return hash((self.re, self.im))

    def sort_key(self):
        return (self.re, self.im)

    def __repr__(self):
        return f"GaussRat({self.re!s}, {self.im!s})"

    def __str__(self):
        if not self.im:
            return str(self.re)
        if not self.re:
            return f"{self.im}i"
        sign = "+" if self.im > 0 else "-"
        return f"({self.re}{sign}{abs(self.im)}i)"


ZERO = GaussRat(0)
ONE = GaussRat(1)
I_UNIT = GaussRat(0, 1)


def frac_sqrt(q: Fraction) -> Optional[Fraction]:
    """Exact square root of a non-negative rational, or None."""
    if q < 0:
        return None
    num, den = q.numerator, q.denominator
    rn, rd = math.isqrt(num), math.isqrt(den)
    if rn * rn == num and rd * rd == den:
        return Fraction(rn, rd)
    return None


def gauss_sqrt(z: GaussRat) -> Optional[GaussRat]:
    """A square root of z in Q(i) if one exists, else None."""
    if z.is_zero():
        return ZERO
    if not z.im:
        r = frac_sqrt(z.re)
        if r is not None:
            return GaussRat(r)
        r = frac_sqrt(-z.re)
        if r is not None:
            return GaussRat(0, r)
        return None
    n = frac_sqrt(z.norm())
    if n is None:
        return None
    c2 = (z.re + n) / 2
    c = frac_sqrt(c2)
    if c is None or not c:
        return None
    d = z.im / (2 * c)
    return GaussRat(c, d)


# ---------------------------------------------------------------------------
# Gaussian integers: divisor enumeration for the rational root search


def _sqrt_minus_one_mod(p: int) -> int:
    """r with r*r = -1 mod p, for prime p = 1 mod 4."""
    for a in range(2, p):
        r = pow(a, (p - 1) // 4, p)
        if (r * r) % p == p - 1:
            return r
    raise AlgebraError(f"no sqrt(-1) mod {p}")


def _gauss_int_divmod(a, b):
    # a, b are (re, im) integer pairs; rounded division in Z[i]
    ar, ai = a
    br, bi = b
    n = br * br + bi * bi
    qr = (ar * br + ai * bi)
    qi = (ai * br - ar * bi)
    # round to nearest integer
    qr = (2 * qr + n) // (2 * n) if qr >= 0 else -((-2 * qr + n) // (2 * n))
    qi = (2 * qi + n) // (2 * n) if qi >= 0 else -((-2 * qi + n) // (2 * n))
    rr = ar - (qr * br - qi * bi)
    ri = ai - (qr * bi + qi * br)
    return (qr, qi), (rr, ri)


def _gauss_int_gcd(a, b):
    while b != (0, 0):
        _, r = _gauss_int_divmod(a, b)
        a, b = b, r
    return a


def _factor_int(n: int) -> dict:
    n = abs(n)
    out: dict[int, int] = {}
    d = 2
    while d * d <= n:
        while n % d == 0:
            out[d] = out.get(d, 0) + 1
            n //= d
        d += 1 if d == 2 else 2
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out


def gauss_int_divisors(g: tuple) -> list:
    """All divisors of the Gaussian integer g = (re, im), one per unit class."""
    if g == (0, 0):
        raise AlgebraError("divisors of zero")
    norm = g[0] * g[0] + g[1] * g[1]
    primes = []  # (gaussian prime, exponent in g)
    for p, _ in _factor_int(norm).items():
        if p == 2:
            pi = (1, 1)
        elif p % 4 == 3:
            pi = (p, 0)
        else:
            r = _sqrt_minus_one_mod(p)
            pi = _gauss_int_gcd((p, 0), (r, 1))
        # exponent of pi (and its conjugate, as a separate prime) in g
        for q in ({pi, (pi[0], -pi[1])} if pi[1] else {pi}):
            e = 0
            h = g
            while True:
                quo, rem = _gauss_int_divmod(h, q)
                if rem != (0, 0):
                    break
                h = quo
                e += 1
            if e:
                primes.append((q, e))
    divisors = [(1, 0)]
    for q, e in primes:
        grown = []
        for d in divisors:
            cur = d
            for _ in range(e + 1):
                grown.append(cur)
                cur = (cur[0] * q[0] - cur[1] * q[1], cur[0] * q[1] + cur[1] * q[0])
        divisors = grown
    return divisors


# ---------------------------------------------------------------------------
# Univariate polynomials over Q(i)


class UniPoly:
    """Dense univariate polynomial, coefficients lowest degree first."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable = ()):
        cs = [GaussRat.of(c) for c in coeffs]
        while cs and cs[-1].is_zero():
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))

    def __setattr__(self, name, value):
        raise AttributeError("UniPoly is immutable")

    @staticmethod
    def const(c) -> "UniPoly":
        return UniPoly([GaussRat.of(c)])

    @staticmethod
    def x_power(k: int, c=1) -> "UniPoly":
        return UniPoly([ZERO] * k + [GaussRat.of(c)])

    def is_zero(self) -> bool:
        return not self.coeffs

    def degree(self) -> int:
        return len(self.coeffs) - 1  # -1 for the zero polynomial

    def order(self) -> Optional[int]:
        """Valuation at 0, or None for the zero polynomial."""
        for k, c in enumerate(self.coeffs):
            if not c.is_zero():
                return k
        return None

    def lead(self) -> GaussRat:
        if not self.coeffs:
            raise AlgebraError("leading coefficient of zero")
        return self.coeffs[-1]

    def __getitem__(self, k: int) -> GaussRat:
        if 0 <= int(k) < len(self.coeffs):
            return self.coeffs[int(k)]
        return ZERO

    def __eq__(self, other):
        return isinstance(other, UniPoly) and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __add__(self, other):
        n = max(len(self.coeffs), len(other.coeffs))
        return UniPoly([self[k] + other[k] for k in range(n)])

    def __neg__(self):
        return UniPoly([-c for c in self.coeffs])

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction, GaussRat)):
            c = GaussRat.of(other)
            return UniPoly([a * c for a in self.coeffs])
        if self.is_zero() or other.is_zero():
            return UniPoly()
        out = [ZERO] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a.is_zero():
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] = out[i + j] + a * b
        return UniPoly(out)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        out = UniPoly([ONE])
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def scale(self, c) -> "UniPoly":
        return self * GaussRat.of(c)

    def monic(self) -> "UniPoly":
        if self.is_zero():
            return self
        return self.scale(self.lead().inv())

    def divmod(self, other: "UniPoly"):
        if other.is_zero():
            raise ZeroDivisionError("division by zero polynomial")
        rem = list(self.coeffs)
        q = [ZERO] * max(0, len(rem) - len(other.coeffs) + 1)
        dlead = other.lead().inv()
        for k in range(len(rem) - len(other.coeffs), -1, -1):
            c = rem[k + len(other.coeffs) - 1] * dlead
            if c.is_zero():
                continue
            q[k] = c
            for j, b in enumerate(other.coeffs):
                rem[k + j] = rem[k + j] - c * b
        return UniPoly(q), UniPoly(rem)

    def __floordiv__(self, other):
        return self.divmod(other)[0]

    def __mod__(self, other):
        return self.divmod(other)[1]

    def exact_div(self, other: "UniPoly") -> "UniPoly":
        q, r = self.divmod(other)
        if not r.is_zero():
            raise AlgebraError("inexact univariate division")
        return q

    def gcd(self, other: "UniPoly") -> "UniPoly":
        a, b = self, other
        while not b.is_zero():
            a, b = b, a % b
        return a.monic() if not a.is_zero() else a

    def derivative(self) -> "UniPoly":
        return UniPoly([c * k for k, c in enumerate(self.coeffs)][1:])

    def eval(self, z: GaussRat) -> GaussRat:
        out = ZERO
        for c in reversed(self.coeffs):
            out = out * z + c
        return out

    def compose(self, other: "UniPoly") -> "UniPoly":
        out = UniPoly()
        for c in reversed(self.coeffs):
            out = out * other + UniPoly.const(c)
        return out

    def shift(self, a: GaussRat) -> "UniPoly":
        """p(x + a)."""
        return self.compose(UniPoly([a, ONE]))

    def truncate(self, order: int) -> "UniPoly":
        return UniPoly(self.coeffs[: order + 1])

    def series_inverse(self, order: int) -> "UniPoly":
        """Inverse power series mod x^(order+1); constant term must be nonzero."""
        if self.order() != 0:
            raise AlgebraError("series inverse needs a unit constant term")
        c0 = self.coeffs[0].inv()
        out = [c0]
        for k in range(1, order + 1):
            acc = ZERO
            for j in range(1, min(k, len(self.coeffs) - 1) + 1):
                acc = acc + self[j] * out[k - j]
            out.append(-c0 * acc)
        return UniPoly(out)

    def __repr__(self):
        return f"UniPoly({[str(c) for c in self.coeffs]})"


def uni_resultant(p: UniPoly, q: UniPoly) -> GaussRat:
    """Resultant of two univariate polynomials via Sylvester elimination."""
    n, m = p.degree(), q.degree()
    if n < 0 or m < 0:
        return ZERO
    if n == 0:
        return p.coeffs[0] ** m
    if m == 0:
        return q.coeffs[0] ** n
    size = n + m
    rows = []
    for k in range(m):
        row = [ZERO] * size
        for j, c in enumerate(reversed(p.coeffs)):
            row[k + j] = c
        rows.append(row)
    for k in range(n):
        row = [ZERO] * size
        for j, c in enumerate(reversed(q.coeffs)):
            row[k + j] = c
        rows.append(row)
    det = ONE
    for col in range(size):
        piv = None
        for r in range(col, size):
            if not rows[r][col].is_zero():
                piv = r
                break
        if piv is None:
            return ZERO
        if piv != col:
            rows[col], rows[piv] = rows[piv], rows[col]
            det = -det
        det = det * rows[col][col]
        inv = rows[col][col].inv()
        for r in range(col + 1, size):
            if rows[r][col].is_zero():
                continue
            f = rows[r][col] * inv
            for c2 in range(col, size):
                rows[r][c2] = rows[r][c2] - f * rows[col][c2]
    return det


def rational_roots(p: UniPoly):
    """All Gaussian-rational roots of p with multiplicities.

    Returns (roots, residual) where roots is a list of (root, multiplicity)
    sorted deterministically and residual has no root in Q(i); multiplying
    (x - root)^mult over the roots times residual recovers p exactly.
    """
    if p.is_zero():
        raise AlgebraError("roots of the zero polynomial")
    roots = []
    work = p
    k = work.order()
    if k:
        roots.append((ZERO, k))
        work = UniPoly(work.coeffs[k:])
    if work.degree() >= 1:
        # clear denominators to Z[i]
        denoms = 1
        for c in work.coeffs:
            denoms = denoms * c.re.denominator // math.gcd(denoms, c.re.denominator)
            denoms = denoms * c.im.denominator // math.gcd(denoms, c.im.denominator)
        zi = [( (c.re * denoms).numerator, (c.im * denoms).numerator ) for c in work.coeffs]
        c0, cn = zi[0], zi[-1]
        units = [(1, 0), (0, 1), (-1, 0), (0, -1)]
        candidates = set()
        for num in gauss_int_divisors(c0):
            for den in gauss_int_divisors(cn):
                dn = den[0] * den[0] + den[1] * den[1]
                for u in units:
                    a = (num[0] * u[0] - num[1] * u[1], num[0] * u[1] + num[1] * u[0])
                    # a / den = a * conj(den) / norm(den)
                    re = Fraction(a[0] * den[0] + a[1] * den[1], dn)
                    im = Fraction(a[1] * den[0] - a[0] * den[1], dn)
                    candidates.add((re, im))
        for re, im in sorted(candidates):
            z = GaussRat(re, im)
            mult = 0
            while not work.is_zero() and work.eval(z).is_zero() and work.degree() >= 1:
                work = work.exact_div(UniPoly([-z, ONE]))
                mult += 1
            if mult:
                roots.append((z, mult))
    roots.sort(key=lambda rm: rm[0].sort_key())
    return roots, work


# ---------------------------------------------------------------------------
# Sparse bivariate polynomials over Q(i)


def _grlex_key(mono):
    i, j = mono
    return (i + j, i)


class BiPoly:
    """Sparse polynomial in Q(i)[x, y]: exponent pair -> nonzero coefficient."""

    __slots__ = ("terms",)

    def __init__(self, terms: Optional[dict] = None):
        clean = {}
        if terms:
            for mono, c in terms.items():
                c = GaussRat.of(c)
                if not c.is_zero():
                    clean[(int(mono[0]), int(mono[1]))] = c
        object.__setattr__(self, "terms", clean)

    def __setattr__(self, name, value):
        raise AttributeError("BiPoly is immutable")

    # -- constructors ------------------------------------------------------

    @staticmethod
    def const(c) -> "BiPoly":
        return BiPoly({(0, 0): GaussRat.of(c)})

    @staticmethod
    def mono(i: int, j: int, c=1) -> "BiPoly":
        return BiPoly({(i, j): GaussRat.of(c)})

    @staticmethod
    def var_x() -> "BiPoly":
        return BiPoly.mono(1, 0)

    @staticmethod
    def var_y() -> "BiPoly":
        return BiPoly.mono(0, 1)

    @staticmethod
    def from_uni(p: UniPoly, var: str = "x") -> "BiPoly":
        if var == "x":
            return BiPoly({(k, 0): c for k, c in enumerate(p.coeffs)})
        return BiPoly({(0, k): c for k, c in enumerate(p.coeffs)})

    # -- predicates & structure -------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def is_constant(self) -> bool:
        return not self.terms or set(self.terms) == {(0, 0)}

    def is_monomial(self) -> bool:
        return len(self.terms) == 1

    def degree(self) -> int:
        if not self.terms:
            return -1
        return max(i + j for i, j in self.terms)

    def order(self) -> Optional[int]:
        """Lowest total degree of a term; None for zero."""
        if not self.terms:
            return None
        return min(i + j for i, j in self.terms)

    def ord_x(self) -> Optional[int]:
        if not self.terms:
            return None
        return min(i for i, _ in self.terms)

    def ord_y(self) -> Optional[int]:
        if not self.terms:
            return None
        return min(j for _, j in self.terms)

    def coeff(self, i: int, j: int) -> GaussRat:
        return self.terms.get((i, j), ZERO)

    def lead_mono(self):
        if not self.terms:
            raise AlgebraError("leading term of zero")
        return max(self.terms, key=_grlex_key)

    def lead_coeff(self) -> GaussRat:
        return self.terms[self.lead_mono()]

    # -- arithmetic --------------------------------------------------------

    def __add__(self, other):
        if isinstance(other, (int, Fraction, GaussRat)):
            other = BiPoly.const(other)
        out = dict(self.terms)
        for m, c in other.terms.items():
            s = out.get(m, ZERO) + c
            if s.is_zero():
                out.pop(m, None)
            else:
                out[m] = s
        return BiPoly(out)

    __radd__ = __add__

    def __neg__(self):
        return BiPoly({m: -c for m, c in self.terms.items()})

    def __sub__(self, other):
        if isinstance(other, (int, Fraction, GaussRat)):
            other = BiPoly.const(other)
        return self + (-other)

    def __rsub__(self, other):
        return BiPoly.const(other) + (-self)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction, GaussRat)):
            c = GaussRat.of(other)
            if c.is_zero():
                return BiPoly()
            return BiPoly({m: a * c for m, a in self.terms.items()})
        out: dict = {}
        for (i1, j1), a in self.terms.items():
            for (i2, j2), b in other.terms.items():
                m = (i1 + i2, j1 + j2)
                s = out.get(m, ZERO) + a * b
                if s.is_zero():
                    out.pop(m, None)
                else:
                    out[m] = s
        return BiPoly(out)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        out = BiPoly.const(1)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def __eq__(self, other):
        return isinstance(other, BiPoly) and self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    # -- calculus & evaluation ---------------------------------------------

    def dx(self) -> "BiPoly":
        return BiPoly({(i - 1, j): c * i for (i, j), c in self.terms.items() if i})

    def dy(self) -> "BiPoly":
        return BiPoly({(i, j - 1): c * j for (i, j), c in self.terms.items() if j})

    def eval(self, x: GaussRat, y: GaussRat) -> GaussRat:
        out = ZERO
        for (i, j), c in self.terms.items():
            out = out + c * x**i * y**j
        return out

    def subst(self, px: "BiPoly", py: "BiPoly") -> "BiPoly":
        """p(px, py) by iterated Horner in x then y."""
        by_i: dict[int, dict] = {}
        for (i, j), c in self.terms.items():
            by_i.setdefault(i, {})[j] = c
        # Horner in x over polynomials in y
        max_i = max((i for i, _ in self.terms), default=-1)
        acc = BiPoly()
        for i in range(max_i, -1, -1):
            acc = acc * px
            row = by_i.get(i)
            if row:
                # row is a polynomial in y; Horner in y
                max_j = max(row)
                acc_y = BiPoly()
                for j in range(max_j, -1, -1):
                    acc_y = acc_y * py
                    if j in row:
                        acc_y = acc_y + BiPoly.const(row[j])
                acc = acc + acc_y
        return acc

    def shift(self, a: GaussRat, b: GaussRat) -> "BiPoly":
        """p(x + a, y + b)."""
        return self.subst(
            BiPoly({(1, 0): ONE, (0, 0): a}), BiPoly({(0, 1): ONE, (0, 0): b})
        )

    def eval_y0(self) -> UniPoly:
        """Restriction x -> p(x, 0)."""
        n = max((i for (i, j) in self.terms if j == 0), default=-1)
        return UniPoly([self.coeff(i, 0) for i in range(n + 1)])

    def eval_x0(self) -> UniPoly:
        n = max((j for (i, j) in self.terms if i == 0), default=-1)
        return UniPoly([self.coeff(0, j) for j in range(n + 1)])

    def swap(self) -> "BiPoly":
        """p(y, x)."""
        return BiPoly({(j, i): c for (i, j), c in self.terms.items()})

    def truncate_degree(self, n: int) -> "BiPoly":
        return BiPoly({m: c for m, c in self.terms.items() if m[0] + m[1] <= n})

    def homogeneous_part(self, k: int) -> "BiPoly":
        return BiPoly({m: c for m, c in self.terms.items() if m[0] + m[1] == k})

    # -- conversions --------------------------------------------------------

    def y_coeffs(self) -> list:
        """Coefficients as UniPoly in x, index = power of y."""
        if not self.terms:
            return []
        nj = max(j for _, j in self.terms)
        rows: list[dict] = [{} for _ in range(nj + 1)]
        for (i, j), c in self.terms.items():
            rows[j][i] = c
        out = []
        for row in rows:
            n = max(row, default=-1)
            out.append(UniPoly([row.get(i, ZERO) for i in range(n + 1)]))
        return out

    @staticmethod
    def from_y_coeffs(rows: list) -> "BiPoly":
        terms = {}
        for j, p in enumerate(rows):
            for i, c in enumerate(p.coeffs):
                if not c.is_zero():
                    terms[(i, j)] = c
        return BiPoly(terms)

    # -- division ------------------------------------------------------------

    def exact_div(self, other: "BiPoly") -> "BiPoly":
        """Exact quotient self/other; raises if the division is not exact."""
        if other.is_zero():
            raise ZeroDivisionError("division by zero polynomial")
        rem = self
        q: dict = {}
        lm = other.lead_mono()
        lc_inv = other.lead_coeff().inv()
        while not rem.is_zero():
            rm = rem.lead_mono()
            di, dj = rm[0] - lm[0], rm[1] - lm[1]
            if di < 0 or dj < 0:
                raise AlgebraError("inexact polynomial division")
            c = rem.terms[rm] * lc_inv
            q[(di, dj)] = c
            rem = rem - BiPoly.mono(di, dj, c) * other
        return BiPoly(q)

    def divides(self, other: "BiPoly") -> bool:
        try:
            other.exact_div(self)
            return True
        except AlgebraError:
            return False

    def monic_grlex(self) -> "BiPoly":
        """Scale so the graded-lex (x-first) leading coefficient is 1."""
        if self.is_zero():
            return self
        return self * self.lead_coeff().inv()

    def __repr__(self):
        if not self.terms:
            return "BiPoly(0)"
        bits = []
        for m in sorted(self.terms, key=_grlex_key):
            bits.append(f"{self.terms[m]}*x^{m[0]}*y^{m[1]}")
        return "BiPoly(" + " + ".join(bits) + ")"


# ---------------------------------------------------------------------------
# Rational functions in two variables; used for exact chart transport


class RatPoly:
    """Quotient of two BiPoly, kept reduced; denominator never zero."""

    __slots__ = ("num", "den")

    def __init__(self, num: BiPoly, den: Optional[BiPoly] = None, reduce: bool = True):
        if den is None:
            den = BiPoly.const(1)
        if den.is_zero():
            raise ZeroDivisionError("rational function with zero denominator")
        if num.is_zero():
            den = BiPoly.const(1)
        elif reduce:
            g = poly_gcd(num, den)
            if not g.is_constant():
                num = num.exact_div(g)
                den = den.exact_div(g)
        if not den.is_constant():
            lc = den.lead_coeff().inv()
            num, den = num * lc, den * lc
        elif den.coeff(0, 0) != ONE:
            lc = den.coeff(0, 0).inv()
            num, den = num * lc, BiPoly.const(1)
        object.__setattr__(self, "num", num)
        object.__setattr__(self, "den", den)

    def __setattr__(self, name, value):
        raise AttributeError("RatPoly is immutable")

    @staticmethod
    def of(p) -> "RatPoly":
        if isinstance(p, RatPoly):
            return p
        if isinstance(p, BiPoly):
            return RatPoly(p)
        return RatPoly(BiPoly.const(p))

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def __add__(self, other):
        other = RatPoly.of(other)
        return RatPoly(
            self.num * other.den + other.num * self.den, self.den * other.den
        )

    __radd__ = __add__

    def __neg__(self):
        return RatPoly(-self.num, self.den, reduce=False)

    def __sub__(self, other):
        return self + (-RatPoly.of(other))

    def __rsub__(self, other):
        return RatPoly.of(other) + (-self)

    def __mul__(self, other):
        other = RatPoly.of(other)
        return RatPoly(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = RatPoly.of(other)
        if other.is_zero():
            raise ZeroDivisionError("division by zero rational function")
        return RatPoly(self.num * other.den, self.den * other.num)

    def __pow__(self, k: int):
        if k < 0:
            return RatPoly(self.den, self.num) ** (-k)
        return RatPoly(self.num**k, self.den**k, reduce=False)

    def __eq__(self, other):
        if not isinstance(other, RatPoly):
            return NotImplemented
        return self.num == other.num and self.den == other.den

    def __repr__(self):
        return f"RatPoly({self.num!r} / {self.den!r})"


def rat_subst(p: BiPoly, fx: RatPoly, fy: RatPoly) -> RatPoly:
    """p(fx, fy) as a rational function, by Horner in x then y."""
    by_i: dict[int, dict] = {}
    for (i, j), c in p.terms.items():
        by_i.setdefault(i, {})[j] = c
    max_i = max((i for i, _ in p.terms), default=-1)
    acc = RatPoly(BiPoly())
    for i in range(max_i, -1, -1):
        acc = acc * fx
        row = by_i.get(i)
        if row:
            max_j = max(row)
            acc_y = RatPoly(BiPoly())
            for j in range(max_j, -1, -1):
                acc_y = acc_y * fy
                if j in row:
                    acc_y = acc_y + RatPoly(BiPoly.const(row[j]))
            acc = acc + acc_y
    return acc


# ---------------------------------------------------------------------------
# gcd of bivariate polynomials: primitive remainder sequence in y over Q(i)[x]


def _content_x(rows: list) -> UniPoly:
    g = UniPoly()
    for p in rows:
        if not p.is_zero():
            g = g.gcd(p)
            if g.degree() == 0:
                break
    return g


def _primitive_in_y(p: BiPoly):
    rows = p.y_coeffs()
    cont = _content_x(rows)
    if cont.is_zero():
        return UniPoly(), p
    prim = BiPoly.from_y_coeffs([r.exact_div(cont) for r in rows])
    return cont, prim


def _pseudo_rem_y(a: BiPoly, b: BiPoly) -> BiPoly:
    """Pseudo-remainder of a by b viewed in (Q(i)[x])[y]."""
    ra = a.y_coeffs()
    rb = b.y_coeffs()
    db = len(rb) - 1
    lb = rb[-1]
    work = ra
    while len(work) - 1 >= db and any(not r.is_zero() for r in work):
        while work and work[-1].is_zero():
            work.pop()
        if len(work) - 1 < db:
            break
        da = len(work) - 1
        la = work[-1]
        # work = lb * work - la * y^(da-db) * b
        new = [r * lb for r in work]
        for k, rbk in enumerate(rb):
            idx = da - db + k
            new[idx] = new[idx] - la * rbk
        new.pop()
        work = new
    return BiPoly.from_y_coeffs(work)


def poly_gcd(a: BiPoly, b: BiPoly) -> BiPoly:
    """gcd in Q(i)[x,y], normalized monic in graded-lex (x before y) order."""
    if a.is_zero() and b.is_zero():
        raise AlgebraError("gcd of zero pair")
    if a.is_zero():
        return b.monic_grlex()
    if b.is_zero():
        return a.monic_grlex()

    da = max(j for _, j in a.terms)
    db = max(j for _, j in b.terms)
    if da == 0 and db == 0:
        # both univariate in x
        ga = _content_x(a.y_coeffs())
        gb = _content_x(b.y_coeffs())
        return BiPoly.from_uni(ga.gcd(gb), "x").monic_grlex()
    if da < db:
        a, b, da, db = b, a, db, da

    cont_a, prim_a = _primitive_in_y(a)
    cont_b, prim_b = _primitive_in_y(b)
    cont = cont_a.gcd(cont_b)

    f, g = prim_a, prim_b
    while True:
        if g.is_zero():
            h = f
            break
        dg = max(j for _, j in g.terms) if g.terms else -1
        if dg == 0:
            # g is a unit times content already removed -> coprime in y
            h = BiPoly.const(1)
            break
        r = _pseudo_rem_y(f, g)
        if r.is_zero():
            h = g
            break
        _, r = _primitive_in_y(r)
        f, g = g, r
    _, h = _primitive_in_y(h)
    out = h * BiPoly.from_uni(cont, "x")
    return out.monic_grlex()


def homogeneous_parts(p: BiPoly) -> list:
    """[(degree, part)] ascending; parts sum to p; empty for zero."""
    buckets: dict[int, dict] = {}
    for (i, j), c in p.terms.items():
        buckets.setdefault(i + j, {})[(i, j)] = c
    return [(k, BiPoly(buckets[k])) for k in sorted(buckets)]


def bi_resultant_y(p: BiPoly, q: BiPoly) -> UniPoly:
    """Resultant of p, q with respect to y, as a polynomial in x.

    Computed by evaluation at rational sample points and Lagrange
    interpolation; sample points where a leading y-coefficient vanishes are
    skipped, which keeps every evaluation an honest specialization.
    """
    rp, rq = p.y_coeffs(), q.y_coeffs()
    if not rp or not rq:
        return UniPoly()
    dp, dq = len(rp) - 1, len(rq) - 1
    if dp == 0 and dq == 0:
        return UniPoly([ONE])
    bound = dp * max((r.degree() for r in rq), default=0) + dq * max(
        (r.degree() for r in rp), default=0
    )
    lead_p, lead_q = rp[-1], rq[-1]
    samples = []
    k = 0
    while len(samples) < bound + 1:
        x0 = GaussRat(k)
        k += 1
        if lead_p.eval(x0).is_zero() or lead_q.eval(x0).is_zero():
            continue
        pu = UniPoly([r.eval(x0) for r in rp])
        qu = UniPoly([r.eval(x0) for r in rq])
        samples.append((x0, uni_resultant(pu, qu)))
    # Lagrange interpolation
    out = UniPoly()
    for i, (xi, vi) in enumerate(samples):
        num = UniPoly([ONE])
        den = ONE
        for j, (xj, _) in enumerate(samples):
            if i == j:
                continue
            num = num * UniPoly([-xj, ONE])
            den = den * (xi - xj)
        out = out + num * (vi / den)
    return out
