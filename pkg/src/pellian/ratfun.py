"""Rational functions in one parameter with exact rational coefficients.

A RatFun is stored as a rational scalar times a quotient of two primitive
integer polynomials that are coprime and have positive leading
coefficients.  Keeping the integer parts primitive lets every gcd run
through the dense integer kernel, and the canonical form makes equality
and hashing structural.
"""

from fractions import Fraction
from math import gcd as _igcd

from . import _kernel as K

VAR = "a"


def _lcm(p, q):
    return p // _igcd(p, q) * q


class RatFun:
    """Element of the field of rational functions over the rationals."""

    __slots__ = ("_s", "_n", "_d")

    def __init__(self, s, n, d):
        # trusted constructor: use _make for unnormalized input
        self._s = s
        self._n = n
        self._d = d

    @staticmethod
    def _make(s, n, d):
        """Normalize scalar * n/d into canonical form."""
        n = K.norm(n)
        d = K.norm(d)
        if not d:
            raise ZeroDivisionError("rational function with zero denominator")
        if not s or not n:
            return RF_ZERO
        cn, n = K.primitive(n)
        cd, d = K.primitive(d)
        s = s * Fraction(cn, cd)
        g = K.gcd(n, d)
        if len(g) > 1:
            n = K.divexact(n, g)
            d = K.divexact(d, g)
        if n[-1] < 0:
            n = K.neg(n)
            s = -s
        if d[-1] < 0:
            d = K.neg(d)
            s = -s
        return RatFun(s, n, d)

    @staticmethod
    def from_rational(x):
        s = Fraction(x)
        if not s:
            return RF_ZERO
        return RatFun(s, (1,), (1,))

    @staticmethod
    def var():
        """The generator of the field."""
        return RatFun(Fraction(1), (0, 1), (1,))

    @staticmethod
    def from_int_polys(n, d=(1,)):
        return RatFun._make(Fraction(1), tuple(n), tuple(d))

    @staticmethod
    def _coerce(x):
        if isinstance(x, RatFun):
            return x
        if isinstance(x, (int, Fraction)):
            return RatFun.from_rational(x)
        return NotImplemented

    # ----- predicates -----

    def __bool__(self):
        return bool(self._s)

    @property
    def is_constant(self):
        return len(self._n) <= 1 and len(self._d) <= 1

    def as_rational(self):
        """The value as a Fraction, or None if it involves the parameter."""
        if self.is_constant:
            return self._s
        return None

    def numerator_poly(self):
        """Integer numerator of a coprime integer-polynomial pair."""
        return K.scale(self._n, self._s.numerator)

    def denominator_poly(self):
        return K.scale(self._d, self._s.denominator)

    # ----- arithmetic -----

    def __add__(self, other):
        other = RatFun._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if not self._s:
            return other
        if not other._s:
            return self
        n1, d1, n2, d2 = self._n, self._d, other._n, other._d
        p1, q1 = self._s.numerator, self._s.denominator
        p2, q2 = other._s.numerator, other._s.denominator
        q = _lcm(q1, q2)
        u1 = p1 * (q // q1)
        u2 = p2 * (q // q2)
        cu = _igcd(u1, u2)
        u1 //= cu
        u2 //= cu
        if d1 == d2:
            inner = K.add(K.scale(n1, u1), K.scale(n2, u2))
            if not inner:
                return RF_ZERO
            den = d1
            g = d1
        else:
            g = K.gcd(d1, d2)
            e1 = K.divexact(d1, g) if len(g) > 1 else d1
            e2 = K.divexact(d2, g) if len(g) > 1 else d2
            inner = K.add(K.scale(K.mul(n1, e2), u1), K.scale(K.mul(n2, e1), u2))
            if not inner:
                return RF_ZERO
            den = K.mul(g, K.mul(e1, e2))
        # any common factor of the sum and the denominator divides g
        if len(g) > 1:
            h = K.gcd(inner, g)
            if len(h) > 1:
                inner = K.divexact(inner, h)
                den = K.divexact(den, h)
        c, inner = K.primitive(inner)
        s = Fraction(cu * c, q)
        if inner[-1] < 0:
            inner = K.neg(inner)
            s = -s
        return RatFun(s, inner, den)

    __radd__ = __add__

    def __neg__(self):
        if not self._s:
            return self
        return RatFun(-self._s, self._n, self._d)

    def __sub__(self, other):
        other = RatFun._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self.__add__(-other)

    def __rsub__(self, other):
        other = RatFun._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other.__add__(-self)

    def __mul__(self, other):
        other = RatFun._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if not self._s or not other._s:
            return RF_ZERO
        n1, d1, n2, d2 = self._n, self._d, other._n, other._d
        g1 = K.gcd(n1, d2)
        g2 = K.gcd(n2, d1)
        if len(g1) > 1:
            n1 = K.divexact(n1, g1)
            d2 = K.divexact(d2, g1)
        if len(g2) > 1:
            n2 = K.divexact(n2, g2)
            d1 = K.divexact(d1, g2)
        return RatFun(self._s * other._s, K.mul(n1, n2), K.mul(d1, d2))

    __rmul__ = __mul__

    def reciprocal(self):
        if not self._s:
            raise ZeroDivisionError("reciprocal of zero")
        s = 1 / self._s
        n, d = self._d, self._n
        if d[-1] < 0:
            n = K.neg(n)
            d = K.neg(d)
            s = -s
        return RatFun(s, n, d)

    def __truediv__(self, other):
        other = RatFun._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self.__mul__(other.reciprocal())

    def __rtruediv__(self, other):
        other = RatFun._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other.__mul__(self.reciprocal())

    def __pow__(self, k):
        if not isinstance(k, int):
            return NotImplemented
        if k < 0:
            return self.reciprocal() ** (-k)
        if k == 0:
            return RF_ONE
        # reduced fractions stay reduced under powers
        n, d = self._n, self._d
        rn, rd = n, d
        for _ in range(k - 1):
            rn = K.mul(rn, n)
            rd = K.mul(rd, d)
        return RatFun(self._s ** k, rn, rd)

    # ----- structure -----

    def __eq__(self, other):
        other = RatFun._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return (self._s, self._n, self._d) == (other._s, other._n, other._d)

    def __hash__(self):
        return hash((self._s, self._n, self._d))

    def evaluate(self, x):
        """Exact value at a rational point; raises on a pole."""
        x = Fraction(x)
        p, q = x.numerator, x.denominator
        nv = K.eval_hom(self._n, p, q)
        dv = K.eval_hom(self._d, p, q)
        if dv == 0:
            raise ZeroDivisionError("evaluation at a pole")
        dn = len(self._n) - 1
        dd = len(self._d) - 1
        return self._s * Fraction(nv, dv) * Fraction(q) ** (dd - dn)

    def is_square(self):
        s = self._s
        if s < 0:
            return False
        if s == 0:
            return True
        if _sqrt_int(s.numerator) is None or _sqrt_int(s.denominator) is None:
            return False
        return K.sqrt(self._n) is not None and K.sqrt(self._d) is not None

    def sqrt(self):
        """Square root within the field, or None."""
        s = self._s
        if s == 0:
            return RF_ZERO
        if s < 0:
            return None
        rp = _sqrt_int(s.numerator)
        rq = _sqrt_int(s.denominator)
        rn = K.sqrt(self._n)
        rd = K.sqrt(self._d)
        if None in (rp, rq, rn, rd):
            return None
        return RatFun(Fraction(rp, rq), rn, rd)

    def __str__(self):
        num = format_int_poly(self.numerator_poly(), VAR)
        if self._d == (1,):
            if self._s.denominator == 1:
                return num
            return "({})/{}".format(num, self._s.denominator) \
                if len(self._n) > 1 else str(self._s)
        den = format_int_poly(self.denominator_poly(), VAR)
        if len(self._n) > 1 or self._s.numerator < 0:
            num = "(" + num + ")"
        if len(self._d) > 1:
            den = "(" + den + ")"
        return num + "/" + den

    def __repr__(self):
        return "RatFun({})".format(self)


RF_ZERO = RatFun(Fraction(0), (1,), (1,))
RF_ONE = RatFun(Fraction(1), (1,), (1,))


def _sqrt_int(n):
    from math import isqrt

    r = isqrt(n)
    return r if r * r == n else None


def format_int_poly(coeffs, var):
    """Render an ascending integer coefficient tuple, highest degree first."""
    if not any(coeffs):
        return "0"
    parts = []
    for i in range(len(coeffs) - 1, -1, -1):
        c = coeffs[i]
        if not c:
            continue
        if i == 0:
            term = str(abs(c))
        elif abs(c) == 1:
            term = var if i == 1 else "{}^{}".format(var, i)
        else:
            term = "{}*{}".format(abs(c), var) if i == 1 \
                else "{}*{}^{}".format(abs(c), var, i)
        if not parts:
            parts.append(term if c > 0 else "-" + term)
        else:
            parts.append(("+ " if c > 0 else "- ") + term)
    return " ".join(parts)
