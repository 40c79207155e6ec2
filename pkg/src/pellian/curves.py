"""Elliptic-curve side of the classification.

A monic square-free quartic d corresponds to a marked point on the
Jacobian of y^2 = d(x): the depressed form x^4 - 6Ax^2 - 8Bx + C maps to
the point (A, B) on a short Weierstrass curve.  Quartics whose Pell
equation is solvable are exactly those whose marked point is torsion, so
the search is organized around the one-parameter curves with a rational
point of fixed order m (Tate normal form, parametrized for m = 4..10, 12).

Everything here is exact: coefficients are Fractions or rational
functions of the parameter `a`, and the group law is the chord-tangent
construction with no shortcuts.
"""

from fractions import Fraction

from .errors import DomainError, DegenerateParameterError, TruncationError
from .fields import QQ, QA
from .ratfun import RatFun, format_int_poly
from .poly import Poly

TORSION_ORDERS = (4, 5, 6, 7, 8, 9, 10, 12)

# generic cf period for each torsion order: 2(m-1) when m is even, m-1 when odd
GENERIC_PERIODS = {4: 6, 5: 4, 6: 10, 7: 6, 8: 14, 9: 8, 10: 18, 12: 22}


def _field_for(x):
    if isinstance(x, RatFun):
        return QA
    return QQ


class TateCurve:
    """y^2 + (1-c)xy - by = x^3 - bx^2 with the marked point (0,0).

    The coefficients live in a common field (rationals, or rational
    functions of the parameter).  Construction rejects singular curves.
    """

    __slots__ = ("fld", "b", "c")

    def __init__(self, b, c, fld=None):
        if fld is None:
            fld = _field_for(b) if not isinstance(c, RatFun) else QA
        self.fld = fld
        self.b = fld.coerce(b)
        self.c = fld.coerce(c)
        if not self.discriminant():
            raise DegenerateParameterError(
                "singular curve: discriminant vanishes at b=%s, c=%s"
                % (fld.element_str(self.b), fld.element_str(self.c)),
                factor="discriminant",
                value=(self.b, self.c),
            )

    # a1 = 1-c, a2 = -b, a3 = -b, a4 = a6 = 0
    def b_invariants(self):
        a1 = 1 - self.c
        b2 = a1 * a1 - 4 * self.b
        b4 = -self.b * a1
        b6 = self.b * self.b
        b8 = -self.b ** 3
        return b2, b4, b6, b8

    def c_invariants(self):
        b2, b4, b6, _ = self.b_invariants()
        c4 = b2 * b2 - 24 * b4
        c6 = -b2 ** 3 + 36 * b2 * b4 - 216 * b6
        return c4, c6

    def discriminant(self):
        b2, b4, b6, b8 = self.b_invariants()
        return -b2 * b2 * b8 - 8 * b4 ** 3 - 27 * b6 * b6 + 9 * b2 * b4 * b6

    def __repr__(self):
        return "TateCurve(b=%s, c=%s)" % (self.b, self.c)


class ShortWeierstrass:
    """y^2 = x^3 + Ax + B over an exact field; must be nonsingular."""

    __slots__ = ("fld", "A", "B")

    def __init__(self, A, B, fld=None):
        if fld is None:
            fld = _field_for(A) if not isinstance(B, RatFun) else QA
        self.fld = fld
        self.A = fld.coerce(A)
        self.B = fld.coerce(B)
        if not 4 * self.A ** 3 + 27 * self.B * self.B:
            raise DomainError("singular curve: 4A^3 + 27B^2 = 0")

    def discriminant(self):
        return -16 * (4 * self.A ** 3 + 27 * self.B * self.B)

    def contains(self, x, y):
        x = self.fld.coerce(x)
        y = self.fld.coerce(y)
        return y * y == x ** 3 + self.A * x + self.B

    def infinity(self):
        return ECPoint(self, None, None)

    def point(self, x, y):
        x = self.fld.coerce(x)
        y = self.fld.coerce(y)
        if not self.contains(x, y):
            raise DomainError("point (%s, %s) is not on the curve" % (x, y))
        return ECPoint(self, x, y)

    def scaled(self, u):
        """The isomorphic curve (A/u^4, B/u^6); points map by (x/u^2, y/u^3)."""
        u = self.fld.coerce(u)
        return ShortWeierstrass(self.A / u ** 4, self.B / u ** 6, fld=self.fld)

    def __eq__(self, other):
        if not isinstance(other, ShortWeierstrass):
            return NotImplemented
        return (self.fld.name, self.A, self.B) == (other.fld.name, other.A, other.B)

    def __hash__(self):
        return hash((self.fld.name, self.A, self.B))

    def __repr__(self):
        return "ShortWeierstrass(A=%s, B=%s)" % (self.A, self.B)


class ECPoint:
    """A point on a ShortWeierstrass curve; x is None at infinity."""

    __slots__ = ("curve", "x", "y")

    def __init__(self, curve, x, y):
        self.curve = curve
        self.x = x
        self.y = y

    @property
    def is_infinity(self):
        return self.x is None

    def __eq__(self, other):
        if not isinstance(other, ECPoint):
            return NotImplemented
        return self.curve == other.curve and (self.x, self.y) == (other.x, other.y)

    def __hash__(self):
        return hash((self.curve, self.x, self.y))

    def __neg__(self):
        if self.is_infinity:
            return self
        return ECPoint(self.curve, self.x, -self.y)

    def __add__(self, other):
        return ec_add(self, other)

    def __sub__(self, other):
        return ec_add(self, -other)

    def __mul__(self, n):
        return ec_multiply(self, n)

    __rmul__ = __mul__

    def scaled(self, u):
        """Image on curve.scaled(u)."""
        E = self.curve.scaled(u)
        if self.is_infinity:
            return E.infinity()
        u = self.curve.fld.coerce(u)
        return ECPoint(E, self.x / u ** 2, self.y / u ** 3)

    def __repr__(self):
        if self.is_infinity:
            return "ECPoint(infinity)"
        return "ECPoint(%s, %s)" % (self.x, self.y)


def ec_add(P, Q):
    """Chord-tangent addition; both points must be on the same curve."""
    if not isinstance(P, ECPoint) or not isinstance(Q, ECPoint):
        raise DomainError("ec_add expects two curve points")
    if P.curve != Q.curve:
        raise DomainError("points lie on different curves")
    if P.is_infinity:
        return Q
    if Q.is_infinity:
        return P
    E = P.curve
    if P.x == Q.x:
        if P.y == -Q.y:
            # vertical chord, includes doubling a 2-torsion point
            return E.infinity()
        lam = (3 * P.x * P.x + E.A) / (2 * P.y)
    else:
        lam = (Q.y - P.y) / (Q.x - P.x)
    x3 = lam * lam - P.x - Q.x
    y3 = lam * (P.x - x3) - P.y
    return ECPoint(E, x3, y3)


def ec_multiply(P, n):
    """n-fold sum by double-and-add; negative n multiplies -P."""
    if not isinstance(n, int):
        raise DomainError("multiplier must be an integer")
    if n < 0:
        return ec_multiply(-P, -n)
    R = P.curve.infinity()
    Q = P
    while n:
        if n & 1:
            R = ec_add(R, Q)
        n >>= 1
        if n:
            Q = ec_add(Q, Q)
    return R


def torsion_order(P, bound=12):
    """Smallest n <= bound with n*P = infinity, or None.

    Rational torsion orders never exceed 12, so over Q the scan is
    complete and None certifies infinite order.  A flat scan by repeated
    addition keeps every intermediate point available for debugging.
    """
    Q = P
    for n in range(1, bound + 1):
        if Q.is_infinity:
            return n
        Q = ec_add(Q, P)
    return None


def _nonzero(m, value, factor, t):
    if not value:
        raise DegenerateParameterError(
            "torsion-%d parametrization degenerates: %s = 0 at t = %s"
            % (m, factor, t),
            factor=factor,
            value=t,
        )


def kubert_params(m, t):
    """Tate curve with a point of order m, parametrized by t.

    The marked point (0,0) has exact order m away from finitely many
    degenerate t (vanishing denominator or discriminant), which raise
    DegenerateParameterError naming the vanishing factor.
    """
    fld = _field_for(t)
    t = fld.coerce(t)
    if m == 4:
        b, c = t, fld.zero
    elif m == 5:
        b, c = t, t
    elif m == 6:
        b, c = t * (t + 1), t
    elif m == 7:
        b, c = t * t * (t - 1), t * (t - 1)
    elif m == 8:
        _nonzero(m, t, "t", t)
        w = (2 * t - 1) * (t - 1)
        b, c = w, w / t
    elif m == 9:
        w = t * t * (t - 1)
        b, c = w * (t * t - t + 1), w
    elif m == 10:
        den = t * t - 3 * t + 1
        _nonzero(m, den, "t^2 - 3t + 1", t)
        w = t * (t - 1) * (2 * t - 1)
        b, c = t * t * w / (den * den), -w / den
    elif m == 12:
        den = t - 1
        _nonzero(m, den, "t - 1", t)
        w = t * (2 * t - 1) * (3 * t * t - 3 * t + 1)
        b, c = w * (2 * t * t - 2 * t + 1) / den ** 4, -w / den ** 3
    else:
        raise DomainError("no parametrization for torsion order %s" % m)
    return TateCurve(b, c, fld=fld)


def tate_to_short(tc):
    """Short Weierstrass model of a Tate curve and the image of (0,0).

    Completing the square and depressing the cubic gives
    Y^2 = X^3 - 27c4 X - 54c6 under X = 36x + 3b2, Y = 108(2y + a1 x + a3),
    so (0,0) lands on (3b2, -108b).  The transformation is a group
    isomorphism, hence preserves the order of the marked point.
    """
    b2, _, _, _ = tc.b_invariants()
    c4, c6 = tc.c_invariants()
    E = ShortWeierstrass(-27 * c4, -54 * c6, fld=tc.fld)
    return E, E.point(3 * b2, -108 * tc.b)


def adams_razar_curve(q):
    """Curve and marked point attached to a depressed monic quartic q.

    Writing q = x^4 - 6ux^2 - 8vx + w, the Jacobian of y^2 = q(x) is
    y^2 = x^3 + Ax + B with A = -(w + 3u^2)/4 and B = v^2 - u^3 - Au,
    and the divisor at infinity maps to the affine point (u, v).  q must
    be square-free for the Jacobian to be an elliptic curve.
    """
    fld = q.fld
    if q.degree != 4 or q.lead() != fld.one:
        raise DomainError("expected a monic quartic")
    if q[3]:
        raise DomainError("quartic must be depressed (no cubic term)")
    if not q.is_squarefree():
        raise DomainError("quartic is not square-free; Jacobian is singular")
    alpha = -q[2] / 6
    beta = -q[1] / 8
    gamma = q[0]
    A = -(gamma + 3 * alpha * alpha) / 4
    B = beta * beta - alpha ** 3 - A * alpha
    E = ShortWeierstrass(A, B, fld=fld)
    return E, E.point(alpha, beta)


class ParamFamily:
    """One row of the quartic family table for a fixed torsion order.

    The quartic at parameters (a, b) is
        x^4 + r2(a)/b^2 * x^2 + r1(a)/b^3 * x + r0(a)/b^4,
    i.e. the coefficients carry b-weights (2, 3, 4) and the whole family
    obeys d_{a,b}(x) = b^-4 d_{a,1}(bx).
    """

    __slots__ = ("m", "r2", "r1", "r0", "b_weights")

    def __init__(self, m, r2, r1, r0):
        self.m = m
        self.r2 = r2
        self.r1 = r1
        self.r0 = r0
        self.b_weights = (2, 3, 4)

    def rows(self):
        return ((self.r2, 2), (self.r1, 3), (self.r0, 4))

    def __repr__(self):
        return "ParamFamily(m=%d)" % self.m


def derive_family_row(m):
    """Re-derive a family row from scratch through the curve pipeline.

    Symbolically in t: Tate curve with a point of order m, short model,
    then the scaling u = 3 that lands the coefficients in the quartic
    dictionary's normalization, inverted to (r2, r1, r0) = (-6x, -8y,
    -4A - 3x^2).  Serves as an independent cross-check of the hard-coded
    table in family_row; the two must agree identically.
    """
    t = RatFun.var()
    tc = kubert_params(m, t)
    E, P = tate_to_short(tc)
    P3 = P.scaled(3)
    A3 = P3.curve.A
    alpha, beta = P3.x, P3.y
    r2 = -6 * alpha
    r1 = -8 * beta
    r0 = -4 * A3 - 3 * alpha * alpha
    return ParamFamily(m, r2, r1, r0)


def _rows():
    a = RatFun.var()
    rows = {
        4: (8 * a - 2,
            32 * a,
            16 * a * a + 24 * a + 1),
        5: (-2 * a ** 2 + 12 * a - 2,
            32 * a,
            a ** 4 - 12 * a ** 3 + 6 * a ** 2 + 20 * a + 1),
        6: (6 * a ** 2 + 12 * a - 2,
            32 * a ** 2 + 32 * a,
            9 * a ** 4 + 4 * a ** 3 + 30 * a ** 2 + 20 * a + 1),
        7: (-2 * a ** 4 + 12 * a ** 3 - 6 * a ** 2 - 4 * a - 2,
            32 * a ** 3 - 32 * a ** 2,
            a ** 8 - 12 * a ** 7 + 42 * a ** 6 - 64 * a ** 5 + 51 * a ** 4
            - 22 * a ** 2 + 4 * a + 1),
        8: ((8 * a ** 4 + 8 * a ** 3 - 32 * a ** 2 + 16 * a - 2) / a ** 2,
            64 * a ** 2 - 96 * a + 32,
            (16 * a ** 8 - 96 * a ** 7 + 336 * a ** 6 - 576 * a ** 5
             + 536 * a ** 4 - 296 * a ** 3 + 96 * a ** 2 - 16 * a + 1) / a ** 4),
        9: (-2 * a ** 6 + 12 * a ** 5 - 18 * a ** 4 + 20 * a ** 3
            - 12 * a ** 2 - 2,
            32 * a ** 5 - 64 * a ** 4 + 64 * a ** 3 - 32 * a ** 2,
            a ** 12 - 12 * a ** 11 + 54 * a ** 10 - 128 * a ** 9 + 181 * a ** 8
            - 156 * a ** 7 + 82 * a ** 6 - 4 * a ** 5 - 42 * a ** 4
            + 44 * a ** 3 - 20 * a ** 2 + 1),
        10: ((-8 * a ** 6 + 32 * a ** 5 - 16 * a ** 4 - 16 * a ** 3
              + 8 * a - 2) / (a * a - 3 * a + 1) ** 2,
             (64 * a ** 5 - 96 * a ** 4 + 32 * a ** 3) / (a * a - 3 * a + 1) ** 2,
             (16 * a ** 12 - 128 * a ** 11 + 448 * a ** 10 - 896 * a ** 9
              + 1024 * a ** 8 - 416 * a ** 7 - 408 * a ** 6 + 608 * a ** 5
              - 304 * a ** 4 + 48 * a ** 3 + 16 * a ** 2 - 8 * a + 1)
             / (a * a - 3 * a + 1) ** 4),
        12: ((24 * a ** 8 - 240 * a ** 7 + 672 * a ** 6 - 936 * a ** 5
              + 744 * a ** 4 - 336 * a ** 3 + 72 * a ** 2 - 2) / (a - 1) ** 6,
             (384 * a ** 6 - 960 * a ** 5 + 1088 * a ** 4 - 672 * a ** 3
              + 224 * a ** 2 - 32 * a) / (a - 1) ** 4,
             (144 * a ** 16 - 576 * a ** 15 + 2112 * a ** 14 - 9696 * a ** 13
              + 34016 * a ** 12 - 82176 * a ** 11 + 141936 * a ** 10
              - 181984 * a ** 9 + 177240 * a ** 8 - 132528 * a ** 7
              + 76096 * a ** 6 - 33208 * a ** 5 + 10760 * a ** 4
              - 2480 * a ** 3 + 376 * a ** 2 - 32 * a + 1) / (a - 1) ** 12),
    }
    return rows


_ROW_CACHE = None


def family_row(m):
    """The (r2, r1, r0) table row for torsion order m, as functions of a."""
    global _ROW_CACHE
    if _ROW_CACHE is None:
        _ROW_CACHE = {k: ParamFamily(k, *v) for k, v in _rows().items()}
    if m not in _ROW_CACHE:
        raise DomainError("no family for torsion order %s" % m)
    return _ROW_CACHE[m]


def family_quartic(fam, a, b):
    """The member of family fam at rational parameters (a, b).

    Returns x^4 + r2(a)/b^2 x^2 + r1(a)/b^3 x + r0(a)/b^4 over Q.
    Square-freeness is the caller's problem; parameter values that hit a
    pole of the row (or b = 0) raise DegenerateParameterError.
    """
    a = Fraction(a)
    b = Fraction(b)
    if not b:
        raise DegenerateParameterError(
            "family weight b must be nonzero", factor="b", value=b)
    vals = []
    for r, w in fam.rows():
        try:
            vals.append(r.evaluate(a) / b ** w)
        except ZeroDivisionError:
            raise DegenerateParameterError(
                "family row has a pole at a = %s (vanishing %s)"
                % (a, format_int_poly(r.denominator_poly(), "a")),
                factor=format_int_poly(r.denominator_poly(), "a"),
                value=a) from None
    r2, r1, r0 = vals
    return Poly(QQ, (r0, r1, r2, QQ.zero, QQ.one))


def depressed_form(d):
    """Shift x -> x - d3/4 removing the cubic term of a monic quartic."""
    if d.degree != 4 or d.lead() != d.fld.one:
        raise DomainError("expected a monic quartic")
    return d.shift(-d[3] / 4)


def check_period_torsion(d, max_steps=None):
    """Compare the cf period of sqrt(d) with the torsion order of d's point.

    Returns (n, m, consistent) where n is the period length, m the
    torsion order of the marked Jacobian point (None if beyond the
    rational bound), and consistent says whether n is m-1 or 2(m-1).
    """
    from .contfrac import cf_expand

    E, P = adams_razar_curve(depressed_form(d))
    m = torsion_order(P)
    cf = cf_expand(d, max_steps=max_steps)
    if cf.period is None:
        raise TruncationError("no period found within the step bound")
    n = cf.period[1]
    consistent = m is not None and n in (m - 1, 2 * (m - 1))
    return n, m, consistent
