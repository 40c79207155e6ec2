"""Dense univariate polynomials over an exact coefficient field.

Coefficients are stored ascending with no trailing zeros, so the zero
polynomial is the empty tuple and degree is length minus one.  The same
class serves rational and rational-function coefficients; the field
descriptor supplies coercion, square roots, and printing.
"""

import re
from fractions import Fraction

from .errors import ParseError
from .fields import QQ

_TERM_RE = re.compile(
    r"^(?P<coef>\d+(?:/\d+)?)?"
    r"(?:\*?(?P<var>[A-Za-z]\w*)(?:\^(?P<exp>\d+))?)?$"
)


class Poly:
    """Polynomial over the field held in `fld`."""

    __slots__ = ("fld", "coeffs")

    def __init__(self, fld, coeffs=()):
        cs = [fld.coerce(c) for c in coeffs]
        while cs and not cs[-1]:
            cs.pop()
        self.fld = fld
        self.coeffs = tuple(cs)

    @staticmethod
    def constant(fld, c):
        return Poly(fld, (c,))

    @staticmethod
    def x(fld):
        return Poly(fld, (0, 1))

    @staticmethod
    def monomial(fld, c, k):
        return Poly(fld, (0,) * k + (c,))

    @property
    def degree(self):
        return len(self.coeffs) - 1

    def lead(self):
        if not self.coeffs:
            raise ValueError("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    def __getitem__(self, i):
        if 0 <= i < len(self.coeffs):
            return self.coeffs[i]
        return self.fld.zero

    def __bool__(self):
        return bool(self.coeffs)

    def __eq__(self, other):
        if isinstance(other, Poly):
            return self.fld is other.fld and self.coeffs == other.coeffs
        if isinstance(other, (int, Fraction)):
            return self == Poly.constant(self.fld, other)
        return NotImplemented

    def __hash__(self):
        return hash((self.fld.name, self.coeffs))

    # ----- ring operations -----

    def _wrap(self, coeffs):
        return Poly(self.fld, coeffs)

    def __add__(self, other):
        other = self._coerce_poly(other)
        if other is NotImplemented:
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] = out[i] + c
        return self._wrap(out)

    __radd__ = __add__

    def __neg__(self):
        return Poly(self.fld, tuple(-c for c in self.coeffs))

    def __sub__(self, other):
        other = self._coerce_poly(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce_poly(other)
        if other is NotImplemented:
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return self._wrap(())
        out = [self.fld.zero] * (len(a) + len(b) - 1)
        for i, ai in enumerate(a):
            if ai:
                for j, bj in enumerate(b):
                    out[i + j] = out[i + j] + ai * bj
        return self._wrap(out)

    __rmul__ = __mul__

    def __pow__(self, k):
        if not isinstance(k, int) or k < 0:
            return NotImplemented
        out = Poly.constant(self.fld, self.fld.one)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base if k > 1 else base
            k >>= 1
        return out

    def _coerce_poly(self, other):
        if isinstance(other, Poly):
            if other.fld is not self.fld:
                return NotImplemented
            return other
        try:
            return Poly.constant(self.fld, self.fld.coerce(other))
        except TypeError:
            return NotImplemented

    def __divmod__(self, other):
        other = self._coerce_poly(other)
        if other is NotImplemented:
            return NotImplemented
        if not other:
            raise ZeroDivisionError("polynomial division by zero")
        df, dg = self.degree, other.degree
        if df < dg:
            return self._wrap(()), self
        inv = self.fld.one / other.lead()
        r = list(self.coeffs)
        q = [self.fld.zero] * (df - dg + 1)
        for i in range(df - dg, -1, -1):
            c = r[dg + i] * inv
            q[i] = c
            if c:
                for j, b in enumerate(other.coeffs):
                    r[j + i] = r[j + i] - c * b
        return self._wrap(q), self._wrap(r[:dg])

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def divexact(self, other):
        q, r = divmod(self, other)
        if r:
            raise ValueError("inexact polynomial division")
        return q

    def gcd(self, other):
        """Monic greatest common divisor."""
        a, b = self, other
        while b:
            a, b = b, a % b
        if not a:
            return a
        return a * (self.fld.one / a.lead())

    def derivative(self):
        return self._wrap([i * c for i, c in enumerate(self.coeffs)][1:])

    def is_squarefree(self):
        if not self:
            return False
        return self.gcd(self.derivative()).degree <= 0

    def __call__(self, x):
        x = self.fld.coerce(x)
        acc = self.fld.zero
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def compose(self, other):
        """Substitute a polynomial for the variable."""
        acc = Poly(self.fld, ())
        for c in reversed(self.coeffs):
            acc = acc * other + Poly.constant(self.fld, c)
        return acc

    def shift(self, c):
        """The polynomial evaluated at x + c."""
        return self.compose(Poly(self.fld, (c, 1)))

    def mirror(self):
        """The polynomial evaluated at -x."""
        return self._wrap([ci if i % 2 == 0 else -ci
                           for i, ci in enumerate(self.coeffs)])

    def sqrt(self):
        """Exact polynomial square root over the field, or None."""
        if not self:
            return self
        d = self.degree
        if d % 2:
            return None
        s0 = self.fld.sqrt(self.lead())
        if s0 is None or not s0:
            return None
        h = d // 2
        s = [self.fld.zero] * (h + 1)
        s[h] = s0
        den = s0 + s0
        for k in range(1, h + 1):
            acc = self.fld.zero
            for i in range(1, k):
                acc = acc + s[h - i] * s[h - k + i]
            s[h - k] = (self[2 * h - k] - acc) / den
        cand = self._wrap(s)
        if cand * cand != self:
            return None
        return cand

    def map_coeffs(self, fn, fld=None):
        """Apply fn to every coefficient, optionally into another field."""
        return Poly(fld or self.fld, [fn(c) for c in self.coeffs])

    # ----- rational-coefficient views -----

    def is_integral(self):
        """Whether every coefficient is an integer (rational field only)."""
        return all(c.denominator == 1 for c in self.coeffs)

    def denominator_lcm(self):
        out = 1
        for c in self.coeffs:
            d = c.denominator
            out = out // _igcd(out, d) * d
        return out

    def int_coeffs(self):
        """Ascending integer coefficients; raises if any is fractional."""
        if not self.is_integral():
            raise ValueError("polynomial has fractional coefficients")
        return tuple(int(c) for c in self.coeffs)

    def __str__(self):
        return poly_text(self)

    def __repr__(self):
        return "Poly[{}]({})".format(self.fld.name, poly_text(self))


def _igcd(a, b):
    while b:
        a, b = b, a % b
    return abs(a)


def parse_poly(text, fld=QQ, var="x"):
    """Parse `x^4 + 2*x^3 - 7*x^2 - 4*x + 10` style input."""
    s = text.replace(" ", "")
    if not s:
        raise ParseError("empty polynomial")
    if s[0] not in "+-":
        s = "+" + s
    terms = re.findall(r"[+-][^+-]+|[+-]$", s)
    if "".join(terms) != s:
        raise ParseError("cannot parse polynomial: {!r}".format(text))
    coeffs = {}
    for term in terms:
        sign = -1 if term[0] == "-" else 1
        m = _TERM_RE.match(term[1:])
        if not m or (m.group("coef") is None and m.group("var") is None):
            raise ParseError("cannot parse term {!r} in {!r}".format(term, text))
        v = m.group("var")
        if v is not None and v != var:
            raise ParseError("unexpected variable {!r}; expected {!r}".format(v, var))
        coef = Fraction(m.group("coef")) if m.group("coef") else Fraction(1)
        exp = 0 if v is None else int(m.group("exp") or 1)
        coeffs[exp] = coeffs.get(exp, fld.zero) + fld.coerce(sign * coef)
    out = [fld.zero] * (max(coeffs) + 1)
    for e, c in coeffs.items():
        out[e] = c
    return Poly(fld, out)


def poly_text(p, var="x"):
    """Canonical rendering, highest degree first; inverse of parse_poly."""
    if not p:
        return "0"
    parts = []
    symbolic = p.fld.is_symbolic
    for i in range(p.degree, -1, -1):
        c = p[i]
        if not c:
            continue
        if symbolic:
            cs = p.fld.element_str(c)
            neg = cs.startswith("-")
            body = cs[1:] if neg else cs
            if i > 0:
                if body != "1":
                    if not re.fullmatch(r"\w+", body):
                        body = "(" + body + ")"
                    body += "*"
                else:
                    body = ""
                body += var if i == 1 else "{}^{}".format(var, i)
        else:
            neg = c < 0
            body = str(abs(c))
            if i > 0:
                body = "" if abs(c) == 1 else body + "*"
                body += var if i == 1 else "{}^{}".format(var, i)
        if not parts:
            parts.append(("-" if neg else "") + body)
        else:
            parts.append(("- " if neg else "+ ") + body)
    return " ".join(parts)
