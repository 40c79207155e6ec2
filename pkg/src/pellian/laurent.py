"""Truncated series in descending powers of the variable.

A series here is an element of K((1/x)): finitely many nonnegative
exponents, an infinite tail of negative ones.  Each instance knows its
coefficients exactly for every exponent in the closed window
[bot, top]; everything above top is exactly zero, everything below bot
is unknown.  Operations propagate the window so that no coefficient is
ever reported that truncation could have corrupted.
"""

from .errors import DomainError, PrecisionError
from .poly import Poly


class LaurentSeries:
    __slots__ = ("fld", "bot", "top", "cs")

    def __init__(self, fld, bot, top, cs):
        # cs ascending: cs[i] is the coefficient of exponent bot + i
        assert len(cs) == top - bot + 1
        self.fld = fld
        self.bot = bot
        self.top = top
        self.cs = list(cs)

    @staticmethod
    def from_poly(p, bot):
        """A polynomial viewed as a series, exact down to `bot` (bot <= 0)."""
        fld = p.fld
        top = max(p.degree, 0)
        cs = [p[e] for e in range(bot, top + 1)]
        return LaurentSeries(fld, bot, top, cs)

    def coefficient(self, e):
        if e > self.top:
            return self.fld.zero
        if e < self.bot:
            raise PrecisionError(
                "coefficient of exponent {} is below the window [{}, {}]"
                .format(e, self.bot, self.top))
        return self.cs[e - self.bot]

    def add_poly(self, p):
        """Add a polynomial; the window bottom is unchanged."""
        top = max(self.top, p.degree)
        cs = [self.coefficient(e) + p[e] for e in range(self.bot, top + 1)]
        return LaurentSeries(self.fld, self.bot, top, cs)

    def __neg__(self):
        return LaurentSeries(self.fld, self.bot, self.top,
                             [-c for c in self.cs])

    def add(self, other):
        bot = max(self.bot, other.bot)
        top = max(self.top, other.top)
        cs = [self.coefficient(e) + other.coefficient(e)
              for e in range(bot, top + 1)]
        return LaurentSeries(self.fld, bot, top, cs)

    def sub(self, other):
        return self.add(-other)

    def mul(self, other):
        """Series product; the window shrinks as truncation demands."""
        bot = max(self.bot + other.top, other.bot + self.top)
        top = self.top + other.top
        zero = self.fld.zero
        cs = [zero] * (top - bot + 1)
        for i, a in enumerate(self.cs):
            if not a:
                continue
            ea = self.bot + i
            for j, b in enumerate(other.cs):
                e = ea + other.bot + j
                if bot <= e <= top and b:
                    cs[e - bot] = cs[e - bot] + a * b
        return LaurentSeries(self.fld, bot, top, cs)

    def mul_poly(self, p):
        """Multiply by a polynomial; exact down to bot + deg p."""
        dp = max(p.degree, 0)
        pb = min(0, self.bot + dp - self.top)
        return self.mul(LaurentSeries.from_poly(p, pb))

    def div_poly(self, p):
        """Divide by a nonzero polynomial.

        The quotient is exact down to bot - deg p: each quotient
        coefficient only consumes dividend coefficients at or above its
        own exponent plus deg p, so information flows strictly downward.
        """
        if not p:
            raise ZeroDivisionError("series division by zero polynomial")
        m = p.degree
        inv = self.fld.one / p.lead()
        top = self.top - m
        bot = self.bot - m
        q = {}
        for e in range(top, bot - 1, -1):
            acc = self.coefficient(e + m)
            for j in range(m):
                c = p[j]
                if c:
                    eq = e + m - j
                    if eq in q:
                        acc = acc - c * q[eq]
            q[e] = acc * inv
        return LaurentSeries(self.fld, bot, top, [q[e] for e in range(bot, top + 1)])

    def principal_part(self):
        """The polynomial part (exponents >= 0) as a Poly."""
        if self.top < 0:
            return Poly(self.fld, ())
        if self.bot > 0:
            raise PrecisionError(
                "window [{}, {}] does not reach exponent 0"
                .format(self.bot, self.top))
        return Poly(self.fld, self.cs[-self.bot:])

    def __str__(self):
        terms = []
        for e in range(self.top, self.bot - 1, -1):
            c = self.coefficient(e)
            if c:
                terms.append("({})*x^{}".format(self.fld.element_str(c), e))
        body = " + ".join(terms) if terms else "0"
        return "{} + O(x^{})".format(body, self.bot - 1)


def sqrt_series(d, bot):
    """Branch of the square root of a polynomial with positive leading term.

    Expands sqrt(d) in descending powers, exact down to exponent `bot`.
    Needs even degree and a square leading coefficient; anything else has
    no square root in this series field.
    """
    if not d:
        raise DomainError("square root of the zero polynomial")
    if d.degree % 2:
        raise DomainError("odd degree has no square root in K((1/x))")
    fld = d.fld
    s0 = fld.sqrt(d.lead())
    if s0 is None:
        raise DomainError("leading coefficient is not a square")
    m = d.degree // 2
    s = {m: s0}
    den = s0 + s0
    for e in range(2 * m - 1, bot + m - 1, -1):
        # match the coefficient of x^e in the square of the series:
        # 2*s_m*s_{e-m} plus the already-known pairs s_i*s_j, i+j = e
        acc = fld.zero
        for i in range(e - m + 1, e // 2 + 1):
            j = e - i
            term = s[i] * s[j]
            acc = acc + (term + term if i != j else term)
        s[e - m] = (d[e] - acc) / den
    return LaurentSeries(fld, bot, m, [s[e] for e in range(bot, m + 1)])
