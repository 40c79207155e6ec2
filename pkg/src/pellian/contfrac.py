"""Continued fractions of square roots of polynomials.

Works in K((1/x)): the expansion of sqrt(d) proceeds through surd
states (P, Q) representing (sqrt(d) + P)/Q, with

    a_n     = polynomial part of (sqrt(d) + P_n)/Q_n,
    P_{n+1} = a_n Q_n - P_n,
    Q_{n+1} = (d - P_{n+1}^2) / Q_n,

starting from (0, 1).  Periodicity is detected by state repetition.
When the coefficient field carries a parameter, the expansion is the
generic one, and the parameter values where it degenerates (poles,
degree drops, state collisions) are reported as side conditions.
"""

from dataclasses import dataclass, field
from fractions import Fraction

from .errors import DomainError, InvariantError, PrecisionError
from .fields import rational_roots
from .laurent import sqrt_series
from .poly import Poly

MAX_STEPS_RATIONAL = 64
MAX_STEPS_SYMBOLIC = 40


@dataclass(frozen=True)
class Surd:
    """State (P, Q) standing for (sqrt(d) + P)/Q."""

    P: Poly
    Q: Poly


@dataclass(frozen=True)
class SideCondition:
    """A parameter value where the generic expansion breaks down."""

    kind: str        # "pole" | "degree-drop" | "state-collision"
    value: Fraction
    step: int
    detail: str


@dataclass
class CFExpansion:
    d: Poly
    partial_quotients: list
    surds: list                   # surds[n] pairs with partial_quotients[n]
    period: tuple = None          # (start, length) over the quotient index
    truncated: bool = False
    side_conditions: list = field(default_factory=list)
    precision_used: int = 0

    @property
    def a0(self):
        return self.partial_quotients[0]

    def convergents(self):
        """Yield (p_k, q_k) for k = 0, 1, ... along the computed quotients."""
        one = Poly.constant(self.d.fld, self.d.fld.one)
        pm1, qm1 = one, Poly(self.d.fld, ())
        p, q = self.partial_quotients[0], one
        yield p, q
        for a in self.partial_quotients[1:]:
            p, pm1 = a * p + pm1, p
            q, qm1 = a * q + qm1, q
            yield p, q

    def quotient_at(self, k):
        """Partial quotient a_k, unrolled through the period if needed."""
        n = len(self.partial_quotients)
        if k < n:
            return self.partial_quotients[k]
        if self.period is None:
            raise IndexError("quotient {} beyond a non-periodic expansion".format(k))
        start, length = self.period
        return self.partial_quotients[start + (k - start) % length]


def cf_expand(d, max_steps=None, precision=None):
    """Expand sqrt(d) as a continued fraction until the period closes.

    Raises DomainError when sqrt(d) does not live in K((1/x)) or when d
    is a perfect square.  If the period does not close within max_steps
    the expansion is returned with truncated=True.
    """
    fld = d.fld
    if max_steps is None:
        max_steps = MAX_STEPS_SYMBOLIC if fld.is_symbolic else MAX_STEPS_RATIONAL
    if d.degree < 2:
        raise DomainError("need a nonconstant polynomial of even degree")
    if d.sqrt() is not None:
        raise DomainError("perfect square has a trivial square root")
    if precision is None:
        precision = d.degree + 8

    while True:
        try:
            return _expand(d, max_steps, precision)
        except PrecisionError:
            # never expected: quotient windows reach exponent 0 for any
            # precision, but a doubled retry is cheap insurance
            if precision > 64 * (d.degree + 8):
                raise
            precision *= 2


def _expand(d, max_steps, precision):
    fld = d.fld
    s = sqrt_series(d, -precision)
    zero = Poly(fld, ())
    one = Poly.constant(fld, fld.one)
    P, Q = zero, one
    surds = [Surd(P, Q)]
    pq = []
    period = None
    truncated = False
    seen = {}
    for n in range(max_steps + 1):
        a = s.add_poly(P).div_poly(Q).principal_part()
        if n >= 1 and a.degree < 1:
            raise InvariantError(
                "partial quotient {} has degree {}".format(n, a.degree))
        pq.append(a)
        P = a * Q - P
        try:
            Qn = (d - P * P).divexact(Q)
        except ValueError:
            raise InvariantError("surd update left a remainder at step {}".format(n))
        Q = Qn
        key = (P.coeffs, Q.coeffs)
        nxt = n + 1
        if key in seen:
            period = (seen[key], nxt - seen[key])
            surds.append(Surd(P, Q))
            break
        seen[key] = nxt
        surds.append(Surd(P, Q))
    else:
        truncated = True

    exp = CFExpansion(d=d, partial_quotients=pq, surds=surds,
                      period=period, truncated=truncated,
                      precision_used=precision)
    if fld.is_symbolic:
        exp.side_conditions = _side_conditions(exp)
    return exp


# ----- parameter side conditions -----

def _ratfun_pole_values(c):
    return rational_roots(c.denominator_poly())


def _ratfun_zero_values(c):
    if not c:
        return []
    return rational_roots(c.numerator_poly())


def _side_conditions(exp):
    found = {}

    def note(kind, value, step, detail):
        k = (kind, value)
        if k not in found:
            found[k] = SideCondition(kind, value, step, detail)

    for n, a in enumerate(exp.partial_quotients):
        for v in _ratfun_zero_values(a.lead()):
            note("degree-drop", v, n,
                 "leading coefficient of a_{} vanishes".format(n))
        for c in a.coeffs:
            for v in _ratfun_pole_values(c):
                note("pole", v, n, "coefficient of a_{} has a pole".format(n))
    for n, st in enumerate(exp.surds):
        for p in (st.P, st.Q):
            for c in p.coeffs:
                for v in _ratfun_pole_values(c):
                    note("pole", v, n,
                         "coefficient of state {} has a pole".format(n))

    # values where two distinct states coincide, collapsing the period
    states = exp.surds[1:]
    for i in range(len(states)):
        for j in range(i + 1, len(states)):
            dP = states[i].P - states[j].P
            dQ = states[i].Q - states[j].Q
            if not dP and not dQ:
                continue
            lead = next(c for c in (list(dP.coeffs) + list(dQ.coeffs)) if c)
            for v in _ratfun_zero_values(lead):
                ok = True
                for p in (dP, dQ):
                    for c in p.coeffs:
                        if not c:
                            continue
                        try:
                            if c.evaluate(v):
                                ok = False
                        except ZeroDivisionError:
                            ok = False
                        if not ok:
                            break
                    if not ok:
                        break
                if ok:
                    note("state-collision", v, j + 1,
                         "states {} and {} coincide".format(i + 1, j + 1))
    return sorted(found.values(), key=lambda sc: (sc.value, sc.kind, sc.step))
