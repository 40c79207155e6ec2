"""Solving f^2 - d g^2 = 1 in polynomials.

Solutions come out of the continued fraction of sqrt(d): whenever a
complete-quotient denominator Q_k is constant, the convergent
(p_{k-1}, q_{k-1}) satisfies p^2 - d q^2 = (-1)^k Q_k.  The fundamental
unit takes the first such constant and either rescales by its square
root or doubles; the unit read off at the closed period (constant
exactly 1) is kept separate because it is what the classification
reports.  All further solutions are powers of the fundamental one.
"""

from dataclasses import dataclass

from .contfrac import cf_expand
from .errors import DomainError
from .poly import Poly


@dataclass
class PellSolution:
    d: Poly
    f: Poly
    g: Poly
    constant: object
    index: int

    def verify(self):
        diff = self.f * self.f - self.d * self.g * self.g
        return diff == Poly.constant(self.d.fld, self.constant)

    def is_unit(self):
        return self.constant == self.d.fld.one and bool(self.g)

    def __str__(self):
        return "f = {}, g = {}".format(self.f, self.g)


def _constant_q_indices(exp):
    for i in range(1, len(exp.surds)):
        if exp.surds[i].Q.degree == 0:
            yield i


def _convergent(exp, k):
    for i, (p, q) in enumerate(exp.convergents()):
        if i == k:
            return p, q
    raise IndexError(k)


def _normalize_signs(fld, f, g):
    if fld.is_negative(f.lead()):
        f = -f
    if g and fld.is_negative(g.lead()):
        g = -g
    return f, g


def minimal_solution(d, max_steps=None, precision=None, expansion=None):
    """Fundamental unit of f^2 - d g^2 = 1, or None if no period showed.

    Takes the first constant complete-quotient denominator; if the
    resulting constant c is a square the convergent is rescaled by
    sqrt(c), otherwise the solution is doubled, squaring c away.
    """
    exp = expansion if expansion is not None else \
        cf_expand(d, max_steps=max_steps, precision=precision)
    fld = d.fld
    k = next(_constant_q_indices(exp), None)
    if k is None:
        return None
    c = exp.surds[k].Q.lead()
    if k % 2:
        c = -c
    p, q = _convergent(exp, k - 1)
    root = fld.sqrt(c)
    if root is not None:
        inv = fld.one / root
        f, g = p * inv, q * inv
    else:
        inv = fld.one / c
        f = (p * p + d * q * q) * inv
        g = (p * q + p * q) * inv
    f, g = _normalize_signs(fld, f, g)
    sol = PellSolution(d=d, f=f, g=g, constant=fld.one, index=1)
    assert sol.verify(), "fundamental solution failed verification"
    return sol


def period_solution(d, max_steps=None, precision=None, expansion=None):
    """Unit from the first convergent with p^2 - d q^2 = 1 exactly.

    This is the solution the expansion itself displays at the end of
    the (possibly doubled) period, without square-root rescaling; it is
    the fundamental unit, or its square when a square constant appears
    at a quasi-period first.  None if no period showed.
    """
    exp = expansion if expansion is not None else \
        cf_expand(d, max_steps=max_steps, precision=precision)
    fld = d.fld

    def surd_Q(k):
        if k < len(exp.surds):
            return exp.surds[k].Q
        start, length = exp.period
        return exp.surds[start + (k - start) % length].Q

    # two turns of the period always pass through constant +1
    last = len(exp.surds) - 1 if exp.period is None \
        else exp.period[0] + 2 * exp.period[1]
    halved = False
    for k in range(1, last + 1):
        Q = surd_Q(k)
        if Q.degree != 0:
            continue
        c = -Q.lead() if k % 2 else Q.lead()
        if c == fld.one:
            one = Poly.constant(fld, fld.one)
            pm1, p = one, exp.quotient_at(0)
            qm1, q = Poly(fld, ()), one
            for i in range(1, k):
                a = exp.quotient_at(i)
                p, pm1 = a * p + pm1, p
                q, qm1 = a * q + qm1, q
            f, g = _normalize_signs(fld, p, q)
            sol = PellSolution(d=d, f=f, g=g, constant=fld.one,
                               index=2 if halved else 1)
            assert sol.verify(), "period solution failed verification"
            return sol
        if fld.sqrt(c) is not None:
            # a square constant before +1 means the fundamental unit
            # lives at the half period
            halved = True
    if exp.period is None:
        return None
    raise AssertionError("closed period produced no unit")


def power_solution(sol, n):
    """The n-th power (f + g sqrt(d))^n as a solution, n >= 1."""
    if n < 1:
        raise ValueError("power index must be positive")
    d = sol.d
    one = Poly.constant(d.fld, d.fld.one)
    u, v = one, Poly(d.fld, ())
    bu, bv = sol.f, sol.g
    k = n
    while k:
        if k & 1:
            u, v = u * bu + d * v * bv, u * bv + bu * v
        k >>= 1
        if k:
            bu, bv = bu * bu + d * bv * bv, (bu * bv) + (bu * bv)
    return PellSolution(d=d, f=u, g=v, constant=sol.constant ** n,
                        index=sol.index * n)


def solution_sequence(sol, count):
    """Solutions with indices 1..count via the multiplication rule."""
    d = sol.d
    out = [sol]
    u, v = sol.f, sol.g
    for _ in range(count - 1):
        u, v = u * sol.f + d * v * sol.g, u * sol.g + sol.f * v
        out.append(PellSolution(d=d, f=u, g=v, constant=sol.constant,
                                index=out[-1].index + 1))
    return out


def g_sequence_at(d_quadratic, a, n_max):
    """Values G_0(a), ..., G_{n_max}(a) of the solution denominators.

    Uses the three-term recurrence G_{n+2} = 2 F_1(a) G_{n+1} - G_n
    seeded by the fundamental solution of the quadratic.
    """
    if d_quadratic.degree != 2:
        raise DomainError("need a quadratic")
    sol = minimal_solution(d_quadratic)
    if sol is None:
        raise DomainError("quadratic has no fundamental solution")
    f1 = sol.f(a)
    out = [d_quadratic.fld.zero, sol.g(a)]
    while len(out) <= n_max:
        out.append(2 * f1 * out[-1] - out[-2])
    return out[:n_max + 1]


def is_integral_poly(p):
    """Integer coefficients throughout (rational coefficient field)."""
    return all(c.denominator == 1 for c in p.coeffs)


def is_pellian_over_Z(d, power_bound=6, max_steps=None, precision=None):
    """Least power of the fundamental unit lying in Z[x], or None.

    The rational fundamental solution need not be integral; integrality
    can first appear at a proper power, so indices up to power_bound
    are checked.
    """
    sol = minimal_solution(d, max_steps=max_steps, precision=precision)
    if sol is None:
        return None
    if is_integral_poly(sol.f) and is_integral_poly(sol.g):
        return sol
    for n in range(2, power_bound + 1):
        cur = power_solution(sol, n)
        if is_integral_poly(cur.f) and is_integral_poly(cur.g):
            return cur
    return None
