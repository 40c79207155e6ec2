"""Coefficient fields and elementary number-theoretic helpers.

Two fields are supported: the rationals, whose elements are Fractions,
and rational functions in one parameter, whose elements are RatFun
instances.  The descriptors bundle the small amount of per-field
behavior the polynomial and continued-fraction layers need, so those
layers can stay generic.
"""

import math
import random
from fractions import Fraction

from ._kernel import eval_hom
from .ratfun import RatFun, RF_ZERO, RF_ONE


class RationalField:
    """Descriptor for the rationals with Fraction elements."""

    name = "Q"
    is_symbolic = False

    zero = Fraction(0)
    one = Fraction(1)

    @staticmethod
    def coerce(x):
        if isinstance(x, Fraction):
            return x
        if isinstance(x, int):
            return Fraction(x)
        if isinstance(x, RatFun):
            r = x.as_rational()
            if r is None:
                raise TypeError("nonconstant rational function in a rational context")
            return r
        raise TypeError("cannot coerce {!r} into Q".format(x))

    @staticmethod
    def is_negative(x):
        return x < 0

    @staticmethod
    def is_square(x):
        if x < 0:
            return False
        return _is_square_int(x.numerator) and _is_square_int(x.denominator)

    @staticmethod
    def sqrt(x):
        if x < 0:
            return None
        p = math.isqrt(x.numerator)
        q = math.isqrt(x.denominator)
        if p * p != x.numerator or q * q != x.denominator:
            return None
        return Fraction(p, q)

    @staticmethod
    def element_str(x):
        return str(x)


class ParameterField:
    """Descriptor for rational functions in the parameter."""

    name = "Q(a)"
    is_symbolic = True

    zero = RF_ZERO
    one = RF_ONE

    @staticmethod
    def coerce(x):
        if isinstance(x, RatFun):
            return x
        if isinstance(x, (int, Fraction)):
            return RatFun.from_rational(x)
        raise TypeError("cannot coerce {!r} into Q(a)".format(x))

    @staticmethod
    def is_negative(x):
        # sign of the leading scalar in canonical form
        return x._s < 0

    @staticmethod
    def is_square(x):
        return x.is_square()

    @staticmethod
    def sqrt(x):
        return x.sqrt()

    @staticmethod
    def element_str(x):
        return str(x)


QQ = RationalField()
QA = ParameterField()


def _is_square_int(n):
    if n < 0:
        return False
    r = math.isqrt(n)
    return r * r == n


def p_adic_valuation(x, p):
    """Exponent of the prime p in the rational x; infinity for zero."""
    x = Fraction(x)
    if not x:
        return math.inf
    v = 0
    n = x.numerator
    while n % p == 0:
        n //= p
        v += 1
    d = x.denominator
    while d % p == 0:
        d //= p
        v -= 1
    return v


# --- deterministic Miller-Rabin; these bases cover n < 3.3 * 10^24 ---

_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


def is_probable_prime(n):
    if n < 2:
        return False
    for p in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        if n % p == 0:
            return n == p
    d = n - 1
    r = 0
    while d % 2 == 0:
        d //= 2
        r += 1
    bases = _MR_BASES
    if n >= 3317044064679887385961981:
        rng = random.Random(n)
        bases = tuple(rng.randrange(2, n - 1) for _ in range(32)) + _MR_BASES
    for a in bases:
        a %= n
        if a in (0, 1, n - 1):
            continue
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(r - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def _pollard_brent(n, rng):
    if n % 2 == 0:
        return 2
    while True:
        y = rng.randrange(1, n)
        c = rng.randrange(1, n)
        m = 128
        g = r = q = 1
        x = ys = y
        while g == 1:
            x = y
            for _ in range(r):
                y = (y * y + c) % n
            k = 0
            while k < r and g == 1:
                ys = y
                for _ in range(min(m, r - k)):
                    y = (y * y + c) % n
                    q = q * abs(x - y) % n
                g = math.gcd(q, n)
                k += m
            r *= 2
        if g == n:
            g = 1
            while g == 1:
                ys = (ys * ys + c) % n
                g = math.gcd(abs(x - ys), n)
        if g != n:
            return g


def factorize(n):
    """Prime factorization of |n| as an exponent map; requires n != 0."""
    n = abs(n)
    if n == 0:
        raise ValueError("cannot factorize zero")
    out = {}
    for p in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47):
        while n % p == 0:
            out[p] = out.get(p, 0) + 1
            n //= p
    if n == 1:
        return out
    rng = random.Random(0xC0FFEE ^ n)
    stack = [n]
    while stack:
        m = stack.pop()
        if m == 1:
            continue
        if is_probable_prime(m):
            out[m] = out.get(m, 0) + 1
            continue
        d = _pollard_brent(m, rng)
        stack.append(d)
        stack.append(m // d)
    return out


def divisors(n):
    """Sorted positive divisors of |n|; requires n != 0."""
    out = [1]
    for p, e in factorize(n).items():
        out = [d * p ** k for d in out for k in range(e + 1)]
    return sorted(out)


def rational_roots(coeffs):
    """All rational roots of an integer polynomial, ascending coefficients.

    Zero roots are handled by stripping powers of the variable first.
    Returns a sorted list of distinct Fractions.
    """
    c = list(coeffs)
    while c and c[-1] == 0:
        c.pop()
    if not c:
        raise ValueError("zero polynomial has every root")
    roots = set()
    k = 0
    while c[k] == 0:
        k += 1
    if k:
        roots.add(Fraction(0))
        c = c[k:]
    if len(c) > 1:
        for s in divisors(c[-1]):
            for r in divisors(c[0]):
                for cand in (Fraction(r, s), Fraction(-r, s)):
                    if cand not in roots and \
                            eval_hom(c, cand.numerator, cand.denominator) == 0:
                        roots.add(cand)
    return sorted(roots)
