# cython: language_level=3
"""Dense integer-polynomial arithmetic, compiled kernel.

Same interface and semantics as _intpoly_py; coefficients are arbitrary
precision Python ints, so the speedup comes from loop and indexing
overhead, which dominates for the small-to-medium polynomials the
symbolic search produces.
"""

from math import gcd as _igcd, isqrt as _isqrt

BACKEND = "compiled"


def norm(coeffs):
    """Strip trailing zeros and return a tuple."""
    cdef list c = list(coeffs)
    while c and c[-1] == 0:
        c.pop()
    return tuple(c)


def add(f, g):
    cdef Py_ssize_t i
    if len(f) < len(g):
        f, g = g, f
    cdef list out = list(f)
    for i in range(len(g)):
        out[i] = out[i] + g[i]
    return norm(out)


def neg(f):
    cdef Py_ssize_t i
    cdef list out = list(f)
    for i in range(len(out)):
        out[i] = -out[i]
    return tuple(out)


def sub(f, g):
    cdef Py_ssize_t i
    cdef list out = list(f)
    if len(g) > len(out):
        out.extend([0] * (len(g) - len(out)))
    for i in range(len(g)):
        out[i] = out[i] - g[i]
    return norm(out)


def mul(f, g):
    cdef Py_ssize_t i, j, nf = len(f), ng = len(g)
    if nf == 0 or ng == 0:
        return ()
    cdef list out = [0] * (nf + ng - 1)
    cdef object a
    for i in range(nf):
        a = f[i]
        if a:
            for j in range(ng):
                out[i + j] = out[i + j] + a * g[j]
    return norm(out)


def scale(f, c):
    cdef Py_ssize_t i
    if c == 0:
        return ()
    cdef list out = list(f)
    for i in range(len(out)):
        out[i] = out[i] * c
    return tuple(out)


def shift_pow(f, k):
    """Multiply by the k-th power of the variable."""
    if not f:
        return ()
    return (0,) * k + tuple(f)


def content(f):
    """Nonnegative gcd of the coefficients; 0 for the zero polynomial."""
    cdef object c = 0
    for a in f:
        c = _igcd(c, a)
        if c == 1:
            return 1
    return c


def divexact_scalar(f, c):
    return tuple(a // c for a in f)


def primitive(f):
    """Return (content, primitive part); the sign stays on the part."""
    c = content(f)
    if c == 0 or c == 1:
        return c, tuple(f)
    return c, tuple(a // c for a in f)


def pseudo_divmod(f, g):
    """Pseudo-division: lc(g)^k * f = q*g + r with deg r < deg g."""
    cdef Py_ssize_t df, dg, i, j
    if not g:
        raise ZeroDivisionError("pseudo-division by zero polynomial")
    df = len(f) - 1
    dg = len(g) - 1
    if df < dg:
        return (), tuple(f)
    cdef object lcg = g[dg], c
    cdef list r = list(f)
    cdef list q = [0] * (df - dg + 1)
    for i in range(df - dg, -1, -1):
        c = r[dg + i]
        for j in range(len(r)):
            r[j] = r[j] * lcg
        for j in range(len(q)):
            q[j] = q[j] * lcg
        q[i] = q[i] + c
        for j in range(dg + 1):
            r[j + i] = r[j + i] - c * g[j]
    del r[dg:]
    return norm(q), norm(r)


def divexact(f, g):
    """Exact quotient f // g; raises if the division leaves a remainder."""
    cdef Py_ssize_t df, dg, i, j
    if not g:
        raise ZeroDivisionError("division by zero polynomial")
    if not f:
        return ()
    df = len(f) - 1
    dg = len(g) - 1
    if df < dg:
        raise ValueError("inexact polynomial division")
    cdef object lcg = g[dg], c
    cdef list r = list(f)
    cdef list q = [0] * (df - dg + 1)
    for i in range(df - dg, -1, -1):
        c = r[dg + i]
        if c % lcg:
            raise ValueError("inexact polynomial division")
        c = c // lcg
        q[i] = c
        if c:
            for j in range(dg + 1):
                r[j + i] = r[j + i] - c * g[j]
    for j in range(len(r)):
        if r[j]:
            raise ValueError("inexact polynomial division")
    return norm(q)


def gcd(f, g):
    """Primitive gcd with positive leading coefficient (primitive PRS)."""
    f = norm(f)
    g = norm(g)
    if not f:
        f, g = g, f
    if not g:
        if not f:
            return ()
        _, p = primitive(f)
        return neg(p) if p[-1] < 0 else p
    _, f = primitive(f)
    _, g = primitive(g)
    while g:
        if len(g) == 1:
            f = (1,)
            break
        _, r = pseudo_divmod(f, g)
        _, r = primitive(r)
        f, g = g, r
    if f[-1] < 0:
        f = neg(f)
    return f


def eval_hom(f, p, q):
    """Homogeneous evaluation: q^deg(f) * f(p/q), exact over the integers."""
    cdef Py_ssize_t i, n = len(f)
    if n == 0:
        return 0
    cdef object acc = f[n - 1], qq = 1
    for i in range(n - 2, -1, -1):
        qq = qq * q
        acc = acc * p + f[i] * qq
    return acc


def eval_int(f, x):
    """Evaluate at an integer point."""
    cdef Py_ssize_t i, n = len(f)
    cdef object acc = 0
    for i in range(n - 1, -1, -1):
        acc = acc * x + f[i]
    return acc


def sqrt(f):
    """Exact square root in Z[x], or None."""
    cdef Py_ssize_t d, h, k, i
    if not f:
        return ()
    d = len(f) - 1
    if d % 2:
        return None
    lc = f[d]
    if lc < 0:
        return None
    s0 = _isqrt(lc)
    if s0 * s0 != lc:
        return None
    h = d // 2
    cdef list s = [0] * (h + 1)
    s[h] = s0
    cdef object acc, num, den
    den = 2 * s0
    for k in range(1, h + 1):
        acc = 0
        for i in range(1, k):
            acc = acc + s[h - i] * s[h - k + i]
        num = f[2 * h - k] - acc
        if num % den:
            return None
        s[h - k] = num // den
    cand = norm(s)
    if mul(cand, cand) != tuple(f):
        return None
    return cand
