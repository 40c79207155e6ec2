"""Dense integer-polynomial arithmetic, pure-Python reference kernel.

Polynomials are tuples of Python ints in ascending degree order with a
nonzero last element; the zero polynomial is the empty tuple.  These
routines back the rational-function field used by the symbolic search,
where polynomial gcds dominate the running time.  A Cython twin with the
same interface lives in _intpoly.pyx and is preferred when compiled.
"""

from math import gcd as _igcd, isqrt as _isqrt

BACKEND = "python"


def norm(coeffs):
    """Strip trailing zeros and return a tuple."""
    c = list(coeffs)
    while c and c[-1] == 0:
        c.pop()
    return tuple(c)


def add(f, g):
    if len(f) < len(g):
        f, g = g, f
    out = list(f)
    for i, c in enumerate(g):
        out[i] += c
    return norm(out)


def neg(f):
    return tuple(-c for c in f)


def sub(f, g):
    out = list(f) + [0] * max(0, len(g) - len(f))
    for i, c in enumerate(g):
        out[i] -= c
    return norm(out)


def mul(f, g):
    if not f or not g:
        return ()
    out = [0] * (len(f) + len(g) - 1)
    for i, a in enumerate(f):
        if a:
            for j, b in enumerate(g):
                out[i + j] += a * b
    return norm(out)


def scale(f, c):
    if c == 0:
        return ()
    return tuple(a * c for a in f)


def shift_pow(f, k):
    """Multiply by the k-th power of the variable."""
    if not f:
        return ()
    return (0,) * k + tuple(f)


def content(f):
    """Nonnegative gcd of the coefficients; 0 for the zero polynomial."""
    c = 0
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
    if c in (0, 1):
        return c, tuple(f)
    return c, tuple(a // c for a in f)


def pseudo_divmod(f, g):
    """Pseudo-division: lc(g)^k * f = q*g + r with deg r < deg g.

    k = deg f - deg g + 1.  Requires g nonzero.
    """
    if not g:
        raise ZeroDivisionError("pseudo-division by zero polynomial")
    df, dg = len(f) - 1, len(g) - 1
    if df < dg:
        return (), tuple(f)
    lcg = g[-1]
    r = list(f)
    q = [0] * (df - dg + 1)
    for i in range(df - dg, -1, -1):
        # pivot is read before scaling so lcg*r[dg+i] - c*lcg cancels
        c = r[dg + i]
        for j in range(len(r)):
            r[j] *= lcg
        for j in range(len(q)):
            q[j] *= lcg
        q[i] += c
        for j, b in enumerate(g):
            r[j + i] -= c * b
    del r[dg:]
    return norm(q), norm(r)


def divexact(f, g):
    """Exact quotient f // g; raises if the division leaves a remainder."""
    if not g:
        raise ZeroDivisionError("division by zero polynomial")
    if not f:
        return ()
    df, dg = len(f) - 1, len(g) - 1
    if df < dg:
        raise ValueError("inexact polynomial division")
    lcg = g[-1]
    r = list(f)
    q = [0] * (df - dg + 1)
    for i in range(df - dg, -1, -1):
        c = r[dg + i]
        if c % lcg:
            raise ValueError("inexact polynomial division")
        c //= lcg
        q[i] = c
        if c:
            for j, b in enumerate(g):
                r[j + i] -= c * b
    if any(r):
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
    """Homogeneous evaluation: sum f_i * p^i * q^(deg f - i).

    Equals q^deg(f) * f(p/q); exact for rational arguments p/q.
    """
    if not f:
        return 0
    acc = f[-1]
    qq = 1
    for c in reversed(f[:-1]):
        qq *= q
        acc = acc * p + c * qq
    return acc


def eval_int(f, x):
    """Evaluate at an integer point."""
    acc = 0
    for c in reversed(f):
        acc = acc * x + c
    return acc


def sqrt(f):
    """Exact square root in Z[x], or None.

    Assumes nothing about the input beyond being a normalized tuple.
    """
    if not f:
        return ()
    d = len(f) - 1
    if d % 2:
        return None
    lc = f[-1]
    if lc < 0:
        return None
    s0 = _isqrt(lc)
    if s0 * s0 != lc:
        return None
    h = d // 2
    # descending coefficient recursion: s_k from matching degree 2h - k
    s = [0] * (h + 1)
    s[h] = s0
    for k in range(1, h + 1):
        # coefficient of degree 2h - k in s*s, excluding the 2*s[h]*s[h-k] term
        acc = 0
        for i in range(1, k):
            acc += s[h - i] * s[h - k + i]
        num = f[2 * h - k] - acc
        den = 2 * s0
        if num % den:
            return None
        s[h - k] = num // den
    cand = norm(s)
    if mul(cand, cand) != tuple(f):
        return None
    return cand
