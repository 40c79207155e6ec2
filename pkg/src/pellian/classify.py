"""Finite search for the integral members of the torsion families.

Each family gives monic quartics d(x) = x^4 + r2(a)/b^2 x^2 +
r1(a)/b^3 x + r0(a)/b^4.  If some x -> x + c/4 shift of d has integer
coefficients and the Pell equation has an integral solution, a short
list of values is forced to be integers: 8 r2 / b^2, 8 r1 / b^3,
256 r0 / b^4, and the leading coefficient of the minimal-degree
rational solution, which over the generic family is a product of
partial-quotient leads times a power of b.  A b-free product of these
bounds a through a divisor argument, per-prime valuation windows then
bound b, and the finite grid that remains is checked pair by pair.

Parameter values where the generic expansion degenerates are examined
separately: the integrality constraints stay necessary wherever they
are finite (any specialized solution is a power of the fundamental
one, and powers keep integer leads), so only poles of the constraint
values need their own sub-search.
"""

import itertools
import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from fractions import Fraction

from .contfrac import cf_expand
from .curves import family_quartic, family_row
from .errors import (DegenerateParameterError, DomainError, InvariantError,
                     TruncationError)
from .fields import QA, QQ, divisors, is_probable_prime
from .pell import (is_integral_poly, is_pellian_over_Z, g_sequence_at,
                   minimal_solution, period_solution)
from .poly import Poly


SIEVED_OUT = "sieved_out"
NON_SQUAREFREE = "non_squarefree"
NO_INTEGRAL_SHIFT = "no_integral_shift"
SURVIVOR = "survivor"

# scan width for the double-root position in the non-square-free branch
ROOT_SCAN = 10
ROOT_DEPTH = 30


@dataclass
class ConstraintSet:
    """Integrality constraints cutting out the integral family members.

    Each item (expr, w) demands expr(a) / b^w to be an integer; the
    final item has negative weight and is the leading coefficient of
    the minimal-degree solution, so it caps how small b can get while
    the others cap how large.  loci records parameter values where the
    generic expansion degenerates, as (kind, value) pairs.
    """

    m: int
    items: tuple
    loci: tuple
    f_degree: int
    period: tuple


@dataclass
class Candidate:
    """One (a, b) grid point with its fate and, if kept, its witness."""

    a: Fraction
    b: Fraction
    status: str
    reason: str = ""
    shift: int = None
    quartic: Poly = None
    witness: object = None
    canonical: object = None


@dataclass
class LocusSearch:
    """What happened at one degeneration value of the parameter."""

    kinds: tuple
    value: Fraction
    note: str
    candidates: tuple = ()


@dataclass
class SearchResult:
    m: int
    constraints: ConstraintSet
    combination: tuple
    a_candidates: tuple
    candidates: tuple
    survivors: tuple
    sub_searches: tuple
    assumptions: tuple = (
        "the parameter families cover every monic quartic whose Jacobian "
        "divisor class at infinity has the stated torsion order",
    )

    @property
    def pair_count(self):
        return len(self.candidates)


class CanonicalQuartic:
    """Orbit representative of an integer quartic under x -> +-x + k.

    Integer shifts move the cubic coefficient by multiples of 4, so it
    is reduced into {0, 1, 2, 3}; of the reduced d(x) and d(-x) the
    lexicographically larger coefficient tuple (descending order) is
    kept.
    """

    __slots__ = ("poly", "key")

    def __init__(self, poly):
        self.poly = poly
        self.key = tuple(reversed(poly.int_coeffs()))

    def __eq__(self, other):
        return isinstance(other, CanonicalQuartic) and self.key == other.key

    def __hash__(self):
        return hash(self.key)

    def __str__(self):
        return str(self.poly)

    def __repr__(self):
        return "CanonicalQuartic({})".format(self.poly)


def canonicalize(d):
    if d.degree != 4 or d.lead() != d.fld.one:
        raise DomainError("need a monic quartic")
    if not d.is_integral():
        raise DomainError("need integer coefficients")
    best = None
    for cand in (d, d.mirror()):
        reduced = cand.shift(-(int(cand[3]) // 4))
        key = tuple(reversed(reduced.int_coeffs()))
        if best is None or key > best[0]:
            best = (key, reduced)
    return CanonicalQuartic(best[1])


def build_constraints(m, max_steps=None):
    """Constraint set for torsion order m from the generic expansion.

    The family is specialized at b = 1; scale covariance (d_{a,b}(x) =
    b^-4 d_{a,1}(bx)) pins the b weight of every quantity.  Because
    quotient degrees grow strictly, the solution closing the period has
    degree equal to the sum of quotient degrees and leading coefficient
    equal to the product of their leads, so the full convergent is
    never built here.
    """
    fam = family_row(m)
    d = Poly(QA, (fam.r0, fam.r1, fam.r2, QA.zero, QA.one))
    exp = cf_expand(d, max_steps=max_steps)
    if exp.period is None:
        raise TruncationError("no period found within the step bound")
    length = exp.period[1]
    quots = exp.partial_quotients[:length]
    degree = sum(q.degree for q in quots)
    lead = QA.one
    for q in quots:
        lead = lead * q.lead()
    items = [(expr * (8 if w < 4 else 256), w) for expr, w in fam.rows()]
    items.append((lead, -degree))
    loci = sorted({(sc.kind, sc.value) for sc in exp.side_conditions},
                  key=lambda kv: (kv[1], kv[0]))
    return ConstraintSet(m=m, items=tuple(items), loci=tuple(loci),
                         f_degree=degree, period=exp.period)


def b_free_combination(cs):
    """Exponent vector cancelling the b weights, and its product.

    Exponents range over {0,...,3}.  Only products shaped for the
    divisor lemma qualify: denominator vanishing at 0 and numerator of
    strictly larger degree.  Among those, smallest numerator degree
    wins, ties broken by the lexicographically smallest vector.
    """
    weights = [w for _, w in cs.items]
    best = None
    for exps in itertools.product(range(4), repeat=len(weights)):
        if not any(exps) or sum(e * w for e, w in zip(exps, weights)) != 0:
            continue
        prod = QA.one
        for (expr, _), e in zip(cs.items, exps):
            for _ in range(e):
                prod = prod * expr
        num = prod.numerator_poly()
        den = prod.denominator_poly()
        if den[0] != 0 or len(num) <= len(den):
            continue
        rank = (len(num) - 1, exps)
        if best is None or rank < best[0]:
            best = (rank, exps, prod)
    if best is None:
        raise InvariantError(
            "no b-free combination has the divisor-lemma shape")
    return best[1], best[2]


def bound_a(cs, combination=None):
    """Admissible parameter values a = r/s from the divisor lemma.

    For coprime integer polynomials p, q with deg p > deg q and
    q(0) = 0, integrality of p(r/s)/q(r/s) forces s | lead(p) and
    r | p(0); both divisor sets are enumerated with either sign.
    """
    comb = combination if combination is not None else b_free_combination(cs)[1]
    num = comb.numerator_poly()
    if num[0] == 0:
        raise InvariantError("combination numerator vanishes at 0")
    out = set()
    for s in divisors(num[-1]):
        for r in divisors(num[0]):
            if math.gcd(r, s) == 1:
                out.add(Fraction(r, s))
                out.add(Fraction(-r, s))
    return tuple(sorted(out))


def _coprime_basis(values):
    """Pairwise coprime integers > 1 covering every prime of the input.

    Repeated pairwise gcd splitting; the product of the working set
    strictly drops at each split, so this terminates.
    """
    work = sorted({abs(v) for v in values if abs(v) > 1})
    i = 0
    while i < len(work):
        j, split = i + 1, False
        while j < len(work):
            g = math.gcd(work[i], work[j])
            if g > 1:
                a, b = work[i], work[j]
                del work[j]
                del work[i]
                work = sorted(set(work) | {p for p in (g, a // g, b // g)
                                           if p > 1})
                split = True
                break
            j += 1
        i = 0 if split else i + 1
    return work


def _iroot(n, k):
    if n < 2 or k == 1:
        return n
    x = 1 << ((n.bit_length() + k - 1) // k)
    while True:
        y = ((k - 1) * x + n // x ** (k - 1)) // k
        if y >= x:
            break
        x = y
    while x ** k > n:
        x -= 1
    return x

def _power_root(n):
    """(r, t) with r^t = n and r not itself a perfect power."""
    for k in range(2, n.bit_length() + 1):
        r = _iroot(n, k)
        if r ** k == n and r > 1:
            base, t = _power_root(r)
            return base, t * k
    return n, 1


def _multiplicity(n, base):
    e = 0
    while n % base == 0:
        n //= base
        e += 1
    return e


def _valuation_windows(values, seeds):
    """Per-prime ranges for v_p(b) given the (value, weight) items.

    An item demands v_p(value) >= w v_p(b); positive weights bound
    v_p(b) above, the negative-weight lead item bounds it below.  The
    values are decomposed against a coprime basis.  A basis element
    that is not a prime power must keep v_p(b) = 0 for every plausible
    internal multiplicity, otherwise b cannot be pinned down and the
    search refuses to guess.

    Returns a list of (prime, lo, hi) with (lo, hi) != (0, 0), or None
    when some window is empty (no admissible b at all).
    """
    ints = list(seeds)
    for v, _ in values:
        if v:
            ints.append(v.numerator)
            ints.append(v.denominator)
    out = []
    for base in _coprime_basis(ints):
        base, _ = _power_root(base)
        exps = []
        for v, w in values:
            if v == 0:
                exps.append((None, w))
            else:
                e = (_multiplicity(v.numerator, base)
                     - _multiplicity(v.denominator, base))
                exps.append((e, w))

        def window(scale):
            lo, hi = None, None
            for e, w in exps:
                if e is None:
                    continue
                if w > 0:
                    cap = math.floor(Fraction(e * scale, w))
                    hi = cap if hi is None else min(hi, cap)
                else:
                    bot = math.ceil(Fraction(-e * scale, -w))
                    lo = bot if lo is None else max(lo, bot)
            return (0 if lo is None else lo, hi)

        if is_probable_prime(base):
            lo, hi = window(1)
            if hi is None:
                raise InvariantError("no positive-weight item bounds b")
            if lo > hi:
                return None
            if (lo, hi) != (0, 0):
                out.append((base, lo, hi))
            continue
        # composite residue: tolerable only if every multiplicity
        # pattern keeps the window inside {0}
        for scale in range(1, base.bit_length() + 1):
            lo, hi = window(scale)
            if lo < 0 or hi > 0:
                raise InvariantError(
                    "composite residue {} leaves the scale ambiguous"
                    .format(base))
    return out


def valuation_boxes(cs, a):
    """Per-prime windows (p, lo, hi) for v_p(b) at a fixed parameter a.

    None means some window is empty and a admits no b at all; an empty
    list leaves only b = +-1.  A pole or vanishing lead among the
    constraint values raises DegenerateParameterError: such a is not
    covered by the generic grid and needs its own slice search.
    """
    values = []
    for expr, w in cs.items:
        try:
            val = Fraction(expr.evaluate(a))
        except ZeroDivisionError:
            raise DegenerateParameterError(
                "constraint value has a pole", value=a) from None
        if w < 0 and val == 0:
            raise DegenerateParameterError(
                "leading coefficient vanishes", value=a)
        values.append((val, w))
    return _valuation_windows(values, (2, a.numerator, a.denominator))


def bound_b(cs, a):
    """The finite set of admissible scales b at a fixed parameter a."""
    windows = valuation_boxes(cs, a)
    if windows is None:
        return ()
    mags = [Fraction(1)]
    for p, lo, hi in windows:
        mags = [m * Fraction(p) ** v for m in mags for v in range(lo, hi + 1)]
    return tuple(sorted(b for m in mags for b in (m, -m)))


def _squarefree_part_witness(d):
    """gcd(d, d') when nonconstant, else None."""
    g = d
    h = d.derivative()
    while h:
        g, h = h, g % h
    return g if g.degree > 0 else None


def shift_filter(d):
    """First c in {0,1,2,3} with d(x + c/4) integral, with the shift.

    Shifts differing by an integer give equivalent quartics, so only
    the four residues of c matter.
    """
    for c in range(4):
        cand = d.shift(Fraction(c, 4))
        if cand.is_integral():
            return c, cand
    return None


def _evaluate_pair(fam, items, a, b, power_bound):
    """Run one (a, b) pair through recheck, shape filters, and Pell."""
    for expr, w in items:
        val = expr.evaluate(a) if not isinstance(expr, Fraction) else expr
        if (Fraction(val) * Fraction(b) ** (-w)).denominator != 1:
            return Candidate(a=a, b=b, status=SIEVED_OUT,
                             reason="value {} at weight {} is fractional"
                             .format(val, w))
    try:
        d = family_quartic(fam, a, b)
    except DegenerateParameterError as exc:
        return Candidate(a=a, b=b, status=SIEVED_OUT,
                         reason="no quartic: {}".format(exc))
    square = _squarefree_part_witness(d)
    if square is not None:
        return Candidate(a=a, b=b, status=NON_SQUAREFREE, quartic=d,
                         reason="gcd(d, d') = {}".format(square))
    shifted = shift_filter(d)
    if shifted is None:
        return Candidate(a=a, b=b, status=NO_INTEGRAL_SHIFT, quartic=d,
                         reason="all four quarter shifts stay fractional")
    c, d_int = shifted
    sol = is_pellian_over_Z(d_int, power_bound=power_bound)
    if sol is None:
        raise InvariantError(
            "pair ({}, {}) passed every filter but produced no integral "
            "solution within the power bound".format(a, b))
    witness = period_solution(d_int)
    if not (is_integral_poly(witness.f) and is_integral_poly(witness.g)):
        witness = sol
    return Candidate(a=a, b=b, status=SURVIVOR, shift=c, quartic=d_int,
                     witness=witness, canonical=canonicalize(d_int))


_WORKER_STATE = {}


def _grid_worker(task):
    m, a, b, power_bound = task
    if m not in _WORKER_STATE:
        _WORKER_STATE[m] = (family_row(m), build_constraints(m))
    fam, cs = _WORKER_STATE[m]
    cand = _evaluate_pair(fam, cs.items, a, b, power_bound)
    return cand


def _pole_locus_search(cs, fam, value, kinds, power_bound):
    """Search the one-parameter slice at a constraint pole.

    Square-freeness is scale invariant, so a square factor at b = 1
    rules out the whole slice.  Otherwise the minimal solution of the
    b = 1 member transforms under x -> bx with lead lambda b^deg, which
    restores a lead item and the usual b windows apply.
    """
    try:
        d0 = family_quartic(fam, value, Fraction(1))
    except DegenerateParameterError as exc:
        return LocusSearch(kinds=kinds, value=value,
                           note="family undefined here ({})".format(exc))
    if _squarefree_part_witness(d0) is not None:
        return LocusSearch(kinds=kinds, value=value,
                           note="square factor for every scale")
    sol = minimal_solution(d0)
    if sol is None:
        return LocusSearch(kinds=kinds, value=value,
                           note="no periodic expansion here")
    values = []
    for expr, w in cs.items[:-1]:
        try:
            values.append((Fraction(expr.evaluate(value)), w))
        except ZeroDivisionError:
            return LocusSearch(kinds=kinds, value=value,
                               note="coefficient pole; no quartic exists")
    lam = Fraction(sol.f.lead())
    values.append((lam, -sol.f.degree))
    windows = _valuation_windows(
        values, (2, value.numerator, value.denominator))
    cands = []
    if windows is not None:
        mags = [Fraction(1)]
        for p, lo, hi in windows:
            mags = [m * Fraction(p) ** v
                    for m in mags for v in range(lo, hi + 1)]
        items = [(val, w) for val, w in values]
        for mag in sorted(mags):
            for b in (mag, -mag):
                cands.append(_evaluate_pair(fam, items, value, b,
                                            power_bound))
    return LocusSearch(kinds=kinds, value=value,
                       note="pole slice searched with its own lead item",
                       candidates=tuple(cands))


def search_torsion(m, power_bound=6, workers=1, max_steps=None):
    """Full finite search for integral quartics of torsion order m."""
    cs = build_constraints(m, max_steps=max_steps)
    fam = family_row(m)
    exps, comb = b_free_combination(cs)
    a_cands = bound_a(cs, combination=comb)

    grid = []
    degenerate = []
    for a in a_cands:
        try:
            bs = bound_b(cs, a)
        except DegenerateParameterError:
            degenerate.append(a)
            continue
        grid.extend((a, b) for b in bs)

    if workers > 1 and len(grid) > 1:
        tasks = [(m, a, b, power_bound) for a, b in grid]
        with ProcessPoolExecutor(max_workers=workers) as pool:
            candidates = list(pool.map(_grid_worker, tasks, chunksize=8))
    else:
        candidates = [_evaluate_pair(fam, cs.items, a, b, power_bound)
                      for a, b in grid]

    by_value = {}
    for kind, value in cs.loci:
        by_value.setdefault(value, set()).add(kind)
    for a in degenerate:
        by_value.setdefault(a, set()).add("pole")
    subs = []
    for value in sorted(by_value):
        kinds = tuple(sorted(by_value[value]))
        if "pole" in kinds:
            subs.append(_pole_locus_search(cs, fam, value, kinds,
                                           power_bound))
        else:
            subs.append(LocusSearch(
                kinds=kinds, value=value,
                note="constraints stay necessary at specializations; "
                     "covered by the main grid"))

    firsts = {}
    for cand in candidates + [c for s in subs for c in s.candidates]:
        if cand.status == SURVIVOR and cand.canonical.key not in firsts:
            firsts[cand.canonical.key] = (cand.canonical, cand)
    survivors = tuple(firsts[k] for k in sorted(firsts))

    return SearchResult(m=m, constraints=cs, combination=tuple(exps),
                        a_candidates=a_cands, candidates=tuple(candidates),
                        survivors=survivors, sub_searches=tuple(subs))


# ----- non-square-free quartics -----

def _integral_lead_offsets(shape, window):
    """Offsets s whose quadratic admits solutions with integer lead.

    Every integral solution is a power of the fundamental one and the
    lead of the n-th power is 2^(n-1) lambda^n, so some power has
    integer lead exactly when lambda is an integer.
    """
    out = []
    for s in range(-window, window + 1):
        coeffs = (Fraction(s), Fraction(shape), Fraction(1))
        quad = Poly(QQ, coeffs)
        if quad.sqrt() is not None:
            continue
        sol = minimal_solution(quad)
        lam = sol.f.lead()
        if any(2 ** (n - 1) * lam ** n % 1 == 0 for n in range(1, 7)):
            out.append(s)
    return out


def classify_nonsquarefree(scan=ROOT_SCAN, depth=ROOT_DEPTH):
    """All non-square-free monic integral quartics solving the equation.

    They factor as D(x) (x - a)^2 with D an integral squarefree
    quadratic, reduced by an integer shift to x^2 + s or x^2 + x + s.
    Solutions for the quartic are the solutions of D whose denominator
    vanishes at a; the denominators G_n(a) satisfy a three-term
    recurrence, so once |G| grows and keeps growing no further integer
    roots exist and the scan may stop.
    """
    found = {}
    for shape in (0, 1):
        for s in _integral_lead_offsets(shape, window=4 * scan):
            quad = Poly(QQ, (Fraction(s), Fraction(shape), Fraction(1)))
            for a in range(-scan, scan + 1):
                seq = g_sequence_at(quad, Fraction(a), depth)
                twice_f1 = 2 * minimal_solution(quad).f(Fraction(a))
                for n in range(1, len(seq)):
                    if seq[n] == 0:
                        root = Poly(QQ, (Fraction(-a), Fraction(1)))
                        quartic = quad * root * root
                        canon = canonicalize(quartic)
                        found.setdefault(canon.key, canon)
                        break
                    if (abs(seq[n]) > abs(seq[n - 1])
                            and abs(twice_f1) >= 2):
                        break
    return [found[k].poly for k in sorted(found)]
