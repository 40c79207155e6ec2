"""Continued fractions of sqrt(d) over K((1/x)).

Golden expansions for the classical quadratics, then the structural
invariants that make the rest of the package trust this module: the
convergent determinant identity, divisibility of d - P^2 by Q at every
step, and the bookkeeping of side conditions in the symbolic case.
"""

import random
from fractions import Fraction

import pytest

from pellian.contfrac import CFExpansion, cf_expand
from pellian.curves import GENERIC_PERIODS, TORSION_ORDERS, family_row
from pellian.errors import DomainError
from pellian.fields import QA, QQ
from pellian.poly import Poly, parse_poly, poly_text


def texts(polys):
    return [poly_text(p) for p in polys]


def rand_pellian_quadratic(rng):
    # x^2 + bx + c that is not a perfect square
    while True:
        b = Fraction(rng.randint(-9, 9), rng.randint(1, 3))
        c = Fraction(rng.randint(-9, 9), rng.randint(1, 3))
        d = Poly(QQ, (c, b, Fraction(1)))
        if d.sqrt() is None:
            return d


def test_golden_quadratic_expansions():
    e = cf_expand(parse_poly("x^2 + 1"))
    assert texts(e.partial_quotients) == ["x", "2*x"]
    assert e.period == (1, 1)
    assert not e.truncated

    cases = {
        "x^2 - 1": (["x", "-2*x", "2*x"], (1, 2)),
        "x^2 + 2": (["x", "x", "2*x"], (1, 2)),
        "x^2 - 2": (["x", "-x", "2*x"], (1, 2)),
        "x^2 + 3": (["x", "2/3*x", "2*x"], (1, 2)),
        "x^2 + 5": (["x", "2/5*x", "2*x"], (1, 2)),
    }
    for text, (quots, period) in cases.items():
        e = cf_expand(parse_poly(text))
        assert texts(e.partial_quotients) == quots, text
        assert e.period == period, text


def test_period_of_shifted_squares():
    # x^2 + s has period length 1 exactly for s = 1
    for s in (1, -1, 2, -2, 3, 5):
        e = cf_expand(parse_poly("x^2 + %d" % s if s > 0 else "x^2 - %d" % -s))
        assert e.period[1] == (1 if s == 1 else 2), s


def test_periodic_part_shape_when_pellian():
    # period starts at index 1 and the closing quotient is twice a0
    for text in ("x^2 + 1", "x^2 - 2", "x^2 + x",
                 "x^4 + 2*x^3 - 7*x^2 - 4*x + 10"):
        e = cf_expand(parse_poly(text))
        start, length = e.period
        assert start == 1
        assert e.quotient_at(start + length - 1) == e.a0 + e.a0


def test_winner_quartic_period_six():
    e = cf_expand(parse_poly("x^4 + 2*x^3 - 7*x^2 - 4*x + 10"))
    assert e.period == (1, 6)
    assert [q.degree for q in e.partial_quotients] == [2, 1, 1, 2, 1, 1, 2]


def test_quotient_at_unrolls_period():
    e = cf_expand(parse_poly("x^2 + 2"))
    assert texts(e.quotient_at(k) for k in range(7)) == \
        ["x", "x", "2*x", "x", "2*x", "x", "2*x"]
    t = cf_expand(parse_poly("x^4 + x + 1"), max_steps=10)
    assert t.truncated and t.period is None
    with pytest.raises(IndexError):
        t.quotient_at(50)


def test_domain_errors():
    for bad in ("x^4", "x^4 - 2*x^2 + 1", "x + 1", "5"):
        with pytest.raises(DomainError):
            cf_expand(parse_poly(bad))


def test_convergent_determinant_identity():
    # p_k q_{k-1} - p_{k-1} q_k == (-1)^(k-1), 100+ random instances
    rng = random.Random(601)
    one = Poly(QQ, (Fraction(1),))
    for _ in range(100):
        d = rand_pellian_quadratic(rng)
        e = cf_expand(d, max_steps=12)
        pm1, qm1 = None, None
        for k, (p, q) in enumerate(e.convergents()):
            if k:
                det = p * qm1 - pm1 * q
                assert det == one * Fraction((-1) ** (k - 1)), (d, k)
            pm1, qm1 = p, q


def test_surd_states_divide():
    # every surd (P, Q) along the expansion satisfies Q | d - P^2
    rng = random.Random(602)
    zero = Poly(QQ, ())
    for _ in range(100):
        d = rand_pellian_quadratic(rng)
        e = cf_expand(d, max_steps=12)
        for surd in e.surds:
            assert (d - surd.P * surd.P) % surd.Q == zero, d
    e = cf_expand(parse_poly("x^4 + 2*x^3 - 7*x^2 - 4*x + 10"))
    for surd in e.surds:
        assert (e.d - surd.P * surd.P) % surd.Q == zero


def test_convergents_approximate_sqrt():
    # deg(p^2 - d q^2) drops below deg q + deg d/2, the defining property
    rng = random.Random(603)
    for _ in range(50):
        d = rand_pellian_quadratic(rng)
        e = cf_expand(d, max_steps=10)
        for p, q in e.convergents():
            err = p * p - d * q * q
            assert err.degree < q.degree + 1, (d, p, q)


def test_symbolic_family_expansion_records_loci():
    fam = family_row(4)
    d = Poly(QA, (fam.r0, fam.r1, fam.r2, QA.zero, QA.one))
    e = cf_expand(d)
    assert e.period == (1, 6)
    assert sorted({(sc.kind, sc.value) for sc in e.side_conditions}) == [
        ("pole", Fraction(0)),
        ("state-collision", Fraction(0)),
        ("state-collision", Fraction(1, 64)),
    ]
    assert [q.degree for q in e.partial_quotients] == [2, 1, 1, 2, 1, 1, 2]


def test_symbolic_periods_match_table():
    for m in TORSION_ORDERS:
        fam = family_row(m)
        d = Poly(QA, (fam.r0, fam.r1, fam.r2, QA.zero, QA.one))
        e = cf_expand(d)
        assert e.period == (1, GENERIC_PERIODS[m]), m


def test_truncation_reports_cleanly():
    t = cf_expand(parse_poly("x^4 + x + 1"), max_steps=10)
    assert t.truncated
    assert t.period is None
    assert len(t.partial_quotients) == 11  # a_0 plus max_steps quotients
