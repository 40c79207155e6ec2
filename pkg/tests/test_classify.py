"""The finite search over family parameters and its bookkeeping.

The m = 4 run is pinned down tightly (it is the one that produces a
Pellian quartic); the others are covered by the acceptance suite.  The
canonicalization that dedupes survivors is checked as a class function
on random orbits.
"""

import random
from collections import Counter
from fractions import Fraction

import pytest

from pellian.classify import (CanonicalQuartic, b_free_combination, bound_a,
                              bound_b, build_constraints, canonicalize,
                              classify_nonsquarefree, search_torsion,
                              shift_filter, valuation_boxes)
from pellian.curves import GENERIC_PERIODS, TORSION_ORDERS
from pellian.errors import DegenerateParameterError, DomainError
from pellian.fields import QQ
from pellian.poly import Poly, parse_poly, poly_text
from pellian.ratfun import RatFun

WINNER = "x^4 + 2*x^3 - 7*x^2 - 4*x + 10"


def test_constraints_for_m4():
    cs = build_constraints(4)
    assert cs.f_degree == 8
    assert cs.period == (1, 6)
    assert [(str(e), w) for e, w in cs.items] == [
        ("64*a - 16", 2),
        ("256*a", 3),
        ("4096*a^2 + 6144*a + 256", 4),
        ("1/(512*a^3)", -8),
    ]
    assert cs.loci == (("pole", Fraction(0)),
                       ("state-collision", Fraction(0)),
                       ("state-collision", Fraction(1, 64)))


def test_constraint_degrees_follow_periods():
    for m in TORSION_ORDERS:
        cs = build_constraints(m)
        assert cs.period == (1, GENERIC_PERIODS[m]), m


def test_b_free_combination_m4():
    cs = build_constraints(4)
    exps, prod = b_free_combination(cs)
    assert exps == (0, 0, 2, 1)
    a = RatFun.var()
    assert prod == (32768 * a ** 4 + 98304 * a ** 3 + 77824 * a ** 2
                    + 6144 * a + 128) / a ** 3
    # the combination really is b-free: weights cancel
    weights = [w for _, w in cs.items]
    assert sum(e * w for e, w in zip(exps, weights)) == 0


def test_bound_a_m4():
    cs = build_constraints(4)
    cands = bound_a(cs)
    assert len(cands) == 46
    assert max(cands) == 128 and min(cands) == -128
    for v in ("2", "-2", "1/64", "-1/64", "1", "-1"):
        assert Fraction(v) in cands, v
    # candidates where the b-free combination is fractional cannot admit
    # any scale; the valuation windows must come back empty for them
    _, prod = b_free_combination(cs)
    for a in cands:
        if prod.evaluate(a).denominator != 1:
            assert bound_b(cs, a) == (), a


def test_valuation_boxes_and_bound_b():
    cs = build_constraints(4)
    assert valuation_boxes(cs, Fraction(-1, 64)) == [(2, -1, 0)]
    assert bound_b(cs, Fraction(-1, 64)) == \
        (Fraction(-1), Fraction(-1, 2), Fraction(1, 2), Fraction(1))
    assert bound_b(cs, Fraction(2)) == (Fraction(-4), Fraction(4))
    # a pole of a constraint value is degenerate and needs a slice search
    with pytest.raises(DegenerateParameterError):
        valuation_boxes(cs, Fraction(0))
    # a collision locus off the poles still has honest windows: the
    # constraints remain necessary there and the grid covers it
    assert valuation_boxes(cs, Fraction(1, 64)) == [(2, -1, 0)]
    assert valuation_boxes(cs, Fraction(1, 4)) == [(2, 1, 2)]


def test_shift_filter():
    assert shift_filter(parse_poly("x^4 + 7/8*x^2 + x + 113/256")) is None
    c, cand = shift_filter(parse_poly("x^4 - 17/2*x^2 + 4*x + 161/16"))
    assert c == 2 and poly_text(cand) == WINNER
    c, cand = shift_filter(parse_poly(WINNER))
    assert c == 0 and poly_text(cand) == WINNER


def test_search_m4_checkpoints():
    res = search_torsion(4)
    assert len(res.a_candidates) == 46
    assert len(res.candidates) == 84
    counts = Counter(c.status for c in res.candidates)
    assert counts == {"no_integral_shift": 78, "non_squarefree": 4,
                      "survivor": 2}

    by_pair = {(c.a, c.b): c for c in res.candidates}
    assert by_pair[(Fraction(2), Fraction(4))].status == "no_integral_shift"
    for b in (1, -1, 2, -2):
        assert by_pair[(Fraction(-1, 16), Fraction(b))].status == \
            "non_squarefree"
    for b in (Fraction(1, 2), Fraction(-1, 2)):
        assert by_pair[(Fraction(-1, 64), b)].status == "survivor"

    # both survivor pairs collapse to a single canonical quartic
    assert len(res.survivors) == 1
    canon, cand = res.survivors[0]
    assert poly_text(canon.poly) == WINNER
    assert cand.shift == 2
    w = cand.witness
    assert w.index == 2
    assert poly_text(w.f) == ("2*x^8 + 24*x^7 + 100*x^6 + 120*x^5 - 266*x^4"
                              " - 792*x^3 - 244*x^2 + 912*x + 721")
    assert poly_text(w.g) == ("2*x^6 + 22*x^5 + 86*x^4 + 118*x^3 - 74*x^2"
                              " - 334*x - 228")
    assert w.verify()
    assert w.f.is_integral() and w.g.is_integral()

    # sub-searches cover exactly the degeneration loci
    subs = {s.value: s for s in res.sub_searches}
    assert sorted(subs) == [Fraction(0), Fraction(1, 64)]
    assert subs[Fraction(0)].kinds == ("pole", "state-collision")
    assert subs[Fraction(0)].note == "square factor for every scale"
    assert subs[Fraction(1, 64)].kinds == ("state-collision",)
    assert res.assumptions  # exhaustiveness caveat travels with results


def test_search_m5_empty():
    res = search_torsion(5)
    assert len(res.candidates) == 16
    assert all(c.status == "no_integral_shift" for c in res.candidates)
    assert res.survivors == ()


def test_search_workers_agree():
    seq = search_torsion(5, workers=1)
    par = search_torsion(5, workers=2)
    assert [(c.a, c.b, c.status) for c in seq.candidates] == \
        [(c.a, c.b, c.status) for c in par.candidates]
    assert seq.survivors == par.survivors


def test_search_rejects_bad_order():
    with pytest.raises(DomainError):
        search_torsion(3)
    with pytest.raises(DomainError):
        search_torsion(11)


def test_canonicalize_golden():
    d = parse_poly(WINNER)
    canon = canonicalize(d)
    assert poly_text(canon.poly) == WINNER
    assert canonicalize(d.shift(7)) == canon
    assert canonicalize(d.mirror()) == canon
    other = canonicalize(parse_poly("x^4 + 2*x^3 - 7*x^2 - 12*x + 6"))
    assert other == canon


def test_canonicalize_constant_on_orbits():
    # same representative across x -> +-x + k, 100 random orbits
    rng = random.Random(901)
    for _ in range(100):
        d = Poly(QQ, tuple(Fraction(rng.randint(-30, 30)) for _ in range(4))
                 + (Fraction(1),))
        canon = canonicalize(d)
        assert canonicalize(canon.poly) == canon  # idempotent
        for _ in range(5):
            img = d.shift(rng.randint(-9, 9))
            if rng.random() < 0.5:
                img = img.mirror()
            assert canonicalize(img) == canon, (d, img)
        # the cubic coefficient of the representative is reduced
        assert 0 <= canon.poly[3] < 4


def test_canonicalize_rejects_non_quartics():
    with pytest.raises(DomainError):
        canonicalize(parse_poly("x^2 + 1"))
    with pytest.raises(DomainError):
        canonicalize(parse_poly("2*x^4 + 1"))
    with pytest.raises(DomainError):
        canonicalize(parse_poly("x^4 + 1/2*x + 1"))


def test_classify_nonsquarefree_golden():
    got = [poly_text(p) for p in classify_nonsquarefree()]
    assert got == [
        "x^4 - 2*x^2",
        "x^4 - x^2",
        "x^4 + x^2",
        "x^4 + 2*x^2",
        "x^4 + 2*x^3 - x^2",
    ]
    # each really is a non-squarefree Pellian shape: square factor present
    for text in got:
        p = parse_poly(text)
        assert not p.is_squarefree()
