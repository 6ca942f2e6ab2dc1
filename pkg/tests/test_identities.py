import pytest

from asmtour.enumeration import enumerate_tournaments
from asmtour.identities import (
    brid_check,
    brid_lhs,
    brid_rhs,
    lhs_refid,
    refid_check,
    rhs_refid,
    rhs_via_oriented,
    tournament_sum,
)
from asmtour.poly import Monomial, Polynomial, substitute_lambda
from asmtour.tournament import out_degrees, upsets


def x(n, i):
    return Polynomial.var(n, "x", i)


def y(n, i):
    return Polynomial.var(n, "y", i)


def test_small_cases():
    assert lhs_refid(1) == rhs_refid(1) == Polynomial.one(1)
    assert lhs_refid(2) == rhs_refid(2) == x(2, 1) + y(2, 2)
    lam = Polynomial.var(2, "lam")
    assert brid_lhs(2) == brid_rhs(2) == x(2, 1) + lam * x(2, 2)
    assert brid_lhs(1) == brid_rhs(1) == Polynomial.one(1)


@pytest.mark.parametrize("n", range(1, 6))
def test_refid_four_ways(n):
    lhs = lhs_refid(n)
    assert lhs == rhs_refid(n) == rhs_via_oriented(n) == tournament_sum(n)
    assert all(m.degree == n * (n - 1) // 2 for m, _ in lhs.terms())


@pytest.mark.parametrize("n", range(1, 6))
def test_brid(n):
    r = brid_check(n)
    assert r.equal


def test_brid_report_counts():
    r = brid_check(4)
    assert r.lhs_raw_terms == 64
    assert r.to_json()["equal"] is True


def test_refid_report():
    r = refid_check(3)
    assert r.equal and r.summary() == "equal, 8 terms"
    assert r.rhs_raw_terms == 8
    assert refid_check(5).rhs_raw_terms == 1024


def test_worked_weight_among_oriented_terms():
    w = Monomial((1, 0, 1, 1, 0), (0, 1, 2, 2, 2))
    assert dict(rhs_via_oriented(5).terms())[w] >= 1


@pytest.mark.parametrize("n", range(1, 5))
def test_substituted_lhs_is_tournament_sum(n):
    acc = {}
    for t in enumerate_tournaments(n):
        m = Monomial(out_degrees(t), (0,) * n, upsets(t))
        acc[m] = acc.get(m, 0) + 1
    assert substitute_lambda(lhs_refid(n)) == Polynomial(n, acc)
    assert substitute_lambda(rhs_refid(n)) == brid_rhs(n)
