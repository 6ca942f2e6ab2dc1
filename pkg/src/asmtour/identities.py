"""Both sides of the refined identity and its lambda specialization, built exactly."""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .asm import cmt_to_asm, vertex_stats
from .enumeration import enumerate_cmt, enumerate_ocmt, enumerate_tournaments, standard
from .poly import Monomial, Polynomial, check_order
from .triangle import triangle_weight
from .tournament import out_degrees, tournament_weight, upsets


def lhs_refid(n: int) -> Polynomial:
    """Expand the product of (x_i + y_j) over all pairs i < j."""
    check_order(n)
    p = Polynomial.one(n)
    for i, j in itertools.combinations(range(1, n + 1), 2):
        p = p * (Polynomial.var(n, "x", i) + Polynomial.var(n, "y", j))
    return p


def _asm_term(n, stats) -> Polynomial:
    base = Polynomial.monomial(Monomial(stats.se, stats.sw))
    for i, v in enumerate(stats.v, 1):
        if v:
            base = base * (Polynomial.var(n, "x", i) + Polynomial.var(n, "y", i)) ** v
    return base


def rhs_refid(n: int) -> Polynomial:
    """Sum over ASMs of prod x_i^SE_i y_i^SW_i (x_i + y_i)^V_i."""
    check_order(n)
    total = Polynomial.zero(n)
    for c in enumerate_cmt(standard(n)):
        total = total + _asm_term(n, vertex_stats(cmt_to_asm(c)))
    return total


def rhs_via_oriented(n: int) -> Polynomial:
    """Sum of weights of all oriented complete monotone triangles."""
    check_order(n)
    acc: dict[Monomial, int] = {}
    for o in enumerate_ocmt(standard(n)):
        m = triangle_weight(o)
        acc[m] = acc.get(m, 0) + 1
    return Polynomial(n, acc)


def tournament_sum(n: int) -> Polynomial:
    """Sum of tournament weights."""
    check_order(n)
    acc: dict[Monomial, int] = {}
    for t in enumerate_tournaments(n):
        m = tournament_weight(t)
        acc[m] = acc.get(m, 0) + 1
    return Polynomial(n, acc)


def brid_lhs(n: int) -> Polynomial:
    """Sum over tournaments of lambda^upsets * prod x_i^outdeg(i)."""
    check_order(n)
    zero = (0,) * n
    acc: dict[Monomial, int] = {}
    for t in enumerate_tournaments(n):
        m = Monomial(out_degrees(t), zero, upsets(t))
        acc[m] = acc.get(m, 0) + 1
    return Polynomial(n, acc)


def brid_rhs(n: int) -> Polynomial:
    """Sum over ASMs of lambda^SW (1 + lambda)^V prod x_i^(SW_i + SE_i + V_i)."""
    check_order(n)
    one_plus_lam = Polynomial.one(n) + Polynomial.var(n, "lam")
    total = Polynomial.zero(n)
    for c in enumerate_cmt(standard(n)):
        st = vertex_stats(cmt_to_asm(c))
        x = tuple(a + b + v for a, b, v in zip(st.sw, st.se, st.v))
        term = Polynomial.monomial(Monomial(x, (0,) * n, st.SW)) * one_plus_lam ** st.V
        total = total + term
    return total


@dataclass(frozen=True)
class VerificationReport:
    identity: str
    n: int
    equal: bool
    lhs: Polynomial
    rhs: Polynomial
    lhs_raw_terms: int
    rhs_raw_terms: int

    @property
    def terms(self) -> int:
        return len(self.lhs)

    def summary(self) -> str:
        verdict = "equal" if self.equal else "NOT equal"
        return f"{verdict}, {len(self.lhs)} terms"

    def to_json(self) -> dict:
        return {
            "identity": self.identity,
            "n": self.n,
            "equal": self.equal,
            "lhs_terms": len(self.lhs),
            "rhs_terms": len(self.rhs),
            "lhs_raw_terms": self.lhs_raw_terms,
            "rhs_raw_terms": self.rhs_raw_terms,
        }


def _raw_count(n: int) -> int:
    return 2 ** (n * (n - 1) // 2)


def _oriented_count(n: int) -> int:
    return sum(2 ** vertex_stats(cmt_to_asm(c), cross_check=False).V for c in enumerate_cmt(standard(n)))


def refid_check(n: int) -> VerificationReport:
    lhs, rhs = lhs_refid(n), rhs_refid(n)
    return VerificationReport("refid", n, lhs == rhs, lhs, rhs, _raw_count(n), _oriented_count(n))


def brid_check(n: int) -> VerificationReport:
    lhs, rhs = brid_lhs(n), brid_rhs(n)
    return VerificationReport("brid", n, lhs == rhs, lhs, rhs, _raw_count(n), _oriented_count(n))
