"""One test per acceptance criterion; each records a PASS/FAIL line for the summary."""

import contextlib
import itertools
import pathlib
import random
import time
from math import comb

import numpy as np
import pytest

import worked_example as W
from conftest import reachable_states, record
from asmtour.asm import asm_to_cmt, build_ice_grid, cmt_to_asm, column_sums, validate_asm, validate_cmt
from asmtour.bijection import (
    applicable_lowers,
    applicable_raises,
    lower_op,
    phi,
    phi_any_order,
    phi_s,
    psi,
    psi_s,
    raise_op,
)
from asmtour.enumeration import (
    count_strict_formula,
    count_t_s,
    enumerate_asm_bruteforce,
    enumerate_cmt,
    enumerate_ocmt,
    enumerate_strict,
    enumerate_t_s,
    enumerate_tournaments,
    standard,
)
from asmtour.identities import brid_check, lhs_refid, rhs_refid, rhs_via_oriented, tournament_sum
from asmtour.triangle import Triangle
from asmtour.tournament import Tournament

pytestmark = pytest.mark.acceptance

GOLDEN = (pathlib.Path(__file__).parent / "data" / "worked_trace.txt").read_text()

LIMIT_GOLDEN = 0.1
LIMIT_REFID = 10.0
LIMIT_CONFLUENCE = 30.0


@contextlib.contextmanager
def criterion(name):
    notes = []
    try:
        yield notes
    except BaseException as exc:
        record(name, False, "; ".join(notes + [str(exc).splitlines()[0] if str(exc) else type(exc).__name__]))
        raise
    record(name, True, "; ".join(notes))


def test_c1_golden_worked_example():
    with criterion("1 golden worked example") as notes:
        o = Triangle.from_tokens(W.OCMT)
        start = time.perf_counter()
        tour, trace = phi(o)
        text = trace.to_text()
        elapsed = time.perf_counter() - start
        notes.append(f"{elapsed:.4f} s")
        assert tour == Tournament.from_edges(5, W.TOURNAMENT_EDGES), "tournament differs"
        assert elapsed < LIMIT_GOLDEN, f"took {elapsed:.3f} s"
        got, want = text.splitlines(), GOLDEN.splitlines()
        bad = [(k + 1, a, b) for k, (a, b) in enumerate(zip(got, want)) if a != b]
        assert len(got) == len(want), "line count differs"
        assert not bad, "trace line {} is {!r}, printed {!r}".format(*bad[0])


def test_c2_conversion_goldens():
    with criterion("2 conversion goldens"):
        a = validate_asm(W.ASM)
        assert column_sums(a).tolist() == W.COLSUM
        assert [list(r) for r in asm_to_cmt(a).rows] == W.CMT
        assert [list(r) for r in cmt_to_asm(validate_cmt(W.CMT)).rows] == W.ASM
        grid = build_ice_grid(a)
        assert [list(r) for r in grid.types] == W.ICE_TYPES
        v_cells = sorted((i, j) for i, r in enumerate(grid.types) for j, t in enumerate(r) if t == "V")
        assert v_cells == sorted(map(tuple, np.argwhere(np.array(W.ASM) == -1).tolist()))


def test_c3_refid():
    with criterion("3 refined identity, four routes, n=1..5") as notes:
        start = time.perf_counter()
        for n in range(1, 6):
            lhs = lhs_refid(n)
            assert lhs == rhs_refid(n), f"n={n}: product vs ASM sum"
            assert lhs == rhs_via_oriented(n), f"n={n}: product vs oriented sum"
            assert lhs == tournament_sum(n), f"n={n}: product vs tournament sum"
        elapsed = time.perf_counter() - start
        notes.append(f"{elapsed:.2f} s")
        assert elapsed < LIMIT_REFID, f"took {elapsed:.2f} s"


def test_c4_brid():
    with criterion("4 lambda identity, n=1..5"):
        for n in range(1, 6):
            assert brid_check(n).equal, f"n={n}"


def test_c5_bijection_suite():
    with criterion("5 bijection suite, n<=4, checked steps") as notes:
        total = 0
        for n in range(1, 5):
            os_ = list(enumerate_ocmt(standard(n)))
            ts = list(enumerate_tournaments(n))
            assert len(os_) == len(ts) == 2 ** comb(n, 2)
            for o in os_:
                assert psi(phi(o, check=True)[0], check=True)[0] == o
            for t in ts:
                assert phi(psi(t, check=True)[0], check=True)[0] == t
            total += len(os_) + len(ts)
        notes.append(f"{total} round trips")


def test_c6_inverse_and_commutation():
    with criterion("6 inverse and commutation lemmas, order 4") as notes:
        states = reachable_states(4)
        inv = comm = 0
        for t in states:
            for d in applicable_raises(t):
                assert lower_op(raise_op(t, d), d) == t
                inv += 1
            for d in applicable_lowers(t):
                assert raise_op(lower_op(t, d), d) == t
                inv += 1
            for i, j in itertools.combinations(applicable_raises(t), 2):
                assert raise_op(raise_op(t, i), j) == raise_op(raise_op(t, j), i)
                comm += 1
        assert comm > 0
        notes.append(f"{len(states)} states, {inv} inverse checks, {comm} commuting pairs")


def test_c7_confluence():
    with criterion("7 confluence") as notes:
        rng = random.Random(20260101)
        start = time.perf_counter()
        checked = 0
        for o in enumerate_ocmt(standard(4)):
            want = phi(o)[0]
            for _ in range(100):
                assert phi_any_order(o, rng.getrandbits(64))[0] == want
                checked += 1
        for o in rng.sample(list(enumerate_ocmt(standard(5))), 20):
            want = phi(o)[0]
            for _ in range(100):
                assert phi_any_order(o, rng.getrandbits(64))[0] == want
                checked += 1
        elapsed = time.perf_counter() - start
        notes.append(f"{checked} orders in {elapsed:.2f} s")
        assert elapsed < LIMIT_CONFLUENCE, f"took {elapsed:.2f} s"


def test_c8_counting():
    with criterion("8 counting"):
        for n, want in zip(range(1, 6), [1, 2, 7, 42, 429]):
            assert sum(1 for _ in enumerate_cmt(standard(n))) == want
            assert sum(1 for _ in enumerate_asm_bruteforce(n)) == want
            assert sum(1 for _ in enumerate_ocmt(standard(n))) == 2 ** comb(n, 2)
            assert sum(1 for _ in enumerate_tournaments(n)) == 2 ** comb(n, 2)


def test_c9_generalized_formulas():
    with criterion("9 bottom-row formulas") as notes:
        subsets = 0
        for size in (2, 3, 4):
            for s in itertools.combinations(range(1, 9), size):
                assert count_strict_formula(s) == sum(1 for _ in enumerate_strict(s)), s
                subsets += 1
        s = (1, 2, 4, 5)
        assert [[list(r) for r in c.rows] for c in enumerate_strict(s)] == W.STRICT_1245
        assert count_t_s(s) == 384
        ts = set(enumerate_t_s(s))
        assert len(ts) == 384
        assert {phi_s(o) for o in enumerate_ocmt(s)} == ts
        for s3 in itertools.combinations(range(1, 7), 3):
            for o in enumerate_ocmt(s3):
                assert psi_s(phi_s(o)) == o
            for t in enumerate_t_s(s3):
                assert phi_s(psi_s(t)) == t
        notes.append(f"{subsets} subsets")
