"""Exhaustive generators for every object family, and the product formula.

All generators are deterministic.  Monotone triangles come out in
lexicographic order of (row n-1, row n-2, ..., row 1), i.e. the row just
above the bottom varies slowest.
"""

from __future__ import annotations

import itertools
from fractions import Fraction
from math import comb
from typing import Iterator, Sequence

from .asm import Asm, Cmt, validate_asm
from .errors import InputError, InvariantBreach, NonIntegralProduct, OrderTooLarge
from .triangle import A, B, Triangle, check_admissible, orientations_of
from .tournament import Tournament

MAX_STANDARD = 6
MAX_GENERAL = 5


def bottom_row(s: Sequence[int]) -> tuple[int, ...]:
    """Validate a bottom row: strictly increasing positive integers."""
    s = tuple(int(v) for v in s)
    if not s:
        raise InputError("bottom row must be non-empty")
    if s[0] < 1 or any(a >= b for a, b in zip(s, s[1:])):
        raise InputError(f"bottom row {s} must be strictly increasing positive integers")
    return s


def standard(n: int) -> tuple[int, ...]:
    return tuple(range(1, n + 1))


def _cap(s: tuple[int, ...]) -> None:
    limit = MAX_STANDARD if s == standard(len(s)) else MAX_GENERAL
    if len(s) > limit:
        raise OrderTooLarge(f"generation is capped at {limit} bottom values, got {len(s)}")


def _rows_above(below: tuple[int, ...], strict: bool) -> Iterator[tuple[int, ...]]:
    """Rows that may sit directly above ``below``.

    Monotone: below[p] <= v <= below[p+1], strictly increasing.
    Strict: below[p] <= v < below[p+1] (rows then increase automatically).
    """
    ranges = [
        range(below[p], below[p + 1] + (0 if strict else 1)) for p in range(len(below) - 1)
    ]
    for row in itertools.product(*ranges):
        if strict or all(a < b for a, b in zip(row, row[1:])):
            yield row


def _triangles(s: tuple[int, ...], strict: bool) -> Iterator[Cmt]:
    def grow(rows):
        if len(rows[0]) == 1:
            yield Cmt(tuple(rows))
            return
        for row in _rows_above(rows[0], strict):
            yield from grow([row] + rows)

    yield from grow([s])


def enumerate_cmt(s: Sequence[int]) -> Iterator[Cmt]:
    s = bottom_row(s)
    _cap(s)
    return _triangles(s, strict=False)


def enumerate_ocmt(s: Sequence[int]) -> Iterator[Triangle]:
    for c in enumerate_cmt(s):
        yield from orientations_of(c)


def enumerate_tournaments(n: int) -> Iterator[Tournament]:
    """Binary counter over the lexicographic pairs; first pair is the high bit, forward = 0."""
    if n < 1:
        raise InputError("order must be positive")
    if n > MAX_STANDARD:
        raise OrderTooLarge(f"generation is capped at order {MAX_STANDARD}")
    for bits in itertools.product((False, True), repeat=n * (n - 1) // 2):
        yield Tournament(n, bits)


def enumerate_strict(s: Sequence[int]) -> Iterator[Cmt]:
    s = bottom_row(s)
    _cap(s)
    return _triangles(s, strict=True)


def lift_strict(c: Cmt) -> Triangle:
    """The b-free pure-V triangle whose left values are the entries of ``c``."""
    n = c.n
    rows = [tuple(A(v, v + n - k) for v in row) for k, row in enumerate(c.rows[:-1], 1)]
    return Triangle.from_rows(rows, c.bottom)


def enumerate_t_s(s: Sequence[int]) -> Iterator[Triangle]:
    """All admissible pure-V triangles over ``s``: strict lifts with every subset of a/b flips.

    Each candidate is re-checked; a rejected one is an invariant breach.
    """
    for c in enumerate_strict(s):
        base = lift_strict(c)
        cells = [(k, p) for k, row in enumerate(base.rows[:-1]) for p in range(len(row))]
        for flips in itertools.product((False, True), repeat=len(cells)):
            rows = [list(r) for r in base.rows[:-1]]
            for (k, p), f in zip(cells, flips):
                if f:
                    e = rows[k][p]
                    rows[k][p] = B(e.i, e.j)
            t = Triangle.from_rows(rows, c.bottom)
            if not check_admissible(t).ok:
                raise InvariantBreach(f"flipped lift is not admissible: {t.tokens()}")
            yield t


def count_strict_formula(s: Sequence[int]) -> int:
    s = bottom_row(s)
    prod = Fraction(1)
    for i, j in itertools.combinations(range(len(s)), 2):
        prod *= Fraction(s[j] - s[i], j - i)
    if prod.denominator != 1:
        raise NonIntegralProduct(f"product for {s} is {prod}")
    return prod.numerator


def count_t_s(s: Sequence[int]) -> int:
    s = bottom_row(s)
    return 2 ** comb(len(s), 2) * count_strict_formula(s)


def alternating_rows(n: int) -> list[tuple[int, ...]]:
    """Every {-1,0,1} vector of length n whose prefix sums stay in {0,1} and end at 1."""
    out = []
    for row in itertools.product((-1, 0, 1), repeat=n):
        acc = list(itertools.accumulate(row))
        if acc[-1] == 1 and all(v in (0, 1) for v in acc):
            out.append(row)
    return out


def enumerate_asm_bruteforce(n: int) -> Iterator[Asm]:
    """ASMs built directly from matrix rows, filtering on column prefix sums.

    Shares no code with the monotone-triangle generator; used as a
    cross-check on it.
    """
    if n < 1:
        raise InputError("order must be positive")
    if n > MAX_STANDARD:
        raise OrderTooLarge(f"generation is capped at order {MAX_STANDARD}")
    rows = alternating_rows(n)

    def extend(chosen, colsum):
        if len(chosen) == n:
            if all(c == 1 for c in colsum):
                yield validate_asm(chosen)
            return
        for r in rows:
            nxt = [c + v for c, v in zip(colsum, r)]
            if all(v in (0, 1) for v in nxt):
                yield from extend(chosen + [r], nxt)

    yield from extend([], [0] * n)
