"""Raising and lowering operators and the bijections built from them.

``raise_op(t, d)`` trades the X-row d with the V-row (or empty row 0)
directly above it; ``lower_op`` undoes it.  ``phi`` composes C(n, 2)
raises to carry an oriented monotone triangle to a tournament and ``psi``
composes the matching lowers.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import NamedTuple, Sequence

from .errors import IndexOverflow, InvariantBreach, NonStandardBottomRow, NotAdmissible, NotApplicable, NotPureV
from .triangle import (
    A,
    B,
    Entry,
    Triangle,
    X,
    Y,
    as_oriented_cmt,
    check_admissible,
    compute_ranking,
    format_triangle,
    triangle_weight,
)
from .tournament import Tournament, tournament_to_triangle, triangle_to_tournament


class Swap(NamedTuple):
    """Phase-one exchange between row d-1 (``upper``) and row d (``lower``).

    Positions are 1-based; entries are as they were before the swap.
    """

    upper_pos: int
    lower_pos: int
    upper_entry: Entry
    lower_entry: Entry


@dataclass(frozen=True)
class OpStep:
    kind: str  # 'R' or 'L'
    d: int
    before: Triangle
    after: Triangle
    swaps: tuple[Swap, ...]
    ranks_after: tuple[int, ...]


@dataclass(frozen=True)
class Trace:
    initial: Triangle
    ranks_initial: tuple[int, ...]
    steps: tuple[OpStep, ...]

    @property
    def final(self) -> Triangle:
        return self.steps[-1].after if self.steps else self.initial

    def to_json(self) -> dict:
        return {
            "steps": [
                {"op": s.kind, "d": s.d, "ranks_after": list(s.ranks_after), "triangle_after": s.after.to_json()}
                for s in self.steps
            ]
        }

    def to_text(self) -> str:
        return format_trace(self)


def _fresh_a(i: int, t: int, bound: int) -> Entry:
    if i + t > bound:
        raise IndexOverflow(f"a_({i},{i + t}) exceeds the bound {bound}")
    return A(i, i + t)


def _fresh_b(j: int, t: int) -> Entry:
    if j - t < 1:
        raise IndexOverflow(f"b_({j - t},{j}) falls below 1")
    return B(j - t, j)


def _check_disjoint(swaps: list[Swap]) -> None:
    lows = [s.lower_pos for s in swaps]
    if len(set(lows)) != len(lows):
        raise InvariantBreach(f"phase-one swaps overlap at lower positions {lows}")


def _raise(t: Triangle, d: int) -> tuple[Triangle, tuple[Swap, ...]]:
    n = t.n
    if not 1 <= d < n:
        raise NotApplicable("R", d, f"row index must satisfy 1 <= d < {n}")
    if not t.is_x_row(d):
        raise NotApplicable("R", d, f"row {d} is not an X-row")
    if not t.is_v_row(d - 1):
        raise NotApplicable("R", d, f"row {d - 1} is not a V-row")
    rank = compute_ranking(t)[d]
    upper, lower = list(t.row(d - 1)), list(t.row(d))

    swaps = []
    for p, v in enumerate(upper):
        if v.kind == "b" and lower[p].kind == "x" and lower[p].i == v.i:
            swaps.append(Swap(p + 1, p + 1, v, lower[p]))
        elif v.kind == "a" and lower[p + 1].kind == "y" and lower[p + 1].j == v.j:
            swaps.append(Swap(p + 1, p + 2, v, lower[p + 1]))
    _check_disjoint(swaps)
    for s in swaps:
        upper[s.upper_pos - 1], lower[s.lower_pos - 1] = s.lower_entry, s.upper_entry

    upper = [X(e.i) if e.kind == "a" else Y(e.j) if e.kind == "b" else e for e in upper]
    bound = t.bound
    lower = [
        _fresh_a(e.i, rank, bound) if e.kind == "x" else _fresh_b(e.j, rank) if e.kind == "y" else e
        for e in lower
    ]
    return t.replace_rows({d - 1: upper, d: lower}), tuple(swaps)


def _lower(t: Triangle, d: int) -> tuple[Triangle, tuple[Swap, ...]]:
    n = t.n
    if not 1 <= d < n:
        raise NotApplicable("L", d, f"row index must satisfy 1 <= d < {n}")
    kind, rank = t.row_kind(d)
    if kind != "v":
        raise NotApplicable("L", d, f"row {d} is not a V-row")
    if not t.is_x_row(d - 1):
        raise NotApplicable("L", d, f"row {d - 1} is not an X-row")
    compute_ranking(t)
    upper, lower = list(t.row(d - 1)), list(t.row(d))

    swaps = []
    for p, v in enumerate(upper):
        if v.kind == "x" and lower[p].kind == "b" and lower[p].i == v.i:
            swaps.append(Swap(p + 1, p + 1, v, lower[p]))
        elif v.kind == "y" and lower[p + 1].kind == "a" and lower[p + 1].j == v.j:
            swaps.append(Swap(p + 1, p + 2, v, lower[p + 1]))
    _check_disjoint(swaps)
    for s in swaps:
        upper[s.upper_pos - 1], lower[s.lower_pos - 1] = s.lower_entry, s.upper_entry

    # Unswapped x/y left in row d-1 become edges of row d's difference;
    # unswapped a/b left in row d return to x/y.
    bound = t.bound
    upper = [
        _fresh_a(e.i, rank, bound) if e.kind == "x" else _fresh_b(e.j, rank) if e.kind == "y" else e
        for e in upper
    ]
    lower = [X(e.i) if e.kind == "a" else Y(e.j) if e.kind == "b" else e for e in lower]
    return t.replace_rows({d - 1: upper, d: lower}), tuple(swaps)


def raise_op(t: Triangle, d: int) -> Triangle:
    return _raise(t, d)[0]


def lower_op(t: Triangle, d: int) -> Triangle:
    return _lower(t, d)[0]


def applicable_raises(t: Triangle) -> list[int]:
    out = [d for d in range(1, t.n) if t.is_x_row(d) and t.is_v_row(d - 1)]
    if any(b - a < 2 for a, b in zip(out, out[1:])):
        raise InvariantBreach(f"adjacent raising operators applicable: {out}")
    return out


def applicable_lowers(t: Triangle) -> list[int]:
    return [d for d in range(1, t.n) if t.row_kind(d)[0] == "v" and t.is_x_row(d - 1)]


def raise_sequence(n: int) -> list[int]:
    """Row indices in application order: R_1; R_2, R_1; ...; R_{n-1}, ..., R_1."""
    return [d for g in range(1, n) for d in range(g, 0, -1)]


def lower_sequence(n: int) -> list[int]:
    """Reverse of :func:`raise_sequence`."""
    return raise_sequence(n)[::-1]


def _step(kind: str, t: Triangle, d: int, check: bool) -> OpStep:
    after, swaps = (_raise if kind == "R" else _lower)(t, d)
    ranks = compute_ranking(after)
    if check:
        report = check_admissible(after)
        if not report.ok:
            raise InvariantBreach(f"{kind}_{d} broke admissibility: {report.violations}")
        if triangle_weight(after) != triangle_weight(t):
            raise InvariantBreach(f"{kind}_{d} changed the weight")
    return OpStep(kind, d, t, after, swaps, ranks)


def run_ops(t: Triangle, kind: str, seq: Sequence[int], check: bool = False) -> Trace:
    """Apply ``kind`` ('R' or 'L') operators in order, recording each step.

    With ``check`` every intermediate triangle is re-verified for
    admissibility and weight, raising :class:`InvariantBreach` on failure.
    """
    steps = []
    cur = t
    for d in seq:
        step = _step(kind, cur, d, check)
        steps.append(step)
        cur = step.after
    return Trace(t, compute_ranking(t), tuple(steps))


def _require_ocmt(o: Triangle) -> None:
    as_oriented_cmt(o)


def _require_pure_v(t: Triangle) -> None:
    if not t.is_pure_v:
        raise NotPureV("rows above the bottom must hold only a/b entries")
    report = check_admissible(t)
    if not report.ok:
        raise NotAdmissible(f"not admissible: {report.violations[0].detail}", report)


def phi_s(o: Triangle, check: bool = False) -> Triangle:
    return phi_s_trace(o, check).final


def phi_s_trace(o: Triangle, check: bool = False) -> Trace:
    _require_ocmt(o)
    return run_ops(o, "R", raise_sequence(o.n), check)


def psi_s(t: Triangle, check: bool = False) -> Triangle:
    return psi_s_trace(t, check).final


def psi_s_trace(t: Triangle, check: bool = False) -> Trace:
    _require_pure_v(t)
    return run_ops(t, "L", lower_sequence(t.n), check)


def phi(o: Triangle, check: bool = False) -> tuple[Tournament, Trace]:
    if not o.is_standard:
        raise NonStandardBottomRow(f"bottom row {o.bottom} is not 1..{o.n}; use phi_s")
    trace = phi_s_trace(o, check)
    return triangle_to_tournament(trace.final), trace


def psi(t: Tournament, check: bool = False) -> tuple[Triangle, Trace]:
    trace = run_ops(tournament_to_triangle(t), "L", lower_sequence(t.n), check)
    as_oriented_cmt(trace.final)
    return trace.final, trace


def phi_any_order(o: Triangle, seed=None, check: bool = False) -> tuple[Tournament, Trace]:
    """Raise in a random achievable order until no raise applies."""
    _require_ocmt(o)
    rng = random.Random(seed)
    steps = []
    cur = o
    while True:
        options = applicable_raises(cur)
        if not options:
            break
        step = _step("R", cur, rng.choice(options), check)
        steps.append(step)
        cur = step.after
    n = o.n
    if len(steps) != n * (n - 1) // 2:
        raise InvariantBreach(f"random raising stopped after {len(steps)} steps")
    trace = Trace(o, compute_ranking(o), tuple(steps))
    return triangle_to_tournament(cur), trace


def format_trace(trace: Trace) -> str:
    """Every triangle of the trace with its rank brackets, headed by the operator."""
    tris = [trace.initial] + [s.after for s in trace.steps]
    width = max(len(tok) for t in tris for tok in format_triangle(t).split())
    blocks = [("start", trace.initial, trace.ranks_initial)]
    blocks += [(f"{s.kind}_{s.d}", s.after, s.ranks_after) for s in trace.steps]
    return "\n\n".join(f"{head}\n{format_triangle(t, ranks, width)}" for head, t, ranks in blocks) + "\n"
