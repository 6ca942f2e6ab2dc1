"""Triangles whose entries are numerals, x/y symbols or a/b edge symbols.

One type carries oriented monotone triangles, tournaments and every
intermediate state of the raising/lowering algorithm.  Rows are numbered
1..n from the top; the notional empty row 0 sits above row 1 and is never
stored.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Iterable, NamedTuple, Sequence

from .asm import Cmt, entry_type, validate_cmt
from .errors import (
    InputError,
    InvalidTriangle,
    MixedRow,
    NotAdmissible,
    NotPureX,
    RankMismatch,
)
from .poly import Monomial


class Entry(NamedTuple):
    """``kind`` is one of 'n', 'x', 'y', 'a', 'b'.

    Numerals and x/y symbols keep their single subscript in both ``i`` and
    ``j`` so that ``X(i).i`` and ``Y(j).j`` read naturally.
    """

    kind: str
    i: int
    j: int

    @property
    def token(self) -> str:
        if self.kind in "ab":
            return f"{self.kind}:{self.i}:{self.j}"
        return f"{self.kind}:{self.i}"

    @property
    def is_x(self) -> bool:
        return self.kind in "xy"

    @property
    def is_v(self) -> bool:
        return self.kind in "ab"

    def __repr__(self) -> str:
        return self.token


def Num(v: int) -> Entry:
    return Entry("n", v, v)


def X(i: int) -> Entry:
    return Entry("x", i, i)


def Y(j: int) -> Entry:
    return Entry("y", j, j)


def A(i: int, j: int) -> Entry:
    return Entry("a", i, j)


def B(i: int, j: int) -> Entry:
    return Entry("b", i, j)


def parse_token(tok: str) -> Entry:
    parts = tok.split(":")
    try:
        kind, nums = parts[0], [int(p) for p in parts[1:]]
    except ValueError as exc:
        raise InvalidTriangle(f"bad entry token {tok!r}") from exc
    if kind in ("n", "x", "y") and len(nums) == 1:
        return Entry(kind, nums[0], nums[0])
    if kind in ("a", "b") and len(nums) == 2:
        return Entry(kind, nums[0], nums[1])
    raise InvalidTriangle(f"bad entry token {tok!r}")


def _subscript(e: Entry) -> str:
    if e.kind == "n":
        return str(e.i)
    if e.kind in "xy":
        return f"{e.kind}_{e.i}"
    if e.i < 10 and e.j < 10:
        return f"{e.kind}_{{{e.i}{e.j}}}"
    return f"{e.kind}_{{{e.i},{e.j}}}"


@dataclass(frozen=True)
class Triangle:
    rows: tuple[tuple[Entry, ...], ...]
    _kinds: tuple = field(init=False, repr=False, compare=False, hash=False)

    def __post_init__(self):
        rows = self.rows
        n = len(rows)
        if n == 0:
            raise InvalidTriangle("a triangle needs at least its bottom row")
        for k, r in enumerate(rows, 1):
            if len(r) != k:
                raise InvalidTriangle(f"row {k} has {len(r)} entries")
        bottom = rows[-1]
        if any(e.kind != "n" for e in bottom):
            raise InvalidTriangle("bottom row must hold numerals only")
        vals = [e.i for e in bottom]
        if vals[0] < 1 or any(a >= b for a, b in zip(vals, vals[1:])):
            raise InvalidTriangle(f"bottom row {vals} is not strictly increasing and positive")
        top = vals[-1]
        for k, r in enumerate(rows[:-1], 1):
            for p, e in enumerate(r, 1):
                if e.kind == "n" or e.kind not in "xyab":
                    raise InvalidTriangle(f"entry {e!r} at row {k} position {p} not allowed above the bottom row")
                if not (1 <= e.i <= top and 1 <= e.j <= top):
                    raise InvalidTriangle(f"entry {e!r} at row {k} position {p} has a subscript outside 1..{top}")
                if e.is_v and not e.i < e.j:
                    raise InvalidTriangle(f"entry {e!r} at row {k} position {p} needs i < j")
        object.__setattr__(self, "_kinds", tuple(_row_kind(r) for r in rows[:-1]))

    @property
    def n(self) -> int:
        return len(self.rows)

    @property
    def bottom(self) -> tuple[int, ...]:
        return tuple(e.i for e in self.rows[-1])

    @property
    def bound(self) -> int:
        """Largest admissible subscript, i.e. the top of the bottom row."""
        return self.rows[-1][-1].i

    @property
    def is_standard(self) -> bool:
        return self.bottom == tuple(range(1, self.n + 1))

    def row(self, r: int) -> tuple[Entry, ...]:
        """Row ``r`` (1-based); row 0 is the empty notional row."""
        return () if r == 0 else self.rows[r - 1]

    def row_kind(self, r: int) -> tuple[str, int]:
        """('x', 0), ('v', diff) or ('mixed', 0) for rows 0..n-1.

        Row 0 reports ('0', 0) and counts as both kinds.
        """
        return ("0", 0) if r == 0 else self._kinds[r - 1]

    def is_x_row(self, r: int) -> bool:
        return self.row_kind(r)[0] in ("x", "0")

    def is_v_row(self, r: int) -> bool:
        return self.row_kind(r)[0] in ("v", "0")

    @property
    def is_pure_x(self) -> bool:
        return all(k == "x" for k, _ in self._kinds)

    @property
    def is_pure_v(self) -> bool:
        return all(k == "v" for k, _ in self._kinds)

    def replace_rows(self, changes: dict[int, Sequence[Entry]]) -> "Triangle":
        rows = list(self.rows)
        for r, new in changes.items():
            if r > 0:
                rows[r - 1] = tuple(new)
        return Triangle(tuple(rows))

    def tokens(self) -> list[list[str]]:
        return [[e.token for e in r] for r in self.rows]

    def to_json(self) -> dict:
        return {"n": self.n, "rows": self.tokens()}

    @classmethod
    def from_json(cls, obj: dict) -> "Triangle":
        try:
            rows = obj["rows"]
        except (KeyError, TypeError) as exc:
            raise InputError("triangle JSON needs a 'rows' field") from exc
        t = cls.from_tokens(rows)
        if "n" in obj and obj["n"] != t.n:
            raise InvalidTriangle(f"declared n={obj['n']} but {t.n} rows given")
        return t

    @classmethod
    def from_tokens(cls, rows: Iterable[Iterable[str]]) -> "Triangle":
        return cls(tuple(tuple(parse_token(tok) for tok in r) for r in rows))

    @classmethod
    def from_rows(cls, rows: Iterable[Iterable[Entry]], bottom: Iterable[int]) -> "Triangle":
        """Build from the rows above the bottom plus the bottom values."""
        return cls(tuple(tuple(r) for r in rows) + (tuple(Num(v) for v in bottom),))

    def __str__(self) -> str:
        return format_triangle(self)


def _row_kind(r: Sequence[Entry]) -> tuple[str, int]:
    if all(e.is_x for e in r):
        return ("x", 0)
    if all(e.is_v for e in r):
        diffs = {e.j - e.i for e in r}
        if len(diffs) == 1:
            return ("v", diffs.pop())
    return ("mixed", 0)


def compute_ranking(t: Triangle) -> tuple[int, ...]:
    """The unique admissible ranking, as ``ranks[r]`` for rows r = 0..n."""
    n = t.n
    ranks = [0] * (n + 1)
    ranks[n - 1] = 1
    for r in range(n - 1, 0, -1):
        kind, diff = t.row_kind(r)
        if kind == "x":
            ranks[r - 1] = ranks[r]
        elif kind == "v":
            if diff != ranks[r]:
                raise RankMismatch(r, f"row {r} has difference {diff} but rank {ranks[r]}")
            ranks[r - 1] = ranks[r] + 1
        else:
            raise MixedRow(r, f"row {r} is neither an X-row nor a V-row")
    return tuple(ranks)


class ValuedEntry(NamedTuple):
    entry: Entry
    l: int
    r: int


def value_of(e: Entry, rank: int) -> tuple[int, int]:
    """(left, right) value of ``e`` in a row of the given rank."""
    kind = e.kind
    if kind == "x":
        return e.i, e.i + rank
    if kind == "y":
        return e.j - rank, e.j
    return e.i, e.j


def entry_values(t: Triangle, ranks: Sequence[int] | None = None) -> tuple[tuple[ValuedEntry, ...], ...]:
    if ranks is None:
        ranks = compute_ranking(t)
    return tuple(
        tuple(ValuedEntry(e, *value_of(e, ranks[k])) for e in row)
        for k, row in enumerate(t.rows, 1)
    )


class Violation(NamedTuple):
    rule: str  # 'ranking', 'diagonal' or 'row'
    row: int  # lower row of the arrangement (or the offending row for 'ranking')
    pos: int  # 1-based position of the lower-left entry
    detail: str


@dataclass(frozen=True)
class AdmissibilityReport:
    ranks: tuple[int, ...] | None
    violations: tuple[Violation, ...]

    @property
    def ok(self) -> bool:
        return not self.violations

    def __bool__(self) -> bool:
        return self.ok


def check_admissible(t: Triangle) -> AdmissibilityReport:
    try:
        ranks = compute_ranking(t)
    except (MixedRow, RankMismatch) as exc:
        return AdmissibilityReport(None, (Violation("ranking", exc.row, 0, str(exc)),))
    vals = entry_values(t, ranks)
    bad = []
    for r in range(2, t.n + 1):
        upper, lower = vals[r - 2], vals[r - 1]
        for p, v in enumerate(upper):
            u, w = lower[p], lower[p + 1]
            if not u.l <= v.l:
                bad.append(Violation("diagonal", r, p + 1, f"l(u)={u.l} > l(v)={v.l}"))
            elif u.entry.kind == "y" and not u.l < v.l:
                bad.append(Violation("diagonal", r, p + 1, f"u={u.entry!r} needs l(u)={u.l} < l(v)={v.l}"))
            if not v.r <= w.r:
                bad.append(Violation("diagonal", r, p + 1, f"r(v)={v.r} > r(w)={w.r}"))
            elif w.entry.kind == "x" and not v.r < w.r:
                bad.append(Violation("diagonal", r, p + 1, f"w={w.entry!r} needs r(v)={v.r} < r(w)={w.r}"))
            if not u.l < w.l:
                bad.append(Violation("row", r, p + 1, f"l-values {u.l},{w.l} not increasing"))
    return AdmissibilityReport(ranks, tuple(bad))


def is_admissible(t: Triangle) -> bool:
    return check_admissible(t).ok


def triangle_weight(t: Triangle) -> Monomial:
    """Product of entry weights above the bottom row (a -> x_i, b -> y_j)."""
    m = t.bound
    x, y = [0] * m, [0] * m
    for row in t.rows[:-1]:
        for e in row:
            if e.kind in "xa":
                x[e.i - 1] += 1
            else:
                y[e.j - 1] += 1
    return Monomial(tuple(x), tuple(y))


@dataclass(frozen=True)
class OcmtView:
    """An oriented monotone triangle split into its numbers and orientations."""

    cmt: Cmt
    orientation: tuple[tuple[str, ...], ...]  # 'x' or 'y' for each entry of rows 1..n-1

    def triangle(self) -> Triangle:
        return orient(self.cmt, self.orientation)


def as_oriented_cmt(t: Triangle) -> OcmtView:
    if not t.is_pure_x:
        raise NotPureX("rows above the bottom must hold only x/y entries")
    report = check_admissible(t)
    if not report.ok:
        raise NotAdmissible(f"not admissible: {report.violations[0].detail}", report)
    rows = tuple(tuple(e.i for e in r) for r in t.rows)
    return OcmtView(validate_cmt(rows, complete=False), tuple(tuple(e.kind for e in r) for r in t.rows[:-1]))


def orient(c: Cmt, orientation: Sequence[Sequence[str]]) -> Triangle:
    rows = [tuple(Entry(o, v, v) for o, v in zip(orow, crow)) for orow, crow in zip(orientation, c.rows)]
    return Triangle.from_rows(rows, c.bottom)


def orientations_of(c: Cmt) -> list[Triangle]:
    """All oriented versions of ``c``; free entries vary with x before y."""
    choices = []
    for k in range(c.n - 1):
        below = c.rows[k + 1]
        row = []
        for p, j in enumerate(c.rows[k]):
            kind = entry_type(below[p], j, below[p + 1])
            row.append(("x",) if kind == "SE" else ("y",) if kind == "SW" else ("x", "y"))
        choices.append(row)
    flat = [opts for row in choices for opts in row]
    out = []
    for pick in itertools.product(*flat):
        it = iter(pick)
        orientation = [tuple(next(it) for _ in row) for row in choices]
        out.append(orient(c, orientation))
    return out


def format_triangle(t: Triangle, ranks: Sequence[int] | None = None, width: int | None = None) -> str:
    """Staggered text layout, one line per row; ranks appended as ``[k]``.

    With ranks, the empty row 0 is printed too.
    """
    n = t.n
    cells = [_subscript(e) for r in t.rows for e in r]
    w = width or max(len(c) for c in cells)
    lines = []
    start = 0 if ranks is not None else 1
    for r in range(start, n + 1):
        grid = [""] * (2 * n - 1)
        for p, e in enumerate(t.row(r)):
            grid[n - r + 2 * p] = _subscript(e)
        line = " ".join(c.rjust(w) for c in grid)
        if ranks is not None:
            line += f"   [{ranks[r]}]"
        lines.append(line.rstrip() if ranks is None else line)
    return "\n".join(lines)
