"""Alternating sign matrices, monotone triangles and square ice.

Indices are 1-based wherever they leave this module (triangle entries,
column numbers in :class:`VertexStats`).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .errors import (
    EntryOutOfRange,
    InputError,
    InvalidCmt,
    InvariantBreach,
    NotSquare,
    RowColumnConstraintViolated,
)

VERTEX_TYPES = ("H", "V", "NW", "NE", "SW", "SE")


@dataclass(frozen=True)
class Asm:
    rows: tuple[tuple[int, ...], ...]

    @property
    def n(self) -> int:
        return len(self.rows)

    @property
    def array(self) -> np.ndarray:
        return np.array(self.rows, dtype=np.int64).reshape(self.n, self.n)

    def count(self, value: int) -> int:
        return sum(r.count(value) for r in self.rows)

    def to_json(self) -> dict:
        return {"n": self.n, "rows": [list(r) for r in self.rows]}

    @classmethod
    def from_json(cls, obj: dict) -> "Asm":
        try:
            rows = obj["rows"]
        except (KeyError, TypeError) as exc:
            raise InputError("ASM JSON needs a 'rows' field") from exc
        a = validate_asm(rows)
        if "n" in obj and obj["n"] != a.n:
            raise InputError(f"declared n={obj['n']} but matrix has order {a.n}")
        return a


def _alternates(seq) -> bool:
    s = 0
    for v in seq:
        s += v
        if s not in (0, 1):
            return False
    return s == 1


def validate_asm(entries: Sequence[Sequence[int]]) -> Asm:
    """Validate a square {-1,0,1} matrix with the partial-sum criterion."""
    rows = [list(r) for r in entries]
    n = len(rows)
    if n == 0 or any(len(r) != n for r in rows):
        raise NotSquare(f"expected a non-empty square matrix, got row lengths {[len(r) for r in rows]}")
    for i, r in enumerate(rows, 1):
        for j, v in enumerate(r, 1):
            if isinstance(v, bool) or not isinstance(v, (int, np.integer)) or v not in (-1, 0, 1):
                raise EntryOutOfRange(f"entry ({i},{j}) = {v!r} is not in {{-1,0,1}}")
    for i, r in enumerate(rows, 1):
        if not _alternates(r):
            raise RowColumnConstraintViolated("row", i, f"row {i} violates the partial-sum condition")
    for j in range(n):
        if not _alternates(r[j] for r in rows):
            raise RowColumnConstraintViolated(
                "column", j + 1, f"column {j + 1} violates the partial-sum condition"
            )
    return Asm(tuple(tuple(int(v) for v in r) for r in rows))


def column_sums(a: Asm) -> np.ndarray:
    return np.cumsum(a.array, axis=0)


@dataclass(frozen=True)
class Cmt:
    """Monotone triangle; ``rows[k-1]`` is row k (k entries).

    Complete when the bottom row is 1..n.  Non-standard bottom rows are
    allowed so the same type serves the generalized families.
    """

    rows: tuple[tuple[int, ...], ...]

    @property
    def n(self) -> int:
        return len(self.rows)

    @property
    def bottom(self) -> tuple[int, ...]:
        return self.rows[-1]

    @property
    def is_complete(self) -> bool:
        return self.bottom == tuple(range(1, self.n + 1))

    def to_json(self) -> dict:
        return {"n": self.n, "rows": [list(r) for r in self.rows]}

    @classmethod
    def from_json(cls, obj: dict, complete: bool = True) -> "Cmt":
        try:
            rows = obj["rows"]
        except (KeyError, TypeError) as exc:
            raise InputError("CMT JSON needs a 'rows' field") from exc
        return validate_cmt(rows, complete=complete)


def validate_cmt(rows: Sequence[Sequence[int]], complete: bool = True) -> Cmt:
    rows = tuple(tuple(int(v) for v in r) for r in rows)
    n = len(rows)
    if n == 0:
        raise InvalidCmt("empty triangle")
    for k, r in enumerate(rows, 1):
        if len(r) != k:
            raise InvalidCmt(f"row {k} has {len(r)} entries")
        if any(a >= b for a, b in zip(r, r[1:])):
            raise InvalidCmt(f"row {k} is not strictly increasing")
    if rows[-1][0] < 1:
        raise InvalidCmt("bottom row must be positive")
    if complete and rows[-1] != tuple(range(1, n + 1)):
        raise InvalidCmt(f"bottom row {rows[-1]} is not 1..{n}")
    for k in range(n - 1):
        above, below = rows[k], rows[k + 1]
        for p, v in enumerate(above):
            if not below[p] <= v <= below[p + 1]:
                raise InvalidCmt(f"row {k + 1} entry {p + 1} = {v} not between {below[p]} and {below[p + 1]}")
    return Cmt(rows)


def asm_to_cmt(a: Asm) -> Cmt:
    cs = column_sums(a)
    return Cmt(tuple(tuple(int(j) + 1 for j in np.flatnonzero(cs[k])) for k in range(a.n)))


def cmt_to_asm(t: Cmt) -> Asm:
    t = validate_cmt(t.rows, complete=True)
    n = t.n
    ind = np.zeros((n + 1, n), dtype=np.int64)
    for k, row in enumerate(t.rows, 1):
        ind[k, [v - 1 for v in row]] = 1
    return validate_asm(np.diff(ind, axis=0).tolist())


def entry_type(i: int, j: int, k: int) -> str:
    """Classify entry ``j`` sitting above neighbours ``i`` and ``k``.

    Returns 'SE' for type (i) i = j < k, 'SW' for type (ii) i < j = k and
    'V' for type (iii) i < j < k.
    """
    if i == j < k:
        return "SE"
    if i < j == k:
        return "SW"
    if i < j < k:
        return "V"
    raise InvalidCmt(f"entry {j} is not between {i} and {k}")


@dataclass(frozen=True)
class IceGrid:
    types: tuple[tuple[str, ...], ...]

    @property
    def n(self) -> int:
        return len(self.types)

    def count(self, kind: str) -> int:
        return sum(r.count(kind) for r in self.types)

    def column_counts(self, kind: str) -> tuple[int, ...]:
        return tuple(sum(1 for r in self.types if r[j] == kind) for j in range(self.n))

    def to_json(self) -> dict:
        return {"n": self.n, "types": [list(r) for r in self.types]}

    @classmethod
    def from_json(cls, obj: dict) -> "IceGrid":
        types = tuple(tuple(r) for r in obj["types"])
        if any(len(r) != len(types) or any(v not in VERTEX_TYPES for v in r) for r in types):
            raise InputError("malformed ice grid")
        return cls(types)


_PAIR_NAMES = {
    frozenset("EW"): "H",
    frozenset("NS"): "V",
    frozenset("NW"): "NW",
    frozenset("NE"): "NE",
    frozenset("SW"): "SW",
    frozenset("SE"): "SE",
}


def build_ice_grid(a: Asm) -> IceGrid:
    """Orient the square-ice graph of ``a`` and name each vertex.

    A vertex is named by the compass directions its two in-edges point in,
    e.g. an arrow coming down from above points south.
    """
    arr = a.array
    n = a.n
    col = np.cumsum(arr, axis=0)  # col[i, j] == 1: edge below (i, j) points down
    row = np.cumsum(arr, axis=1)  # row[i, j] == 1: edge right of (i, j) points left
    types = []
    for i in range(n):
        out = []
        for j in range(n):
            ins = set()
            if i > 0 and col[i - 1, j] == 1:
                ins.add("S")
            if col[i, j] == 0:
                ins.add("N")
            if j == 0 or row[i, j - 1] == 0:
                ins.add("E")
            if row[i, j] == 1:
                ins.add("W")
            name = _PAIR_NAMES.get(frozenset(ins))
            if name is None:
                raise InvariantBreach(f"vertex ({i + 1},{j + 1}) has in-edges {sorted(ins)}")
            out.append(name)
        types.append(tuple(out))
    return IceGrid(tuple(types))


@dataclass(frozen=True)
class VertexStats:
    se: tuple[int, ...]
    sw: tuple[int, ...]
    v: tuple[int, ...]

    @property
    def n(self) -> int:
        return len(self.se)

    @property
    def SE(self) -> int:
        return sum(self.se)

    @property
    def SW(self) -> int:
        return sum(self.sw)

    @property
    def V(self) -> int:
        return sum(self.v)


def cmt_vertex_stats(t: Cmt) -> VertexStats:
    counts = {"SE": [0] * t.n, "SW": [0] * t.n, "V": [0] * t.n}
    for k in range(t.n - 1):
        below = t.rows[k + 1]
        for p, j in enumerate(t.rows[k]):
            counts[entry_type(below[p], j, below[p + 1])][j - 1] += 1
    return VertexStats(tuple(counts["SE"]), tuple(counts["SW"]), tuple(counts["V"]))


def ice_vertex_stats(g: IceGrid) -> VertexStats:
    return VertexStats(g.column_counts("SE"), g.column_counts("SW"), g.column_counts("V"))


def vertex_stats(a: Asm, cross_check: bool = True) -> VertexStats:
    """Per-column SE/SW/V counts, from the monotone-triangle entry types.

    With ``cross_check`` the square-ice grid is built too and must agree.
    """
    stats = cmt_vertex_stats(asm_to_cmt(a))
    if cross_check and stats != ice_vertex_stats(build_ice_grid(a)):
        raise InvariantBreach(f"ice grid and triangle disagree on vertex counts for {a.rows}")
    return stats
