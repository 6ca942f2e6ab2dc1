"""Tournaments on {1..n} and their triangle encoding."""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .errors import InputError, NonStandardBottomRow, NotAdmissible, NotPureV
from .poly import Monomial
from .triangle import A, B, Triangle, check_admissible


def pairs(n: int) -> list[tuple[int, int]]:
    """The pairs (i, j), i < j, in lexicographic order."""
    return list(itertools.combinations(range(1, n + 1), 2))


def pair_index(n: int, i: int, j: int) -> int:
    """Position of (i, j) in :func:`pairs`."""
    return (i - 1) * (2 * n - i) // 2 + (j - i - 1)


@dataclass(frozen=True)
class Tournament:
    """``backward[k]`` is True when the k-th lexicographic pair (i, j) is oriented j -> i."""

    n: int
    backward: tuple[bool, ...]

    def __post_init__(self):
        if self.n < 1:
            raise InputError("tournament order must be positive")
        if len(self.backward) != self.n * (self.n - 1) // 2:
            raise InputError(f"expected {self.n * (self.n - 1) // 2} orientations, got {len(self.backward)}")

    @classmethod
    def from_edges(cls, n: int, edges) -> "Tournament":
        """Build from (source, target) pairs covering every pair exactly once."""
        orient = {}
        for s, t in edges:
            key = (min(s, t), max(s, t))
            if s == t or not 1 <= s <= n or not 1 <= t <= n:
                raise InputError(f"bad edge {s}->{t} for order {n}")
            if key in orient:
                raise InputError(f"pair {key} oriented twice")
            orient[key] = s > t
        missing = [p for p in pairs(n) if p not in orient]
        if missing:
            raise InputError(f"pairs without an orientation: {missing}")
        return cls(n, tuple(orient[p] for p in pairs(n)))

    def edges(self) -> list[tuple[int, int]]:
        return [(j, i) if b else (i, j) for (i, j), b in zip(pairs(self.n), self.backward)]

    def is_backward(self, i: int, j: int) -> bool:
        return self.backward[pair_index(self.n, i, j)]

    def tokens(self) -> list[str]:
        """``"i<j"`` for an edge i -> j, ``"i>j"`` for j -> i, pairs in lexicographic order."""
        return [f"{i}>{j}" if b else f"{i}<{j}" for (i, j), b in zip(pairs(self.n), self.backward)]

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "edges": [
                {"pair": [i, j], "dir": "bwd" if b else "fwd"}
                for (i, j), b in zip(pairs(self.n), self.backward)
            ],
        }

    @classmethod
    def from_json(cls, obj: dict) -> "Tournament":
        try:
            n = int(obj["n"])
            got = [(tuple(e["pair"]), e["dir"]) for e in obj["edges"]]
        except (KeyError, TypeError, ValueError) as exc:
            raise InputError(f"bad tournament JSON: {exc}") from exc
        if [p for p, _ in got] != pairs(n):
            raise InputError("tournament edges must list every pair once, in lexicographic order")
        if any(d not in ("fwd", "bwd") for _, d in got):
            raise InputError("edge dir must be 'fwd' or 'bwd'")
        return cls(n, tuple(d == "bwd" for _, d in got))


def tournament_to_triangle(t: Tournament) -> Triangle:
    n = t.n
    rows = []
    for r in range(1, n):
        diff = n - r
        rows.append(tuple(
            (B if t.is_backward(i, i + diff) else A)(i, i + diff) for i in range(1, r + 1)
        ))
    return Triangle.from_rows(rows, range(1, n + 1))


def triangle_to_tournament(tri: Triangle) -> Tournament:
    if not tri.is_standard:
        raise NonStandardBottomRow(f"bottom row {tri.bottom} is not 1..{tri.n}")
    if not tri.is_pure_v:
        raise NotPureV("rows above the bottom must hold only a/b entries")
    report = check_admissible(tri)
    if not report.ok:
        raise NotAdmissible(f"not admissible: {report.violations[0].detail}", report)
    orient = {(e.i, e.j): e.kind == "b" for row in tri.rows[:-1] for e in row}
    return Tournament(tri.n, tuple(orient[p] for p in pairs(tri.n)))


def upsets(t: Tournament) -> int:
    return sum(t.backward)


def out_degrees(t: Tournament) -> tuple[int, ...]:
    deg = [0] * t.n
    for s, _ in t.edges():
        deg[s - 1] += 1
    return tuple(deg)


def tournament_weight(t: Tournament) -> Monomial:
    """Edge i -> j weighs x_i when i < j and y_i when i > j."""
    x, y = [0] * t.n, [0] * t.n
    for s, d in t.edges():
        (x if s < d else y)[s - 1] += 1
    return Monomial(tuple(x), tuple(y))
