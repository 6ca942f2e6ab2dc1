"""Sparse exact polynomials in x_1..x_n, y_1..y_n and lambda.

A :class:`Polynomial` is a mapping from :class:`Monomial` keys to Python
ints, so coefficients never overflow.  Zero coefficients are never stored,
which makes ``==`` a term-for-term comparison.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, Mapping

from .errors import InputError, OrderMismatch, OrderTooLarge

MAX_ORDER = 8


@dataclass(frozen=True)
class Monomial:
    x: tuple[int, ...]
    y: tuple[int, ...]
    lam: int = 0

    def __post_init__(self):
        if len(self.x) != len(self.y):
            raise OrderMismatch(f"x has {len(self.x)} exponents, y has {len(self.y)}")
        if min(self.x + self.y + (self.lam,), default=0) < 0:
            raise InputError("negative exponent")

    @property
    def n(self) -> int:
        return len(self.x)

    @classmethod
    def one(cls, n: int) -> "Monomial":
        return cls((0,) * n, (0,) * n, 0)

    @classmethod
    def var(cls, n: int, name: str, i: int = 0) -> "Monomial":
        """Single indeterminate: ``var(n, 'x', 3)`` is x_3, ``var(n, 'lam')`` is lambda."""
        x, y = [0] * n, [0] * n
        if name == "lam":
            return cls(tuple(x), tuple(y), 1)
        if not 1 <= i <= n:
            raise InputError(f"index {i} outside 1..{n}")
        (x if name == "x" else y)[i - 1] = 1
        return cls(tuple(x), tuple(y), 0)

    @property
    def degree(self) -> int:
        return sum(self.x) + sum(self.y) + self.lam

    def __mul__(self, other: "Monomial") -> "Monomial":
        if self.n != other.n:
            raise OrderMismatch(f"orders {self.n} and {other.n}")
        return Monomial(
            tuple(a + b for a, b in zip(self.x, other.x)),
            tuple(a + b for a, b in zip(self.y, other.y)),
            self.lam + other.lam,
        )

    def sort_key(self):
        return (self.degree, self.x, self.y, self.lam)

    def __str__(self) -> str:
        parts = []
        for name, exps in (("x", self.x), ("y", self.y)):
            for i, e in enumerate(exps, 1):
                if e:
                    parts.append(f"{name}{i}" + (f"^{e}" if e > 1 else ""))
        if self.lam:
            parts.append("lam" + (f"^{self.lam}" if self.lam > 1 else ""))
        return "*".join(parts) or "1"


class Polynomial:
    """Immutable sparse polynomial with integer coefficients."""

    __slots__ = ("n", "_terms")

    def __init__(self, n: int, terms: Mapping[Monomial, int] | Iterable[tuple[Monomial, int]] = ()):
        self.n = n
        acc: dict[Monomial, int] = {}
        items = terms.items() if isinstance(terms, Mapping) else terms
        for m, c in items:
            if m.n != n:
                raise OrderMismatch(f"monomial of order {m.n} in polynomial of order {n}")
            acc[m] = acc.get(m, 0) + int(c)
        self._terms = {m: c for m, c in acc.items() if c}

    @classmethod
    def zero(cls, n: int) -> "Polynomial":
        return cls(n)

    @classmethod
    def one(cls, n: int) -> "Polynomial":
        return cls(n, {Monomial.one(n): 1})

    @classmethod
    def monomial(cls, m: Monomial, coef: int = 1) -> "Polynomial":
        return cls(m.n, {m: coef})

    @classmethod
    def var(cls, n: int, name: str, i: int = 0) -> "Polynomial":
        return cls.monomial(Monomial.var(n, name, i))

    def terms(self) -> list[tuple[Monomial, int]]:
        """Terms in canonical order: graded, then lexicographic on (x, y, lam), descending."""
        return sorted(self._terms.items(), key=lambda mc: mc[0].sort_key(), reverse=True)

    def __iter__(self) -> Iterator[tuple[Monomial, int]]:
        return iter(self.terms())

    def __len__(self) -> int:
        return len(self._terms)

    def coefficient(self, m: Monomial) -> int:
        return self._terms.get(m, 0)

    def _check(self, other: "Polynomial"):
        if not isinstance(other, Polynomial):
            return NotImplemented
        if other.n != self.n:
            raise OrderMismatch(f"orders {self.n} and {other.n}")
        return None

    def __add__(self, other: "Polynomial") -> "Polynomial":
        if self._check(other) is NotImplemented:
            return NotImplemented
        acc = dict(self._terms)
        for m, c in other._terms.items():
            acc[m] = acc.get(m, 0) + c
        return Polynomial(self.n, acc)

    def __neg__(self) -> "Polynomial":
        return Polynomial(self.n, {m: -c for m, c in self._terms.items()})

    def __sub__(self, other: "Polynomial") -> "Polynomial":
        return self + (-other)

    def __mul__(self, other: "Polynomial") -> "Polynomial":
        if self._check(other) is NotImplemented:
            return NotImplemented
        acc: dict[Monomial, int] = {}
        for m1, c1 in self._terms.items():
            for m2, c2 in other._terms.items():
                m = m1 * m2
                acc[m] = acc.get(m, 0) + c1 * c2
        return Polynomial(self.n, acc)

    def __pow__(self, k: int) -> "Polynomial":
        if k < 0:
            raise InputError("negative power")
        out = Polynomial.one(self.n)
        for _ in range(k):
            out = out * self
        return out

    def __eq__(self, other) -> bool:
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self.n == other.n and self._terms == other._terms

    def __hash__(self):
        return hash((self.n, frozenset(self._terms.items())))

    def __repr__(self) -> str:
        return f"Polynomial(n={self.n}, {self})"

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        out = []
        for m, c in self.terms():
            ms = str(m)
            if ms == "1":
                out.append(str(c))
            elif c == 1:
                out.append(ms)
            elif c == -1:
                out.append("-" + ms)
            else:
                out.append(f"{c}*{ms}")
        return " + ".join(out).replace("+ -", "- ")

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "terms": [
                {"x": list(m.x), "y": list(m.y), "lam": m.lam, "coef": str(c)}
                for m, c in self.terms()
            ],
        }

    @classmethod
    def from_json(cls, obj: dict) -> "Polynomial":
        try:
            n = int(obj["n"])
            terms = [
                (Monomial(tuple(t["x"]), tuple(t["y"]), int(t.get("lam", 0))), int(t["coef"]))
                for t in obj["terms"]
            ]
        except (KeyError, TypeError, ValueError) as exc:
            raise InputError(f"bad polynomial JSON: {exc}") from exc
        return cls(n, terms)


def poly_add(p: Polynomial, q: Polynomial) -> Polynomial:
    return p + q


def poly_mul(p: Polynomial, q: Polynomial) -> Polynomial:
    return p * q


def substitute_lambda(p: Polynomial) -> Polynomial:
    """Apply y_i -> lambda * x_i to every term."""
    out = []
    for m, c in p._terms.items():
        if m.lam:
            raise InputError("substitute_lambda expects a lambda-free polynomial")
        x = tuple(a + b for a, b in zip(m.x, m.y))
        out.append((Monomial(x, (0,) * m.n, sum(m.y)), c))
    return Polynomial(p.n, out)


def check_order(n: int) -> None:
    if n < 1:
        raise InputError(f"order must be positive, got {n}")
    if n > MAX_ORDER:
        raise OrderTooLarge(f"order {n} exceeds the supported maximum {MAX_ORDER}")
