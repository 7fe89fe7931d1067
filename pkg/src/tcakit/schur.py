"""The ring of symmetric functions in the Schur basis.

Littlewood-Richardson coefficients are counted directly from LR skew tableaux
and memoized; everything else is bilinear bookkeeping on top of them.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import prod
from typing import Iterable, Mapping, Sequence

from .partitions import Partition, partitions_of, sort_key, transpose


@lru_cache(maxsize=None)
def _lr(lam: Partition, mu: Partition, nu: Partition) -> int:
    # cells of nu/lam in reading order: rows top to bottom, each right to left
    cells = [(r, c) for r in range(len(nu)) for c in range(nu[r] - 1, lam.part(r + 1) - 1, -1)]
    content = list(mu)
    filling: dict[tuple[int, int], int] = {}
    counts = [0] * (len(mu) + 1)

    def fill(k: int) -> int:
        if k == len(cells):
            return 1
        r, c = cells[k]
        hi = len(mu)
        if (r, c + 1) in filling:
            hi = min(hi, filling[(r, c + 1)])
        lo = filling[(r - 1, c)] + 1 if (r - 1, c) in filling else 1
        total = 0
        for v in range(lo, hi + 1):
            if counts[v] >= content[v - 1]:
                continue
            if v > 1 and counts[v] + 1 > counts[v - 1]:
                continue
            counts[v] += 1
            filling[(r, c)] = v
            total += fill(k + 1)
            del filling[(r, c)]
            counts[v] -= 1
        return total

    return fill(0)


def lr_coefficient(lam: Sequence[int], mu: Sequence[int], nu: Sequence[int]) -> int:
    """Littlewood-Richardson coefficient c^nu_{lam, mu}."""
    lam, mu, nu = Partition(lam), Partition(mu), Partition(nu)
    if nu.size != lam.size + mu.size or not nu.contains(lam) or not nu.contains(mu):
        return 0
    if not mu:
        return 1
    if not lam:
        return int(nu == mu)
    # c is symmetric in lam, mu; fewer skew cells is cheaper
    if lam.size < mu.size:
        lam, mu = mu, lam
    return _lr(lam, mu, nu)


@lru_cache(maxsize=None)
def _product(lam: Partition, mu: Partition, max_len: int | None) -> tuple[tuple[Partition, int], ...]:
    n = lam.size + mu.size
    bound = len(lam) + len(mu) if max_len is None else min(max_len, len(lam) + len(mu))
    width = lam.part(1) + mu.part(1)
    out = []
    for nu in partitions_of(n, max_part=width, max_len=bound):
        c = lr_coefficient(lam, mu, nu)
        if c:
            out.append((nu, c))
    return tuple(out)


def lr_product(lam: Sequence[int], mu: Sequence[int], max_len: int | None = None) -> dict[Partition, int]:
    """Expansion of s_lam * s_mu, optionally dropping terms with more than ``max_len`` rows."""
    return dict(_product(Partition(lam), Partition(mu), max_len))


class SchurElement:
    """Integer combination of Schur functions; zero coefficients are never stored."""

    __slots__ = ("_terms",)

    def __init__(self, terms: Mapping[Sequence[int], int] | None = None):
        clean: dict[Partition, int] = {}
        for p, c in (terms or {}).items():
            p = Partition(p)
            clean[p] = clean.get(p, 0) + int(c)
        self._terms = {p: c for p, c in clean.items() if c}

    @classmethod
    def basis(cls, p: Sequence[int] = (), coeff: int = 1) -> "SchurElement":
        return cls({Partition(p): coeff})

    @property
    def terms(self) -> dict[Partition, int]:
        return dict(self._terms)

    def items(self):
        return sorted(self._terms.items(), key=lambda t: sort_key(t[0]))

    def coeff(self, p: Sequence[int]) -> int:
        return self._terms.get(Partition(p), 0)

    def degree(self) -> int:
        return max((p.size for p in self._terms), default=-1)

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __eq__(self, other) -> bool:
        if isinstance(other, int) and other == 0:
            return not self._terms
        return isinstance(other, SchurElement) and self._terms == other._terms

    def __hash__(self) -> int:
        return hash(frozenset(self._terms.items()))

    def __add__(self, other: "SchurElement") -> "SchurElement":
        out = dict(self._terms)
        for p, c in other._terms.items():
            out[p] = out.get(p, 0) + c
        return SchurElement(out)

    def __neg__(self) -> "SchurElement":
        return SchurElement({p: -c for p, c in self._terms.items()})

    def __sub__(self, other: "SchurElement") -> "SchurElement":
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, int):
            return SchurElement({p: c * other for p, c in self._terms.items()})
        if isinstance(other, SchurElement):
            return multiply(self, other)
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, int):
            return self * other
        return NotImplemented

    def __repr__(self) -> str:
        if not self._terms:
            return "0"
        parts = []
        for p, c in self.items():
            label = "s" + ("[" + ",".join(map(str, p)) + "]")
            parts.append(label if c == 1 else f"{c}*{label}")
        return " + ".join(parts)

    def to_json(self) -> list[dict]:
        return [{"partition": list(p), "coeff": c} for p, c in self.items()]

    @classmethod
    def from_json(cls, data: Iterable[Mapping]) -> "SchurElement":
        return cls({tuple(t["partition"]): t["coeff"] for t in data})


def multiply(a: SchurElement, b: SchurElement) -> SchurElement:
    out: dict[Partition, int] = {}
    for lam, x in a._terms.items():
        for mu, y in b._terms.items():
            for nu, c in _product(lam, mu, None):
                out[nu] = out.get(nu, 0) + x * y * c
    return SchurElement(out)


def star(a: SchurElement) -> SchurElement:
    """The involution s_lam -> (-1)^|lam| s_{lam transpose}."""
    return SchurElement({transpose(p): (-1) ** p.size * c for p, c in a._terms.items()})


def hook_content_dimension(p: Sequence[int], n: int) -> int:
    """dim S_p(C^n) by the hook-content formula."""
    p = Partition(p)
    if len(p) > n:
        return 0
    pt = transpose(p)
    num = Fraction(1)
    for i, row in enumerate(p):
        for j in range(row):
            hook = row - j + pt[j] - i - 1
            num *= Fraction(n + j - i, hook)
    return int(num)


def weyl_dimension(weight: Sequence[int]) -> int:
    """Dimension of the irreducible GL_n representation with dominant highest weight."""
    w = list(weight)
    n = len(w)
    if any(w[i] < w[i + 1] for i in range(n - 1)):
        raise ValueError(f"weight {w} is not dominant")
    num = prod(w[i] - w[j] + j - i for i in range(n) for j in range(i + 1, n))
    den = prod(j - i for i in range(n) for j in range(i + 1, n))
    return num // den
