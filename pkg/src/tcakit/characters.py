"""Equivariant characters of modules over A = Sym(E (x) V), with dim E = d.

A character records multiplicities of ``S_alpha(E) (x) S_beta(V)``.  Every module
here is infinite dimensional, so characters are truncated: terms with
``|beta| > cutoff`` are dropped and everything at or below the cutoff is exact.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Mapping, Sequence

from .bott import bwb_pushforward
from .partitions import Partition, partitions_up_to, sort_key
from .schur import hook_content_dimension, lr_coefficient, lr_product

Term = tuple[Partition, Partition]


@dataclass(frozen=True)
class EquivCharacter:
    d: int
    cutoff: int
    terms: Mapping[Term, int] = field(default_factory=dict)
    dual_e: bool = False

    def __post_init__(self):
        clean: dict[Term, int] = {}
        for (a, b), m in dict(self.terms).items():
            a, b = Partition(a), Partition(b)
            if len(a) > self.d:
                raise ValueError(f"E-partition {list(a)} has more than d={self.d} rows")
            if b.size > self.cutoff:
                raise ValueError(f"V-partition {list(b)} exceeds cutoff {self.cutoff}")
            clean[(a, b)] = clean.get((a, b), 0) + m
        object.__setattr__(self, "terms", {k: v for k, v in clean.items() if v})

    def items(self) -> list[tuple[Term, int]]:
        return sorted(self.terms.items(), key=lambda t: (sort_key(t[0][1]), sort_key(t[0][0])))

    def mult(self, alpha: Sequence[int], beta: Sequence[int]) -> int:
        return self.terms.get((Partition(alpha), Partition(beta)), 0)

    def __len__(self) -> int:
        return len(self.terms)

    def _check_compatible(self, other: "EquivCharacter"):
        if (self.d, self.dual_e) != (other.d, other.dual_e):
            raise ValueError("characters live over different E")

    def __add__(self, other: "EquivCharacter") -> "EquivCharacter":
        self._check_compatible(other)
        cutoff = min(self.cutoff, other.cutoff)
        out: dict[Term, int] = {}
        for ch in (self, other):
            for (a, b), m in ch.terms.items():
                if b.size <= cutoff:
                    out[(a, b)] = out.get((a, b), 0) + m
        return EquivCharacter(self.d, cutoff, out, self.dual_e)

    def scale(self, k: int) -> "EquivCharacter":
        return EquivCharacter(self.d, self.cutoff, {t: k * m for t, m in self.terms.items()}, self.dual_e)

    def __neg__(self) -> "EquivCharacter":
        return self.scale(-1)

    def __sub__(self, other: "EquivCharacter") -> "EquivCharacter":
        return self + (-other)

    def truncate(self, cutoff: int) -> "EquivCharacter":
        terms = {(a, b): m for (a, b), m in self.terms.items() if b.size <= cutoff}
        return EquivCharacter(self.d, min(cutoff, self.cutoff), terms, self.dual_e)

    def tensor(self, other: "EquivCharacter") -> "EquivCharacter":
        """Tensor product, decomposed with LR coefficients on both sides separately."""
        self._check_compatible(other)
        cutoff = min(self.cutoff, other.cutoff)
        out: dict[Term, int] = {}
        for (a1, b1), m1 in self.terms.items():
            for (a2, b2), m2 in other.terms.items():
                if b1.size + b2.size > cutoff:
                    continue
                for a, ca in lr_product(a1, a2, max_len=self.d).items():
                    for b, cb in lr_product(b1, b2).items():
                        out[(a, b)] = out.get((a, b), 0) + m1 * m2 * ca * cb
        return EquivCharacter(self.d, cutoff, out, self.dual_e)

    def swap_sides(self, d: int, cutoff: int) -> "EquivCharacter":
        """Exchange the roles of E and V, keeping E-partitions with at most ``d`` rows
        and V-partitions of size at most ``cutoff``."""
        out = {
            (b, a): m
            for (a, b), m in self.terms.items()
            if len(b) <= d and a.size <= cutoff
        }
        return EquivCharacter(d, cutoff, out)

    def to_json(self) -> list[dict]:
        return [
            {"E": list(a), "V": list(b), "mult": m, "dualE": self.dual_e}
            for (a, b), m in self.items()
        ]


def cauchy_A(d: int, cutoff: int) -> EquivCharacter:
    """A = sum over lam with at most d rows of S_lam(E) (x) S_lam(V)."""
    return EquivCharacter(d, cutoff, {(lam, lam): 1 for lam in partitions_up_to(cutoff, max_len=d)})


def k_module_character(r: int, lam: Sequence[int], d: int, cutoff: int) -> EquivCharacter:
    """Character of K_{r,lam}: the quotient of S_lam(E) (x) A by E-constituents with more than r rows."""
    lam = Partition(lam)
    if r > d:
        raise ValueError(f"r={r} exceeds d={d}")
    if len(lam) > r:
        raise ValueError(f"{list(lam)} has more than r={r} rows")
    out: dict[Term, int] = {}
    for nu in partitions_up_to(cutoff, max_len=r):
        for eps, c in lr_product(lam, nu, max_len=r).items():
            out[(eps, nu)] = out.get((eps, nu), 0) + c
    return EquivCharacter(d, cutoff, out)


def k_module_character_bwb(r: int, lam: Sequence[int], d: int, cutoff: int) -> EquivCharacter:
    """Same module computed as global sections of S_lam(Q) (x) Sym(Q (x) V) on Gr_r(C^d)."""
    lam = Partition(lam)
    if r > d or len(lam) > r:
        raise ValueError("need len(lam) <= r <= d")
    out: dict[Term, int] = {}
    for nu in partitions_up_to(cutoff, max_len=r):
        for eps, c in lr_product(lam, nu, max_len=r).items():
            res = bwb_pushforward(eps.padded(r), (0,) * (d - r), d)
            if res.vanishes or res.steps != 0:
                continue
            gamma = Partition(res.gamma)
            out[(gamma, nu)] = out.get((gamma, nu), 0) + c
    return EquivCharacter(d, cutoff, out)


def torsion_injective_character(lam: Sequence[int], d: int, cutoff: int) -> EquivCharacter:
    """Branching of S_lam(E* + V); the E-slot is an E*-partition."""
    lam = Partition(lam)
    out: dict[Term, int] = {}
    for beta in partitions_up_to(min(cutoff, lam.size)):
        if not lam.contains(beta):
            continue
        for alpha in partitions_up_to(lam.size - beta.size, max_len=d):
            if alpha.size != lam.size - beta.size:
                continue
            c = lr_coefficient(alpha, beta, lam)
            if c:
                out[(alpha, beta)] = c
    return EquivCharacter(d, cutoff, out, dual_e=True)


def truncated_module_character(lam: Sequence[int], n: int, dim_e: int, cutoff: int) -> EquivCharacter:
    """Character of (S_lam(V) (x) A)^{<= n}, the quotient by V-constituents with more than n rows.

    Obtained from :func:`k_module_character` by exchanging E and V.
    """
    lam = Partition(lam)
    big = max(n, dim_e)
    kc = k_module_character(n, lam, big, cutoff)
    return kc.swap_sides(dim_e, cutoff)


def dimension_series(ch: EquivCharacter, N: int) -> list[int]:
    """Hilbert function of the evaluation at C^N, graded by V-degree, up to the cutoff."""
    out = [0] * (ch.cutoff + 1)
    for (a, b), m in ch.terms.items():
        out[b.size] += m * hook_content_dimension(a, ch.d) * hook_content_dimension(b, N)
    return out
