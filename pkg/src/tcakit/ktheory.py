"""Grothendieck groups of Grassmannians and of A-modules, and the Fourier involution.

``K(Gr_r(C^d))`` is free on the classes ``[S_lam(Q)]`` for ``lam`` in the
``r x (d - r)`` box.  Coordinates are read off with the pairing
``v_beta(M) = chi(S_{beta^T}(R) (x) M)``, evaluated through Borel-Weil-Bott.

``K(A)`` is the free Lambda-module on the classes ``[K_{r,lam}]``; a
:class:`KClass` stores one Lambda-coefficient per ``(r, lam)``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from math import comb
from typing import Mapping, Sequence

import sympy

from .bott import bwb_pushforward, dual_weight
from .partitions import Partition, rectangle_partitions, sort_key, transpose
from .schur import SchurElement, lr_product, star, weyl_dimension


def rectangle_basis(d: int, r: int) -> list[Partition]:
    if not 0 <= r <= d:
        raise ValueError(f"need 0 <= r <= d, got r={r}, d={d}")
    return rectangle_partitions(r, d - r)


def euler_characteristic(q_weight: Sequence[int], r_weight: Sequence[int], d: int) -> int:
    """chi(Gr_r(C^d), S_q(Q) (x) S_r(R)) as an integer."""
    res = bwb_pushforward(q_weight, r_weight, d)
    if res.vanishes:
        return 0
    return (-1) ** res.steps * weyl_dimension(res.gamma)


def pairing_matrix(d: int, r: int) -> list[list[int]]:
    """Entry (beta, alpha) is chi(S_alpha(Q*) (x) S_{beta^T}(R))."""
    basis = rectangle_basis(d, r)
    return [
        [euler_characteristic(dual_weight(alpha, r), transpose(beta).padded(d - r), d) for alpha in basis]
        for beta in basis
    ]


@dataclass(frozen=True)
class GrKClass:
    """Class in K(Gr_r(C^d)) written in the basis [S_lam(Q)], lam in the r x (d-r) box."""

    d: int
    r: int
    coeffs: tuple[int, ...]

    def __post_init__(self):
        n = comb(self.d, self.r)
        if len(self.coeffs) != n:
            raise ValueError(f"expected {n} coefficients, got {len(self.coeffs)}")
        object.__setattr__(self, "coeffs", tuple(int(c) for c in self.coeffs))

    @property
    def basis(self) -> list[Partition]:
        return rectangle_basis(self.d, self.r)

    @classmethod
    def basis_vector(cls, d: int, r: int, lam: Sequence[int]) -> "GrKClass":
        basis = rectangle_basis(d, r)
        lam = Partition(lam)
        if lam not in basis:
            raise ValueError(f"{list(lam)} is outside the {r} x {d - r} box")
        return cls(d, r, tuple(int(p == lam) for p in basis))

    def __add__(self, other: "GrKClass") -> "GrKClass":
        if (self.d, self.r) != (other.d, other.r):
            raise ValueError("classes on different Grassmannians")
        return GrKClass(self.d, self.r, tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    def scale(self, k: int) -> "GrKClass":
        return GrKClass(self.d, self.r, tuple(k * c for c in self.coeffs))

    def as_dict(self) -> dict[Partition, int]:
        return {p: c for p, c in zip(self.basis, self.coeffs) if c}


def _coordinates_from_pairings(d: int, r: int, pairings: Sequence[int]) -> tuple[int, ...]:
    """Solve for coordinates in the [S_kappa(Q)] basis given the values of every v_beta."""
    gram = _gram(d, r)
    sol = gram.LUsolve(sympy.Matrix(pairings))
    out = []
    for x in sol:
        if not x.is_integer:
            raise ArithmeticError(f"non-integral coordinate {x}")
        out.append(int(x))
    return tuple(out)


@lru_cache(maxsize=None)
def _gram(d: int, r: int) -> sympy.Matrix:
    basis = rectangle_basis(d, r)
    return sympy.Matrix(
        [
            [euler_characteristic(kappa.padded(r), transpose(beta).padded(d - r), d) for kappa in basis]
            for beta in basis
        ]
    )


def _chi_with_r_factor(q_weight: tuple[int, ...], r_weight: tuple[int, ...], extra: Partition, d: int) -> int:
    """chi(S_q(Q) (x) S_w(R) (x) S_extra(R)), expanding the R-part with LR coefficients."""
    rank_r = len(r_weight)
    shift = min(r_weight, default=0)
    base = Partition(x - shift for x in r_weight)
    total = 0
    for zeta, c in lr_product(base, extra, max_len=rank_r).items():
        total += c * euler_characteristic(q_weight, tuple(z + shift for z in zeta.padded(rank_r)), d)
    return total


@lru_cache(maxsize=None)
def _serre_dual_matrix(d: int, r: int) -> tuple[tuple[int, ...], ...]:
    """Column for each source basis element: its dual class on Gr_{d-r}, as coordinates."""
    rp = d - r
    target = rectangle_basis(d, rp)
    sign = (-1) ** (r * rp)
    columns = []
    for lam in rectangle_basis(d, r):
        # S_lam(Q) = S_lam(R'*); its dual twisted by the canonical bundle
        # det(R')^{r'} (x) det(Q')^{-r} is S_{lam + r'}(R') (x) det(Q')^{-r}.
        r_weight = tuple(x + rp for x in lam.padded(r))
        q_weight = (-r,) * rp
        pairings = [
            sign * _chi_with_r_factor(q_weight, r_weight, transpose(beta), d) for beta in target
        ]
        columns.append(_coordinates_from_pairings(d, rp, pairings))
    return tuple(columns)


def serre_dual_gr(c: GrKClass) -> GrKClass:
    """[M] on Gr_r(E) to [D(M')] on Gr_{d-r}(E*), with D the Grothendieck-Serre dual.

    Under Gr_r(E) = Gr_{d-r}(E*) the bundles match as Q' = R*, R' = Q*.
    """
    cols = _serre_dual_matrix(c.d, c.r)
    n = comb(c.d, c.d - c.r)
    out = [0] * n
    for a, col in zip(c.coeffs, cols):
        if a:
            for k in range(n):
                out[k] += a * col[k]
    return GrKClass(c.d, c.d - c.r, tuple(out))


@dataclass(frozen=True)
class KClass:
    """Element of sum_r Lambda (x) K(Gr_r(C^d)); ``blocks[r][lam]`` multiplies [K_{r,lam}]."""

    d: int
    blocks: Mapping[int, Mapping[Partition, SchurElement]] = field(default_factory=dict)

    def __post_init__(self):
        clean: dict[int, dict[Partition, SchurElement]] = {}
        for r, block in dict(self.blocks).items():
            if not 0 <= r <= self.d:
                raise ValueError(f"block index {r} outside 0..{self.d}")
            box = set(rectangle_basis(self.d, r))
            for lam, coeff in block.items():
                lam = Partition(lam)
                if lam not in box:
                    raise ValueError(f"{list(lam)} is outside the {r} x {self.d - r} box")
                if coeff:
                    prev = clean.setdefault(r, {}).get(lam)
                    clean[r][lam] = coeff if prev is None else prev + coeff
            if r in clean:
                clean[r] = {k: v for k, v in clean[r].items() if v}
                if not clean[r]:
                    del clean[r]
        object.__setattr__(self, "blocks", clean)

    @classmethod
    def zero(cls, d: int) -> "KClass":
        return cls(d, {})

    def is_zero(self) -> bool:
        return not self.blocks

    def coeff(self, r: int, lam: Sequence[int]) -> SchurElement:
        return self.blocks.get(r, {}).get(Partition(lam), SchurElement())

    def __eq__(self, other) -> bool:
        return isinstance(other, KClass) and self.d == other.d and self.blocks == other.blocks

    def __add__(self, other: "KClass") -> "KClass":
        if self.d != other.d:
            raise ValueError("classes over different E")
        out: dict[int, dict[Partition, SchurElement]] = {r: dict(b) for r, b in self.blocks.items()}
        for r, block in other.blocks.items():
            tgt = out.setdefault(r, {})
            for lam, c in block.items():
                tgt[lam] = tgt[lam] + c if lam in tgt else c
        return KClass(self.d, out)

    def __neg__(self) -> "KClass":
        return KClass(self.d, {r: {lam: -c for lam, c in b.items()} for r, b in self.blocks.items()})

    def __sub__(self, other: "KClass") -> "KClass":
        return self + (-other)

    def __rmul__(self, a):
        if isinstance(a, int):
            a = SchurElement.basis((), a)
        if not isinstance(a, SchurElement):
            return NotImplemented
        return KClass(self.d, {r: {lam: a * c for lam, c in b.items()} for r, b in self.blocks.items()})

    def __repr__(self) -> str:
        if not self.blocks:
            return f"KClass(d={self.d}, 0)"
        parts = []
        for r in sorted(self.blocks):
            for lam in sorted(self.blocks[r], key=sort_key):
                parts.append(f"({self.blocks[r][lam]!r})*[K_{r},{list(lam)}]")
        return f"KClass(d={self.d}, " + " + ".join(parts) + ")"

    def to_json(self) -> dict:
        return {
            "d": self.d,
            "blocks": [
                {
                    "r": r,
                    "terms": [
                        {"lambda": list(lam), "coeff": self.blocks[r][lam].to_json()}
                        for lam in sorted(self.blocks[r], key=sort_key)
                    ],
                }
                for r in sorted(self.blocks)
            ],
        }

    @classmethod
    def from_json(cls, data: Mapping) -> "KClass":
        blocks = {}
        for block in data["blocks"]:
            blocks[int(block["r"])] = {
                Partition(t["lambda"]): SchurElement.from_json(t["coeff"]) for t in block["terms"]
            }
        return cls(int(data["d"]), blocks)


def basis_class(r: int, lam: Sequence[int], mu_v: Sequence[int], d: int) -> KClass:
    """The class of S_{mu_v}(V) (x) K_{r,lam}."""
    lam = Partition(lam)
    if not 0 <= r <= d:
        raise ValueError(f"need 0 <= r <= d, got r={r}, d={d}")
    if lam not in rectangle_basis(d, r):
        raise ValueError(f"{list(lam)} is outside the {r} x {d - r} box")
    return KClass(d, {r: {lam: SchurElement.basis(mu_v)}})


def rank_cells(d: int) -> int:
    """Number of Lambda-basis classes [K_{r,lam}] of K(A)."""
    return sum(len(rectangle_basis(d, r)) for r in range(d + 1))


def project_block(x: KClass, r: int) -> KClass:
    if not 0 <= r <= x.d:
        raise ValueError(f"need 0 <= r <= d, got r={r}")
    return KClass(x.d, {r: x.blocks[r]} if r in x.blocks else {})


def fourier(x: KClass) -> KClass:
    """Induced map of the Fourier transform: star on Lambda, Serre duality on each block, r -> d - r."""
    d = x.d
    out: dict[int, dict[Partition, SchurElement]] = {}
    for r, block in x.blocks.items():
        target = rectangle_basis(d, d - r)
        cols = _serre_dual_matrix(d, r)
        source = rectangle_basis(d, r)
        tgt = out.setdefault(d - r, {})
        for lam, a in block.items():
            col = cols[source.index(lam)]
            a_star = star(a)
            for kappa, k in zip(target, col):
                if k:
                    term = a_star * k
                    tgt[kappa] = tgt[kappa] + term if kappa in tgt else term
    return KClass(d, out)
