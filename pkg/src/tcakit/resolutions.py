"""Equivariant Betti tables of the row truncations (S_lam(V) (x) A)^{<= n}.

The minimal free resolution comes from the geometric technique on the
Grassmannian of rank-n quotients of C^infinity: with xi = E (x) R,

    F_i = sum_j H^j(wedge^{i+j} xi (x) S_lam Q) (x) A(-i-j),

and wedge^e xi splits as a sum of S_{mu^T}(E) (x) S_mu(R) over mu with
``|mu| = e`` and ``mu_1 <= dim E``.  Each summand is computed with the
infinite Bott algorithm on ``(lam_1, ..., lam_n, mu_1, mu_2, ...)``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence

from .bott import bott_infinite
from .characters import EquivCharacter, cauchy_A
from .partitions import Partition, partitions_of, sort_key, transpose

Cell = dict[tuple[Partition, Partition], int]


def exterior_xi_terms(e: int, dim_e: int) -> list[tuple[Partition, Partition]]:
    """Pairs (mu, mu^T) for the summands S_{mu^T}(E) (x) S_mu(R) of wedge^e(E (x) R)."""
    return [(mu, transpose(mu)) for mu in partitions_of(e, max_part=dim_e)]


def regularity_bound(lam: Sequence[int], n: int, dim_e: int) -> int:
    lam_n = Partition(lam).part(n)
    return 0 if lam_n >= dim_e else n * (dim_e - lam_n - 1)


def cogeneration_bound(lam: Sequence[int], n: int, dim_e: int) -> int:
    """Homological degree bound for a cogenerating set of Tor."""
    lam = Partition(lam)
    if len(lam) > n:
        raise ValueError(f"{list(lam)} has more than n={n} rows")
    return dim_e * max(0, dim_e - lam.part(n) - 1)


@dataclass
class BettiTable:
    dim_e: int
    n: int
    lam: Partition
    i_max: int
    entries: dict[tuple[int, int], Cell] = field(default_factory=dict)

    def cell(self, i: int, j: int) -> Cell:
        return dict(self.entries.get((i, j), {}))

    def nonzero_cells(self) -> list[tuple[int, int]]:
        return sorted((i, j) for (i, j), c in self.entries.items() if c)

    def rows(self) -> list[int]:
        return sorted({j for (_, j), c in self.entries.items() if c})

    def total(self, i: int, j: int) -> int:
        return sum(self.entries.get((i, j), {}).values())

    def tor_character(self, i: int) -> EquivCharacter:
        """Character of Tor_i as a representation of GL(E) x GL(V)."""
        terms: dict = {}
        cutoff = self.lam.size + self.i_max + max([0, *self.rows()])
        for (ii, _), c in self.entries.items():
            if ii != i:
                continue
            for key, m in c.items():
                terms[key] = terms.get(key, 0) + m
        return EquivCharacter(self.dim_e, cutoff, terms)

    def to_json(self) -> dict:
        return {
            "lambda": list(self.lam),
            "n": self.n,
            "dimE": self.dim_e,
            "imax": self.i_max,
            "cells": [
                {
                    "i": i,
                    "j": j,
                    "terms": [
                        {"E": list(eps), "V": list(nu), "mult": m}
                        for (eps, nu), m in _sorted_cell(self.entries[(i, j)])
                    ],
                }
                for i, j in self.nonzero_cells()
            ],
        }

    def render(self) -> str:
        lines = [f"Betti table of (S_{list(self.lam)} (x) A)^<={self.n}, dim E={self.dim_e}, i <= {self.i_max}"]
        for j in self.rows():
            lines.append(f"row j={j}:")
            for i in range(self.i_max + 1):
                c = self.entries.get((i, j))
                if not c:
                    continue
                body = ", ".join(f"({list(eps)},{list(nu)},{m})" for (eps, nu), m in _sorted_cell(c))
                lines.append(f"  i={i}: {body}")
        return "\n".join(lines)


def _sorted_cell(c: Cell):
    return sorted(c.items(), key=lambda t: (sort_key(t[0][1]), sort_key(t[0][0])))


def betti_table(lam: Sequence[int], n: int, dim_e: int, i_max: int) -> BettiTable:
    lam = Partition(lam)
    if len(lam) > n:
        raise ValueError(f"{list(lam)} has more than n={n} rows")
    head = lam.padded(n)
    bound = regularity_bound(lam, n, dim_e)
    table = BettiTable(dim_e, n, lam, i_max)
    for e in range(i_max + bound + 1):
        for mu, eps in exterior_xi_terms(e, dim_e):
            res = bott_infinite(head, mu)
            if res.vanishes:
                continue
            j = res.steps
            i = e - j
            if i > i_max:
                continue
            cell = table.entries.setdefault((i, j), {})
            key = (eps, Partition(res.gamma))
            cell[key] = cell.get(key, 0) + 1
    return table


@dataclass(frozen=True)
class RegularityReport:
    observed: int
    bound: int
    certified: bool

    def __iter__(self):
        return iter((self.observed, self.bound))

    def __str__(self) -> str:
        label = "certified" if self.certified else "observed"
        return f"regularity={self.observed} ({label}) bound={self.bound}"


def regularity_report(lam: Sequence[int], n: int, dim_e: int, i_max: int) -> RegularityReport:
    """Largest strand seen with i <= i_max, next to the a priori bound.

    The observation is certified when it meets the bound, since no strand can
    lie above it.
    """
    table = betti_table(lam, n, dim_e, i_max)
    observed = max(table.rows(), default=0)
    bound = regularity_bound(lam, n, dim_e)
    return RegularityReport(observed, bound, observed == bound)


def linear_strand(table: BettiTable, j: int) -> list[list[tuple[Partition, Partition, int]]]:
    """Row j of the table as a list indexed by homological degree 0..i_max."""
    out = []
    for i in range(table.i_max + 1):
        c = table.entries.get((i, j), {})
        out.append([(eps, nu, m) for (eps, nu), m in _sorted_cell(c)])
    return out


def resolution_character(table: BettiTable, cutoff: int) -> EquivCharacter:
    """sum_i (-1)^i [Tor_i] * [A], truncated at V-degree ``cutoff``.

    Exactness of the resolution means this equals the character of the module
    itself whenever every Tor_i with generators in V-degree <= cutoff is
    present in the table, i.e. when ``cutoff <= |lam| + i_max``.
    """
    if cutoff > table.lam.size + table.i_max:
        raise ValueError(f"table swept to i_max={table.i_max} cannot certify V-degree {cutoff}")
    a = cauchy_A(table.dim_e, cutoff)
    total = EquivCharacter(table.dim_e, cutoff)
    for i in range(table.i_max + 1):
        tor = table.tor_character(i).truncate(cutoff)
        if tor.terms:
            total = total + tor.tensor(a).scale((-1) ** i)
    return total
