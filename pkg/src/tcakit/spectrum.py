"""Krull dimension of the total Grassmannian Gr(C^d) and an explicit maximal chain."""

from __future__ import annotations

from dataclasses import dataclass


@dataclass(frozen=True, order=True)
class ChainLabel:
    """Z_{r,i}: closure of the r-dimensional subspaces of V_{r+1} containing V_{r-i},
    for a fixed complete flag V_0 < V_1 < ... < V_d.  ``terminal`` marks Gr(E) itself."""

    r: int
    i: int
    terminal: bool = False

    def __str__(self) -> str:
        return "Gr(E)" if self.terminal else f"Z_{{{self.r},{self.i}}}"

    def describe(self) -> str:
        if self.terminal:
            return "the whole space Gr(E)"
        return f"closure of {{{self.r}-dim W : V_{self.r - self.i} <= W <= V_{self.r + 1}}}"


def krull_dimension(d: int) -> int:
    if d < 0:
        raise ValueError("d must be nonnegative")
    return d * (d + 1) // 2


def maximal_chain(d: int) -> list[ChainLabel]:
    """Strictly increasing chain Z_{0,0} < Z_{1,0} < Z_{1,1} < ... < Z_{d-1,d-1} < Gr(E)."""
    if d < 1:
        raise ValueError("d must be at least 1")
    chain = [ChainLabel(r, i) for r in range(d) for i in range(r + 1)]
    chain.append(ChainLabel(d, d, terminal=True))
    return chain


def chain_length(chain: list[ChainLabel]) -> int:
    return len(chain) - 1
