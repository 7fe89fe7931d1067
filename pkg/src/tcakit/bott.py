"""Bott's algorithm and Borel-Weil-Bott pushforwards from Grassmannians.

Conventions: on ``Gr_r(C^d)`` the tautological quotient ``Q`` has rank ``r`` and
the subbundle ``R`` has rank ``d - r``.  A weight for ``S_alpha(Q) (x) S_beta(R)``
is the concatenation ``(alpha, beta)``.  The dot action is
``sigma . v = sigma(v + rho) - rho`` with ``rho = (d-1, ..., 1, 0)``; for the
infinite Grassmannian ``rho = (0, -1, -2, ...)``, which differs by a constant
and so gives the same sorting.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .partitions import Partition, Weight, concat_weight


@dataclass(frozen=True)
class BottResult:
    """Outcome of Bott's algorithm: vanishing, or a dominant weight and a swap count."""

    gamma: tuple[int, ...] | None = None
    steps: int | None = None

    @property
    def vanishes(self) -> bool:
        return self.gamma is None

    @classmethod
    def vanishing(cls) -> "BottResult":
        return cls()

    def __str__(self) -> str:
        if self.vanishes:
            return "vanishes"
        return f"gamma=[{','.join(map(str, self.gamma))}] steps={self.steps}"


def _inversions(seq: Sequence[int]) -> int:
    return sum(1 for i in range(len(seq)) for j in range(i + 1, len(seq)) if seq[i] < seq[j])


def bott_sort(v: Sequence[int]) -> BottResult:
    """Run Bott's algorithm on a finite weight.

    Vanishes iff ``v + rho`` has a repeated entry.  Otherwise the number of
    adjacent ``s_i .`` moves a bubble sort makes equals the number of
    ascending pairs of ``v + rho``, and the result is the sorted sequence minus
    ``rho``.
    """
    v = list(v)
    d = len(v)
    shifted = [v[i] + d - 1 - i for i in range(d)]
    if len(set(shifted)) < d:
        return BottResult.vanishing()
    steps = _inversions(shifted)
    ordered = sorted(shifted, reverse=True)
    return BottResult(tuple(ordered[i] - (d - 1 - i) for i in range(d)), steps)


def dual_weight(lam: Sequence[int], rank: int) -> Weight:
    """Weight of ``S_lam(F*)`` as a Schur functor of ``F`` (rank ``rank``)."""
    lam = list(lam) + [0] * (rank - len(lam))
    if len(lam) > rank:
        raise ValueError(f"{lam} has more than {rank} entries")
    return Weight(-x for x in reversed(lam))


def bwb_pushforward(alpha: Sequence[int], beta: Sequence[int], d: int) -> BottResult:
    """Higher direct images of ``S_alpha(Q) (x) S_beta(R)`` from ``Gr_r(C^d)`` to a point.

    ``alpha`` (length ``r``) and ``beta`` (length ``d - r``) are dominant
    weights; negative entries are allowed.  The result is either vanishing or
    ``(gamma, j)`` meaning only ``R^j`` survives and equals ``S_gamma(C^d)``.
    """
    alpha, beta = list(alpha), list(beta)
    r = len(alpha)
    if r > d:
        raise ValueError(f"rank {r} exceeds d={d}")
    if len(beta) != d - r:
        raise ValueError(f"beta must have length d - r = {d - r}, got {len(beta)}")
    for name, w in (("alpha", alpha), ("beta", beta)):
        if any(w[i] < w[i + 1] for i in range(len(w) - 1)):
            raise ValueError(f"{name}={w} is not weakly decreasing")
    return bott_sort(alpha + beta)


def infinite_window(head: Sequence[int], mu: Sequence[int]) -> int:
    """Finite window that captures every move of the infinite algorithm.

    Beyond the nonzero prefix, ``v + rho`` continues with strictly decreasing
    values ``-(p-1)``.  Prefix entries are never smaller than
    ``-(len(prefix) - 1) - max(0, -min(head))``, so the tail past the returned
    length never takes part in a swap or a repeat.
    """
    n, m = len(head), len(Partition(mu))
    top = max([0, *head])
    bottom = max([0, *(-x for x in head)])
    return 2 * n + m + top + bottom + 1


def bott_infinite(head: Sequence[int], mu: Sequence[int], window: int | None = None) -> BottResult:
    """Bott's algorithm on ``(head_1, ..., head_n, mu_1, mu_2, ..., 0, 0, ...)``.

    The answer, when it does not vanish, is returned with trailing zeros
    trimmed.  ``window`` overrides the automatic truncation length.
    """
    w = concat_weight(head, mu)
    length = infinite_window(head, mu) if window is None else window
    res = bott_sort(w.truncate(length))
    if res.vanishes:
        return res
    gamma = list(res.gamma)
    while gamma and gamma[-1] == 0:
        gamma.pop()
    return BottResult(tuple(gamma), res.steps)
