"""Derived saturation of the generic simple objects S_mu(K).

Both functions enumerate E-partitions ``lam`` with at most ``d`` rows and
``|lam| <= cutoff``.  Since Bott's algorithm preserves total size, every output
V-partition has size ``|lam| + |mu|``; the returned character therefore carries
the V-cutoff ``cutoff + |mu|`` and is exact up to it.
"""

from __future__ import annotations

from typing import Sequence

from .bott import bott_infinite
from .characters import EquivCharacter
from .partitions import Partition, partitions_up_to


def derived_saturation(mu: Sequence[int], d: int, i: int, cutoff: int) -> EquivCharacter:
    """Character of R^i S(S_mu(K)): terms S_nu(V) (x) S_lam(E) with [lam, mu] -> nu in exactly i steps."""
    mu = Partition(mu)
    terms = {}
    for lam in partitions_up_to(cutoff, max_len=d):
        res = bott_infinite(lam.padded(d), mu)
        if res.vanishes or res.steps != i:
            continue
        key = (lam, Partition(res.gamma))
        # lam is part of the key, so two lam can never land on the same cell
        assert key not in terms, f"collision at {key}"
        terms[key] = 1
    return EquivCharacter(d, cutoff + mu.size, terms)


def saturation_closed_form(mu: Sequence[int], d: int, cutoff: int) -> EquivCharacter:
    """S(S_mu(K)) as the sum over lam with lam_d >= mu_1 of S_{[lam, mu]}(V) (x) S_lam(E)."""
    mu = Partition(mu)
    terms = {}
    for lam in partitions_up_to(cutoff, max_len=d):
        if lam.part(d) >= mu.part(1):
            terms[(lam, Partition(lam.padded(d) + tuple(mu)))] = 1
    return EquivCharacter(d, cutoff + mu.size, terms)


def saturation_degrees(mu: Sequence[int], d: int, lam: Sequence[int]) -> int | None:
    """The unique i with lam contributing to R^i S(S_mu(K)), or None if it contributes nowhere."""
    res = bott_infinite(Partition(lam).padded(d), mu)
    return None if res.vanishes else res.steps
