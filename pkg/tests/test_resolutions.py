from math import comb

import pytest

from tcakit.characters import truncated_module_character
from tcakit.partitions import Partition, partitions_up_to, transpose
from tcakit.resolutions import (
    betti_table,
    cogeneration_bound,
    exterior_xi_terms,
    linear_strand,
    regularity_bound,
    regularity_report,
    resolution_character,
)
from tcakit.schur import hook_content_dimension

P = Partition


def test_exterior_xi_terms():
    assert exterior_xi_terms(0, 3) == [((), ())]
    assert exterior_xi_terms(1, 2) == [((1,), (1,))]
    assert exterior_xi_terms(2, 2) == [((2,), (1, 1)), ((1, 1), (2,))]
    assert exterior_xi_terms(3, 1) == [((1, 1, 1), (3,))]


def test_exterior_dimension_matches_binomial():
    # dim wedge^e(C^a (x) C^b) = binom(ab, e)
    for a in range(1, 4):
        for b in range(1, 4):
            for e in range(a * b + 1):
                total = sum(
                    hook_content_dimension(eps, a) * hook_content_dimension(mu, b)
                    for mu, eps in exterior_xi_terms(e, a)
                )
                assert total == comb(a * b, e)


def test_free_module_table():
    t = betti_table((), 1, 1, 5)
    assert t.nonzero_cells() == [(0, 0)]
    assert t.cell(0, 0) == {((), ()): 1}


def test_large_first_part_gives_linear_resolution():
    for k in range(2, 5):
        t = betti_table((k,), 1, 2, 5)
        assert t.rows() == [0]
    assert betti_table((3, 3), 2, 3, 4).rows() == [0]


def test_eagon_northcott_example():
    t = betti_table((), 1, 2, 3)
    assert t.cell(1, 1) == {((1, 1), (1, 1)): 1}
    assert t.cell(2, 1) == {((2, 1), (1, 1, 1)): 1}
    assert [(i, j) for i, j in t.nonzero_cells() if j == 0] == [(0, 0)]


@pytest.mark.parametrize("N", range(2, 7))
def test_eagon_northcott_betti_numbers(N):
    # maximal minors of a generic 2 x N matrix: beta_i = i * binom(N, i + 1) for i >= 1
    t = betti_table((), 1, 2, 6)
    for i in range(1, 7):
        dims = sum(
            m * hook_content_dimension(eps, 2) * hook_content_dimension(nu, N)
            for (eps, nu), m in t.cell(i, 1).items()
        )
        assert dims == i * comb(N, i + 1)


def test_internal_degree_and_strand_bound():
    for lam in partitions_up_to(4, max_len=2):
        for n in range(max(1, len(lam)), 3):
            for dim_e in range(1, 4):
                t = betti_table(lam, n, dim_e, 5)
                bound = regularity_bound(lam, n, dim_e)
                for (i, j), cell in t.entries.items():
                    assert j <= bound
                    for (eps, nu), m in cell.items():
                        assert nu.size == lam.size + i + j
                        assert eps.size == i + j
                        assert m > 0


def test_regularity_examples():
    assert tuple(regularity_report((2,), 1, 2, 4)) == (0, 0)
    assert tuple(regularity_report((), 1, 2, 4)) == (1, 1)
    assert tuple(regularity_report((), 2, 1, 4)) == (0, 0)
    assert regularity_report((), 1, 2, 4).certified


def test_regularity_rejects_long_lambda():
    with pytest.raises(ValueError):
        betti_table((1, 1), 1, 2, 3)
    with pytest.raises(ValueError):
        regularity_report((1, 1), 1, 2, 3)


def test_cogeneration_bound():
    assert cogeneration_bound((3,), 1, 2) == 0
    assert cogeneration_bound((), 1, 2) == 2
    assert cogeneration_bound((), 2, 3) == 6


def test_linear_strands():
    free = betti_table((), 1, 1, 3)
    strand = linear_strand(free, 0)
    assert strand[0] == [((), (), 1)] and all(not x for x in strand[1:])
    t = betti_table((), 1, 2, 4)
    row = linear_strand(t, 1)
    assert not row[0] and all(row[i] for i in range(1, 5))
    assert all(not x for x in linear_strand(t, regularity_bound((), 1, 2) + 1))
    nonzero_rows = [j for j in range(5) if any(linear_strand(t, j))]
    assert len(nonzero_rows) == regularity_report((), 1, 2, 4).observed + 1


@pytest.mark.parametrize("n, dim_e", [(1, 1), (1, 2), (2, 1), (2, 2), (1, 3), (3, 2)])
def test_euler_identity_empty_lambda(n, dim_e):
    t = betti_table((), n, dim_e, 6)
    assert resolution_character(t, 6) == truncated_module_character((), n, dim_e, 6)


@pytest.mark.parametrize("lam, n, dim_e", [((1,), 1, 2), ((1,), 2, 2), ((2, 1), 2, 2), ((1, 1), 2, 3), ((1,), 2, 3)])
def test_euler_identity_nonempty_lambda(lam, n, dim_e):
    t = betti_table(lam, n, dim_e, 5)
    cutoff = Partition(lam).size + 5
    assert resolution_character(t, cutoff) == truncated_module_character(lam, n, dim_e, cutoff)


def test_resolution_character_refuses_uncertified_degree():
    t = betti_table((), 1, 2, 3)
    with pytest.raises(ValueError):
        resolution_character(t, 4)


def test_each_mu_contributes_once():
    # a given (lam, mu) pair lands in at most one cell, so for lam empty and mu_1 <= dim E the
    # E-labels mu^T in the whole table are pairwise distinct
    t = betti_table((), 2, 2, 5)
    labels = [eps for cell in t.entries.values() for (eps, _), m in cell.items() for _ in range(m)]
    assert len(labels) == len(set(labels))
    assert all(transpose(eps)[0] <= 2 for eps in labels if eps)
