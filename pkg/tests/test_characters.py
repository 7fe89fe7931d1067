from math import comb

import pytest

from tcakit.characters import (
    EquivCharacter,
    cauchy_A,
    dimension_series,
    k_module_character,
    k_module_character_bwb,
    torsion_injective_character,
    truncated_module_character,
)
from tcakit.partitions import Partition, partitions_up_to, rectangle_partitions
from tcakit.schur import hook_content_dimension, lr_coefficient

P = Partition


def test_cauchy_examples():
    ch = cauchy_A(1, 3)
    assert ch.terms == {((k,), (k,)): 1 for k in range(1, 4)} | {((), ()): 1}
    assert set(cauchy_A(2, 2).terms) == {(P(p), P(p)) for p in [(), (1,), (2,), (1, 1)]}
    assert cauchy_A(0, 5).terms == {((), ()): 1}


@pytest.mark.parametrize("d", range(1, 4))
@pytest.mark.parametrize("N", range(0, 4))
def test_cauchy_hilbert_function(d, N):
    series = dimension_series(cauchy_A(d, 6), N)
    expected = [comb(d * N + n - 1, n) if d * N else int(n == 0) for n in range(7)]
    assert series == expected


def test_dimension_series_examples():
    assert dimension_series(cauchy_A(1, 3), 1) == [1, 1, 1, 1]
    assert dimension_series(cauchy_A(3, 4), 0) == [1, 0, 0, 0, 0]
    assert dimension_series(k_module_character(0, (), 3, 4), 5) == [1, 0, 0, 0, 0]


def test_k_module_examples():
    assert k_module_character(0, (), 3, 4).terms == {((), ()): 1}
    for d in range(1, 4):
        assert k_module_character(d, (), d, 5) == cauchy_A(d, 5)
    ch = k_module_character(1, (1,), 2, 2)
    assert ch.terms == {((k + 1,), (k,) if k else ()): 1 for k in range(3)}


def test_k_module_errors():
    with pytest.raises(ValueError):
        k_module_character(1, (1, 1), 2, 2)
    with pytest.raises(ValueError):
        k_module_character(3, (), 2, 2)


def test_k_module_containment():
    for d in range(1, 4):
        for r in range(d + 1):
            for lam in rectangle_partitions(r, d - r):
                for (eps, _), _m in k_module_character(r, lam, d, 4).terms.items():
                    assert eps.contains(lam) and len(eps) <= r


def test_k_module_matches_bwb_definition():
    for d in range(1, 4):
        for r in range(d + 1):
            for lam in rectangle_partitions(r, d - r):
                assert k_module_character(r, lam, d, 4) == k_module_character_bwb(r, lam, d, 4)


def test_torsion_injective_examples():
    assert torsion_injective_character((), 2, 3).terms == {((), ()): 1}
    assert torsion_injective_character((1,), 2, 3).terms == {((), (1,)): 1, ((1,), ()): 1}
    ch = torsion_injective_character((1, 1), 2, 3)
    assert ch.terms == {((1, 1), ()): 1, ((1,), (1,)): 1, ((), (1, 1)): 1}
    assert ch.dual_e
    assert ch.to_json()[0]["dualE"] is True


def test_torsion_injective_respects_bounds():
    ch = torsion_injective_character((2, 1, 1), 1, 1)
    assert all(len(a) <= 1 and b.size <= 1 for a, b in ch.terms)
    assert ch.terms == {}
    ch = torsion_injective_character((2, 1, 1), 2, 3)
    assert ch.mult((1,), (2, 1)) == 1 and ch.mult((1, 1), (2,)) == 1


def test_branching_consistency():
    for lam in partitions_up_to(5):
        for a in range(4):
            for b in range(4):
                ch = torsion_injective_character(lam, a, lam.size)
                total = sum(
                    m * hook_content_dimension(al, a) * hook_content_dimension(be, b)
                    for (al, be), m in ch.terms.items()
                )
                assert total == hook_content_dimension(lam, a + b), (lam, a, b)


def test_invariants_enforced():
    with pytest.raises(ValueError):
        EquivCharacter(1, 3, {((1, 1), ()): 1})
    with pytest.raises(ValueError):
        EquivCharacter(1, 1, {((), (2,)): 1})
    assert EquivCharacter(1, 1, {((), ()): 0}).terms == {}


def test_tensor_with_unit():
    a = cauchy_A(2, 4)
    unit = EquivCharacter(2, 4, {((), ()): 1})
    assert a.tensor(unit) == a


def test_tensor_of_polynomial_rings():
    # Sym(E (x) V) with dim E = 2 is Sym(V) (x) Sym(V) on the level of dimensions
    d1 = dimension_series(cauchy_A(1, 5), 3)
    d2 = dimension_series(cauchy_A(2, 5), 3)
    conv = [sum(d1[k] * d1[n - k] for k in range(n + 1)) for n in range(6)]
    assert d2 == conv


def test_truncated_module_character():
    # for lam empty, the n-row truncation of A keeps S_nu(E) x S_nu(V) with len(nu) <= min(n, dim E)
    ch = truncated_module_character((), 1, 2, 4)
    assert ch.terms == {((k,), (k,)): 1 for k in range(1, 5)} | {((), ()): 1}
    ch = truncated_module_character((1,), 1, 2, 3)
    assert ch.terms == {((k,) if k else (), (k + 1,)): 1 for k in range(3)}
    ch = truncated_module_character((1,), 2, 1, 3)
    expected = {}
    for nu in partitions_up_to(2, max_len=1):
        for eps in partitions_up_to(3, max_len=2):
            c = lr_coefficient((1,), nu, eps)
            if c:
                expected[(nu, eps)] = c
    assert ch.terms == expected
