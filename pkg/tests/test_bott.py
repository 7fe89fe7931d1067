from itertools import product

import pytest

from oracles import bubble_bott
from tcakit.bott import (
    BottResult,
    bott_infinite,
    bott_sort,
    bwb_pushforward,
    dual_weight,
    infinite_window,
)
from tcakit.partitions import partitions_up_to, rectangle_partitions, transpose


def test_bott_sort_examples():
    assert bott_sort((3, 1)) == BottResult((3, 1), 0)
    assert bott_sort((0, 1)).vanishes
    assert bott_sort((0, 2)) == BottResult((1, 1), 1)
    assert str(bott_sort((0, 2))) == "gamma=[1,1] steps=1"
    assert str(bott_sort((0, 1))) == "vanishes"


@pytest.mark.parametrize("d", range(1, 6))
def test_bott_sort_matches_bubble_oracle(d):
    for v in product(range(-3, 4), repeat=d):
        res = bott_sort(v)
        ref = bubble_bott(v)
        if ref is None:
            assert res.vanishes, v
        else:
            assert (res.gamma, res.steps) == ref, v
            assert res.steps <= d * (d - 1) // 2
            assert all(a >= b for a, b in zip(res.gamma, res.gamma[1:]))
            assert sum(res.gamma) == sum(v)


def test_bwb_examples():
    for k in range(5):
        assert bwb_pushforward((k,), (0,), 2) == BottResult((k, 0), 0)
    # H^1(P^1, O(-2)) is one dimensional
    assert bwb_pushforward((0,), (2,), 2) == BottResult((1, 1), 1)
    assert bwb_pushforward((-1,), (1,), 2) == BottResult((0, 0), 1)


def test_bwb_errors():
    with pytest.raises(ValueError):
        bwb_pushforward((1, 0, 0), (), 2)
    with pytest.raises(ValueError):
        bwb_pushforward((1,), (0, 0), 2)
    with pytest.raises(ValueError):
        bwb_pushforward((0, 1), (), 2)


def test_dual_weight():
    assert dual_weight((2, 1), 3) == (0, -1, -2)
    assert dual_weight((), 0) == ()


@pytest.mark.parametrize("d", range(1, 6))
def test_dual_basis_orthogonality(d):
    for r in range(d + 1):
        box = rectangle_partitions(r, d - r)
        for alpha in box:
            for beta in box:
                res = bwb_pushforward(dual_weight(alpha, r), transpose(beta).padded(d - r), d)
                if alpha == beta:
                    assert res == BottResult((0,) * d, alpha.size)
                else:
                    assert res.vanishes


def test_bott_infinite_examples():
    assert bott_infinite((2, 1), ()) == BottResult((2, 1), 0)
    assert bott_infinite((0,), (1,)).vanishes
    assert bott_infinite((0,), (2,)) == BottResult((1, 1), 1)


def test_bott_infinite_agrees_with_finite_and_is_window_stable():
    for n in range(1, 4):
        for head in partitions_up_to(6, max_len=n):
            for mu in partitions_up_to(5):
                h = head.padded(n)
                w = infinite_window(h, mu)
                res = bott_infinite(h, mu)
                finite = bott_sort(h + tuple(mu) + (0,) * (w - n - len(mu)))
                assert res.vanishes == finite.vanishes
                for k in (2, 3):
                    assert bott_infinite(h, mu, window=k * w) == res
                if not res.vanishes:
                    assert res.steps == finite.steps
                    assert res.gamma == tuple(x for x in finite.gamma if x) or not any(finite.gamma)


def test_bott_infinite_negative_head():
    # every integer at most -len lies in the shifted tail, so a very negative head entry collides
    assert bott_infinite((-5,), ()).vanishes
    assert bott_infinite((-5,), (), window=50).vanishes
