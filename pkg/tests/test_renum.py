import itertools
import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from combknot.cmap import CombinatorialMap
from combknot.perm import Permutation, conjugate
from combknot.renum import (
    block_rotation,
    build_plan,
    enumerate_plans,
    is_block_rotation,
    is_normalized_knot,
    is_partially_normalized,
    knot_is_partially_normalized,
    normalize,
    normalize_structuring,
    parity_cut_test,
    parity_partition_check,
    rho_pair_of_normalized,
)
from figures import FIG2, perm


def test_is_normalized_knot(fig1, fig2, fig5):
    assert is_normalized_knot(fig2)
    assert is_normalized_knot(fig5)
    assert not is_normalized_knot(fig1)


def test_is_partially_normalized(fig1, fig2, fig5):
    assert is_partially_normalized(fig2) and is_partially_normalized(fig5)
    assert not is_partially_normalized(fig1)


def test_structuring_knot_of_fig2_is_partially_normalized(fig2):
    a = fig2.knot()
    assert knot_is_partially_normalized(perm(FIG2["epsilon"], 18), a.green)


@pytest.mark.parametrize(
    "k, l1, l2, expected",
    [(2, 1, 4, (2, 3)), (4, 1, 4, (4, 1)), (18, 1, 18, (18, 1)), (1, 5, 8, (5, 6))],
)
def test_rho_pair_of_normalized(k, l1, l2, expected):
    assert rho_pair_of_normalized(k, l1, l2) == expected


@pytest.mark.parametrize("k, l1, l2", [(0, 1, 4), (5, 1, 4), (1, 1, 3), (1, 0, 3)])
def test_rho_pair_of_normalized_rejects(k, l1, l2):
    with pytest.raises(ValueError):
        rho_pair_of_normalized(k, l1, l2)


def test_rho_pairs_match_fig_rotations(fig2, fig5):
    assert fig5.edge_rotation()(2) == 3
    assert fig2.edge_rotation()(18) == 1


def test_parity_cut_test_fig2(fig2):
    a = fig2.knot()
    assert fig2.rotation(11) == 1
    assert parity_cut_test(fig2, 11) == "cut" and a.cut_edges(1) == 2
    assert fig2.rotation(1) == 6
    assert parity_cut_test(fig2, 1) == "cycle" and a.cycle_edges(5) == 6


def test_parity_cut_test_requires_partial_normalization(fig1):
    with pytest.raises(ValueError):
        parity_cut_test(fig1, 1)


def test_parity_partition_check(fig1, fig2, fig5):
    assert parity_partition_check(fig5) and fig5.knot().green == {1, 3, 5, 7, 9, 11}
    assert not parity_partition_check(fig1)
    assert parity_partition_check(fig2)


def test_fig1_canonical_plan(fig1):
    plan = build_plan(fig1.knot())
    assert plan.string == (1, 2, 7, 8, 3, 4, 9, 10, 5, 6, 12, 11)
    assert plan.T == perm("(3 5 9 7)(4 6 10 8)(11 12)", 12)
    normal = plan.apply(fig1)
    assert normal.rotation == perm("(1 7 10)(2 5 11)(3 6 9)(4 8 12)", 12)
    assert normal.knot().knot == block_rotation([4, 4, 4])
    assert str(normal.knot().characteristic) == "<2,2,2>"


def test_normalize_is_identity_on_normalized_map(fig2):
    normal, plan = normalize(fig2)
    assert normal == fig2
    assert plan.T.is_identity()


def test_normalize_round_trip(fig1):
    normal, plan = normalize(fig1)
    assert conjugate(normal.rotation, plan.T.inverse()) == fig1.rotation


def test_plan_rejects_bad_start(fig1):
    a = fig1.knot()
    # corner 2 is red: the knot leaves it by an edge-rotation step
    with pytest.raises(ValueError):
        build_plan(a, starts=(2, 3, 5))
    with pytest.raises(ValueError):
        build_plan(a, orbit_order=(1, 3))
    with pytest.raises(ValueError):
        build_plan(a, orientations=(True,))


def test_reversed_orbit_starts_at_inner_partner(fig1):
    a = fig1.knot()
    plan = build_plan(a, orientations=(False, True, True))
    assert plan.string[:4] == (2, 1, 8, 7)
    assert plan.knot * plan.T == plan.T * plan.target
    assert is_normalized_knot(plan.apply(fig1))


def test_enumerate_plans_fig1(fig1):
    plans = list(enumerate_plans(fig1.knot()))
    assert len(plans) == 48
    assert len({p.T for p in plans}) == 48
    for p in plans:
        assert p.knot * p.T == p.T * p.target
        assert conjugate(p.T, fig1.inner) == p.T
        assert is_normalized_knot(p.apply(fig1))


def test_enumerate_plans_fig5_and_compact(fig2, fig5):
    plans = list(enumerate_plans(fig5.knot()))
    assert len(plans) == 48
    assert all(is_normalized_knot(p.apply(fig5)) for p in plans)
    assert len(list(enumerate_plans(fig2.knot()))) == 2


def test_normalize_structuring_fig2(fig2):
    s_map, plan = normalize_structuring(fig2)
    s = s_map.knot()
    assert is_block_rotation(s.structuring_knot)
    assert knot_is_partially_normalized(s.knot, s.green)


def test_theorem8_biconditional_exhaustive():
    for m in range(4):
        for img in itertools.permutations(range(1, 2 * m + 1)):
            cmap = CombinatorialMap(Permutation(img))
            assert parity_partition_check(cmap) == is_partially_normalized(cmap)


def test_theorem7_and_6_on_all_normalized_maps():
    seen = 0
    for m in range(1, 4):
        for img in itertools.permutations(range(1, 2 * m + 1)):
            cmap, _ = normalize(CombinatorialMap(Permutation(img)))
            a = cmap.knot()
            assert a.green == frozenset(range(1, 2 * m + 1, 2))
            rho = cmap.edge_rotation()
            for cyc in a.knot.cycles():
                for k in range(2, len(cyc) + 1, 2):
                    x, y = rho_pair_of_normalized(k, cyc[0], cyc[-1])
                    assert rho(x) == y
            seen += 1
    assert seen == 2 + 24 + 720


@st.composite
def maps(draw, max_edges=5):
    m = draw(st.integers(0, max_edges))
    return CombinatorialMap(Permutation(draw(st.permutations(list(range(1, 2 * m + 1))))))


@settings(max_examples=150, deadline=None)
@given(maps())
def test_normalize_property(cmap):
    normal, plan = normalize(cmap)
    assert is_normalized_knot(normal)
    assert conjugate(plan.T, cmap.inner) == plan.T
    assert plan.knot * plan.T == plan.T * plan.target
    assert conjugate(normal.rotation, plan.T.inverse()) == cmap.rotation


@settings(max_examples=40, deadline=None)
@given(maps(max_edges=4), st.randoms(use_true_random=False))
def test_random_plan_property(cmap, rnd):
    a = cmap.knot()
    keys = [c[0] for c in a.knot.cycles()]
    rnd.shuffle(keys)
    orientations = [rnd.random() < 0.5 for _ in keys]
    plan = build_plan(a, keys, orientations)
    assert plan.knot * plan.T == plan.T * plan.target
    assert is_normalized_knot(plan.apply(cmap))


def test_random_eight_corner_maps():
    rng = random.Random(5)
    pts = list(range(1, 9))
    for _ in range(200):
        rng.shuffle(pts)
        normal, _ = normalize(CombinatorialMap(Permutation(pts)))
        assert is_normalized_knot(normal)
