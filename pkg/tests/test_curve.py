import random

import pytest

import helpers
from nodalstab import (
    BundleClass,
    Component,
    TreeLikeCurve,
    arithmetic_genus,
    decompose,
    euler_char_total,
    prune_ordering,
    validate_curve,
    verify_ordering,
)
from nodalstab.errors import (
    CycleDetected,
    Disconnected,
    IndexOutOfRange,
    OrderingMismatch,
    ParseError,
)


def curve(decorations, edges):
    comps = tuple(Component(id=i, geometric_genus=g, internal_nodes=s)
                  for i, g, s in decorations)
    return TreeLikeCurve(components=comps, edges=tuple(edges))


PATH2 = curve([(1, 1, 0), (2, 1, 0)], [(1, 2)])
PATH3 = curve([(1, 1, 0), (2, 0, 0), (3, 1, 0)], [(1, 2), (2, 3)])
STAR4 = curve([(1, 0, 0), (2, 0, 0), (3, 0, 0), (4, 0, 0)],
              [(4, 1), (4, 2), (4, 3)])


def test_validate_path2():
    report = validate_curve(PATH2)
    assert report.valid
    assert report.p_a == 2
    assert report.genus_at_least_two


def test_validate_triangle_is_cycle():
    c = curve([(1, 0, 0), (2, 0, 0), (3, 0, 0)], [(1, 2), (2, 3), (1, 3)])
    report = validate_curve(c)
    assert not report.valid
    assert any(code == "CycleDetected" for code, _ in report.errors)
    with pytest.raises(CycleDetected):
        c.require_valid()


def test_validate_disconnected():
    c = curve([(1, 1, 0), (2, 1, 0)], [])
    report = validate_curve(c)
    assert not report.valid
    assert any(code == "Disconnected" for code, _ in report.errors)
    with pytest.raises(Disconnected):
        c.require_valid()


def test_validate_multi_edge():
    c = curve([(1, 0, 0), (2, 0, 0)], [(1, 2), (2, 1)])
    report = validate_curve(c)
    assert not report.valid
    assert [code for code, _ in report.errors] == ["MultiEdge"]


def test_validate_self_loop_is_cycle():
    c = curve([(1, 1, 0)], [(1, 1)])
    report = validate_curve(c)
    assert not report.valid
    assert report.errors[0][0] == "CycleDetected"


def test_validate_single_component():
    c = curve([(1, 0, 0)], [])
    report = validate_curve(c)
    assert report.valid
    assert report.p_a == 0
    assert not report.genus_at_least_two


def test_bad_documents_rejected():
    with pytest.raises(ParseError):
        curve([(1, 0, 0), (1, 1, 0)], [])          # duplicate id
    with pytest.raises(ParseError):
        curve([(1, 0, 0)], [(1, 2)])               # unknown id in edge
    with pytest.raises(ParseError):
        curve([(0, 0, 0)], [])                     # nonpositive id
    with pytest.raises(ParseError):
        Component(id=1, geometric_genus=-1)


def test_arithmetic_genus_single_nodal():
    assert arithmetic_genus(curve([(1, 2, 1)], [])) == 3


def test_arithmetic_genus_path3_with_internal_node():
    c = curve([(1, 1, 0), (2, 0, 1), (3, 1, 0)], [(1, 2), (2, 3)])
    assert arithmetic_genus(c) == 3


def test_arithmetic_genus_rational_star_vs_euler():
    assert arithmetic_genus(STAR4) == 0
    trivial = BundleClass(rank=1, multidegree={i: 0 for i in STAR4.ids})
    assert euler_char_total(STAR4, trivial) == 1
    assert arithmetic_genus(STAR4) == 1 - euler_char_total(STAR4, trivial)


def test_prune_ordering_path3():
    o = prune_ordering(PATH3)
    assert o.perm == (1, 3, 2)
    assert o.nu == (3, 3)
    assert helpers.ordering_satisfies_one_branch(PATH3, o.perm)
    verify_ordering(PATH3, o)


def test_prune_ordering_single():
    c = curve([(1, 2, 0)], [])
    o = prune_ordering(c)
    assert o.perm == (1,)
    assert o.nu == ()
    assert o.g_sets == (frozenset({1}),)


def test_prune_ordering_star_leaves_first():
    o = prune_ordering(STAR4)
    assert o.perm == (1, 2, 3, 4)
    assert o.nu == (4, 4, 4)
    assert helpers.ordering_satisfies_one_branch(STAR4, o.perm)
    verify_ordering(STAR4, o)


def test_prune_ordering_stable():
    rng = random.Random(7)
    for _ in range(50):
        c = helpers.random_curve(rng, n_max=8)
        assert prune_ordering(c).perm == prune_ordering(c).perm


def test_prune_ordering_random_against_definition():
    rng = random.Random(42)
    for _ in range(500):
        c = helpers.random_curve(rng, n_max=8, genus_max=3)
        o = prune_ordering(c)
        assert helpers.ordering_satisfies_one_branch(c, o.perm)
        verify_ordering(c, o)
        for k in range(o.n):
            assert len(o.g_sets[k]) + len(o.b_sets[k]) == len(c.ids)


def test_genus_equals_one_minus_euler_random():
    rng = random.Random(99)
    for _ in range(500):
        c = helpers.random_curve(rng, n_max=8, genus_max=3)
        trivial = BundleClass(rank=1, multidegree={i: 0 for i in c.ids})
        assert arithmetic_genus(c) == 1 - euler_char_total(c, trivial)


def test_decompose_path3_first_position():
    o = prune_ordering(PATH3)
    g, b, node = decompose(PATH3, o, 1)
    assert g == frozenset({1})
    assert b == frozenset({2, 3})
    assert node == (1, 2)


def test_decompose_last_position_is_whole_curve():
    o = prune_ordering(PATH3)
    g, b, node = decompose(PATH3, o, 3)
    assert g == frozenset({1, 2, 3})
    assert b == frozenset()
    assert node is None


def test_decompose_star_leaf():
    o = prune_ordering(STAR4)
    g, b, node = decompose(STAR4, o, 1)
    assert g == frozenset({1})
    assert b == frozenset({2, 3, 4})
    assert node == (1, 4)


def test_decompose_matches_stored_sets():
    rng = random.Random(5)
    for _ in range(100):
        c = helpers.random_curve(rng, n_max=7)
        o = prune_ordering(c)
        for i in range(1, o.n + 1):
            g, b, _ = decompose(c, o, i)
            assert g == o.g_sets[i - 1]
            assert b == o.b_sets[i - 1]


def test_decompose_index_out_of_range():
    o = prune_ordering(PATH3)
    with pytest.raises(IndexOutOfRange):
        decompose(PATH3, o, 0)
    with pytest.raises(IndexOutOfRange):
        decompose(PATH3, o, 4)


def test_verify_ordering_rejects_swapped_positions():
    o = prune_ordering(PATH3)
    swapped = type(o)(perm=(2, 3, 1), nu=o.nu, g_sets=o.g_sets, b_sets=o.b_sets)
    with pytest.raises(OrderingMismatch):
        verify_ordering(PATH3, swapped)


def test_verify_ordering_rejects_wrong_curve():
    o = prune_ordering(PATH3)
    other = curve([(1, 0, 0), (2, 0, 0), (3, 0, 0)], [(1, 3), (3, 2)])
    with pytest.raises(OrderingMismatch):
        verify_ordering(other, o)
