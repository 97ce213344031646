"""The six tree families: shapes, degrees, and labels."""

from __future__ import annotations

import pytest

from trt.containment import contains_subgraph, is_connected, max_degree
from trt.trees import FAMILIES, MIN_ORDER, TreeSpec, make_tree, parse_tree_spec, tree_max_degree


@pytest.mark.parametrize("family", FAMILIES)
def test_every_family_output_is_a_tree(family):
    for n in range(MIN_ORDER[family], 20):
        t = make_tree(TreeSpec(family, n))
        assert t.n == n
        assert t.edge_count() == n - 1
        assert is_connected(t)
        assert sum(t.degrees()) == 2 * (n - 1)


def test_family_max_degrees():
    for n in range(3, 20):
        assert tree_max_degree(TreeSpec("path", n)) == 2
    for n in range(3, 20):
        assert tree_max_degree(TreeSpec("star", n)) == n - 1
    for n in range(4, 20):
        assert tree_max_degree(TreeSpec("tprime", n)) == n - 2
    for n in range(6, 20):
        assert tree_max_degree(TreeSpec("tstar", n)) == n - 3
        assert tree_max_degree(TreeSpec("t1", n)) == n - 3
        assert tree_max_degree(TreeSpec("t2", n)) == n - 3


def test_minimum_orders_enforced():
    for family, lo in MIN_ORDER.items():
        with pytest.raises(ValueError):
            TreeSpec(family, lo - 1)
        TreeSpec(family, lo)
    with pytest.raises(ValueError):
        TreeSpec("wheel", 5)


def test_t1_labeling_pins_hub_and_pendants():
    for n in range(6, 14):
        t = make_tree(TreeSpec("t1", n))
        assert t.degree(0) == n - 3
        assert t.has_edge(n - 4, n - 2) and t.has_edge(n - 3, n - 1)
        assert t.degree(n - 4) == 2 and t.degree(n - 3) == 2


def test_t2_labeling_pins_hub_and_double_pendant():
    for n in range(6, 14):
        t = make_tree(TreeSpec("t2", n))
        assert t.degree(0) == n - 3
        assert t.has_edge(n - 3, n - 2) and t.has_edge(n - 3, n - 1)
        assert t.degree(n - 3) == 3


def test_t2_degree_sequence_at_order_8():
    t = make_tree(TreeSpec("t2", 8))
    assert tuple(sorted(t.degrees(), reverse=True)) == (5, 3, 1, 1, 1, 1, 1, 1)


def _mutually_contain(a, b):
    return contains_subgraph(a, b) is not None and contains_subgraph(b, a) is not None


def test_small_order_coincidences():
    # At order 5 the two-pendant families collapse onto the path and the
    # subdivided star; equal order + mutual containment pins isomorphism.
    assert _mutually_contain(make_tree(TreeSpec("t1", 5)), make_tree(TreeSpec("path", 5)))
    assert _mutually_contain(make_tree(TreeSpec("t2", 5)), make_tree(TreeSpec("tprime", 5)))
    assert _mutually_contain(make_tree(TreeSpec("tstar", 5)), make_tree(TreeSpec("path", 5)))


def test_t1_t2_not_isomorphic_from_order_7():
    for n in range(7, 16):
        d1 = sorted(make_tree(TreeSpec("t1", n)).degrees())
        d2 = sorted(make_tree(TreeSpec("t2", n)).degrees())
        assert d1 != d2
        assert d2.count(3) >= 1 and d1.count(2) == 2


def test_parse_tree_spec():
    assert parse_tree_spec("t1:12") == TreeSpec("t1", 12)
    assert parse_tree_spec("STAR:5") == TreeSpec("star", 5)
    with pytest.raises(ValueError):
        parse_tree_spec("t1")
    with pytest.raises(ValueError):
        parse_tree_spec("t1:x")
    with pytest.raises(ValueError):
        parse_tree_spec("t9:5")


def test_make_tree_is_cached_and_pure():
    a = make_tree(TreeSpec("t1", 9))
    b = make_tree(TreeSpec("t1", 9))
    assert a is b
    assert max_degree(a) == 6
