"""Witness realization: degree sequences, representations, verified graphs."""

from __future__ import annotations

import pytest

from trt.containment import contains_subgraph, max_degree
from trt.graph import (
    CliquePart,
    DegreeSeqPart,
    WitnessDescriptor,
    complete,
    encode_graph6,
)
from trt.ramsey import ramsey_value
from trt.trees import TreeSpec, make_tree
from trt.turan import ex_value
from trt.witness import (
    extremal_witness,
    frobenius_rep,
    havel_hakimi,
    near_regular,
    ramsey_witness,
    realize_witness,
)


def test_havel_hakimi_examples():
    g = havel_hakimi((3, 3, 3, 3))
    assert g == complete(4)
    g = havel_hakimi((2, 2, 2))
    assert g.degrees() == (2, 2, 2)
    with pytest.raises(ValueError):
        havel_hakimi((3, 1))
    with pytest.raises(ValueError):
        havel_hakimi((1, 1, 1))
    with pytest.raises(ValueError):
        havel_hakimi((3, 3, 1, 1))


def test_near_regular_contract_full_grid():
    for p in range(2, 61):
        for d in range(0, p):
            g = near_regular(p, d)
            assert g.edge_count() == d * p // 2
            assert max_degree(g) == d
            degs = sorted(g.degrees())
            if d > 0:
                assert degs[0] >= d - 1 and degs[-1] == d


def test_near_regular_examples():
    g = near_regular(9, 4)
    assert g.edge_count() == 18 and g.degrees() == (4,) * 9
    g = near_regular(7, 3)
    assert g.edge_count() == 10 and sorted(g.degrees()) == [2, 3, 3, 3, 3, 3, 3]
    assert near_regular(5, 0).edge_count() == 0
    with pytest.raises(ValueError):
        near_regular(5, 5)


def test_no_star_above_cap():
    for p, d in [(9, 4), (12, 5), (20, 7)]:
        g = near_regular(p, d)
        assert contains_subgraph(g, make_tree(TreeSpec("star", d + 2))) is None


def test_frobenius_examples():
    assert frobenius_rep(3, 5, 8) == (1, 1)
    assert frobenius_rep(1, 7, 5) == (5, 0)
    assert frobenius_rep(2, 3, 1) is None
    assert frobenius_rep(4, 6, 9) is None  # gcd 2, odd target
    assert frobenius_rep(6, 5, 20) == (0, 4)
    with pytest.raises(ValueError):
        frobenius_rep(0, 3, 5)


def test_frobenius_smallest_x_first():
    rep = frobenius_rep(5, 3, 30)
    assert rep == (0, 10)
    rep = frobenius_rep(5, 3, 29)
    assert rep == (1, 8)


def test_realize_witness_is_deterministic_and_ordered():
    desc = WitnessDescriptor(parts=(CliquePart(5), CliquePart(3), DegreeSeqPart((2, 2, 2))))
    a = realize_witness(desc)
    b = realize_witness(desc)
    assert encode_graph6(a) == encode_graph6(b)
    assert a.n == 11 and a.edge_count() == 10 + 3 + 3
    # components appear in descriptor order: K5 on 0..4, K3 on 5..7, cycle after
    assert a.has_edge(0, 4) and a.has_edge(5, 7) and not a.has_edge(4, 5)


def test_realize_complemented():
    desc = WitnessDescriptor(parts=(CliquePart(4), CliquePart(4)), complemented=True)
    g = realize_witness(desc)
    assert g.n == 8 and g.edge_count() == 16
    assert max_degree(g) == 4


def test_extremal_witness_examples():
    g, desc = extremal_witness(TreeSpec("t1", 10), 13)
    assert g.edge_count() == 42 and desc.label() == "K9 + K4"
    g, desc = extremal_witness(TreeSpec("t1", 20), 24)
    assert g.edge_count() == 192
    assert desc.parts == (DegreeSeqPart((16,) * 24),)
    g, _ = extremal_witness(TreeSpec("path", 5), 7)
    assert g.edge_count() == 9
    assert contains_subgraph(g, make_tree(TreeSpec("path", 5))) is None


def test_extremal_witness_matches_value_spot_grid():
    for fam in ("t1", "t2", "path", "star", "tprime"):
        for n in (6, 11, 17):
            for p in (n - 1, n, 2 * n - 5, 3 * n):
                g, _ = extremal_witness(TreeSpec(fam, n), p)
                assert g.edge_count() == ex_value(TreeSpec(fam, n), p).value
                assert g.n == p


def test_ramsey_witness_requires_construction():
    ans = ramsey_value(TreeSpec("path", 2), TreeSpec("t1", 8))
    assert ans.kind == "unknown" and ans.witness is None
    with pytest.raises(ValueError):
        ramsey_witness(ans)


def test_unknown_answers_still_carry_verified_floor_witnesses():
    ans = ramsey_value(TreeSpec("t1", 13), TreeSpec("t1", 13))
    assert ans.kind == "unknown" and ans.lo == 19
    g, _ = ramsey_witness(ans)
    assert g.n == 18


def test_ramsey_witness_rejects_bad_recipe():
    good = ramsey_value(TreeSpec("t1", 12), TreeSpec("t2", 12))
    from dataclasses import replace

    # right order but the wrong graph: K_17 contains both trees
    bogus = replace(good, witness=WitnessDescriptor(parts=(CliquePart(17),)))
    with pytest.raises(RuntimeError, match="witness verification failed"):
        ramsey_witness(bogus)
    # wrong order
    bogus = replace(good, witness=WitnessDescriptor(parts=(CliquePart(5),)))
    with pytest.raises(RuntimeError, match="witness verification failed"):
        ramsey_witness(bogus)


def test_two_denomination_clique_witness():
    # m+n-4 = 20 splits as 0*(m-1) + 4*(m-2): four 5-cliques on 20 vertices
    ans = ramsey_value(TreeSpec("t1", 7), TreeSpec("star", 17))
    assert ans.kind == "exact" and ans.value == 21
    g, desc = ramsey_witness(ans)
    assert desc.label() == "K5 + K5 + K5 + K5" and g.n == 20


def test_ramsey_witness_verifies_both_sides():
    ans = ramsey_value(TreeSpec("t1", 8), TreeSpec("tprime", 8))
    g, desc = ramsey_witness(ans)
    assert g.n == 10 and desc.label() == "K5 + K5"
    from trt.graph import complement

    assert contains_subgraph(g, make_tree(TreeSpec("t1", 8))) is None
    assert contains_subgraph(complement(g), make_tree(TreeSpec("tprime", 8))) is None
