"""Graph construction, set operations, and graph6 interchange."""

from __future__ import annotations

import random
from math import comb

import pytest

from trt.graph import (
    Graph,
    Graph6Error,
    MAX_ORDER,
    complement,
    complete,
    complete_bipartite,
    decode_graph6,
    disjoint_union,
    empty,
    encode_graph6,
    from_edges,
    near_regular_sequence,
)


def random_graph(rng: random.Random, n: int, density: float = 0.5) -> Graph:
    edges = [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < density]
    return from_edges(n, edges)


def test_complete_basics():
    assert complete(0).edge_count() == 0
    g = complete(4)
    assert g.edge_count() == 6
    assert g.degrees() == (3, 3, 3, 3)
    assert complete(9).edge_count() == 36 == comb(9, 2)


def test_complete_bipartite_basics():
    assert complete_bipartite(5, 5).edge_count() == 25
    g = complete_bipartite(0, 7)
    assert g.n == 7 and g.edge_count() == 0
    g = complete_bipartite(2, 3)
    assert not g.has_edge(0, 1) and not g.has_edge(2, 3)
    assert g.has_edge(0, 2) and g.has_edge(1, 4)


def test_disjoint_union_edges_add():
    g = disjoint_union(complete(5), complete(2))
    assert g.n == 7 and g.edge_count() == 11
    h = disjoint_union(complete(5), empty(0))
    assert h == complete(5)
    two_k5 = disjoint_union(complete(5), complete(5))
    assert two_k5.n == 10 and two_k5.edge_count() == 20


def test_complement_identities():
    assert complement(complete(6)) == empty(6)
    rng = random.Random(7)
    for n in (0, 1, 5, 9, 30, MAX_ORDER):
        g = random_graph(rng, n)
        assert complement(complement(g)) == g
        assert g.edge_count() + complement(g).edge_count() == comb(n, 2)
    assert complement(disjoint_union(complete(5), complete(5))) == complete_bipartite(5, 5)


def test_validation_rejects_bad_graphs():
    with pytest.raises(ValueError):
        Graph(2, (1, 0))  # asymmetric
    with pytest.raises(ValueError):
        Graph(2, (3, 1))  # loop at 0
    with pytest.raises(ValueError):
        Graph(1, (2,))  # neighbor bit beyond order
    with pytest.raises(ValueError):
        complete(MAX_ORDER + 1)
    with pytest.raises(ValueError):
        from_edges(3, [(0, 0)])
    with pytest.raises(AttributeError):
        complete(3).n = 4


def test_constructed_graphs_are_symmetric_irreflexive():
    rng = random.Random(11)
    for _ in range(25):
        g = random_graph(rng, rng.randrange(0, 12))
        for v in range(g.n):
            assert not (g.adj[v] >> v) & 1
            for u in g.neighbors(v):
                assert g.has_edge(u, v) and g.has_edge(v, u)
        assert sum(g.degrees()) % 2 == 0


def test_binomial_split_inequalities():
    # Arithmetic backing the clique-union optimality: merging two small
    # cliques into one (or into K_{n-1} plus remainder) strictly gains edges.
    for n in range(3, 41):
        for n1 in range(1, n - 1):
            for n2 in range(1, n - 1):
                lhs = comb(n1, 2) + comb(n2, 2)
                if n1 + n2 < n:
                    assert lhs < comb(n1 + n2, 2)
                else:
                    assert lhs < comb(n - 1, 2) + comb(n1 + n2 - n + 1, 2)


# --- graph6 ----------------------------------------------------------------


def reference_encode(g: Graph) -> str:
    """Independent string-based graph6 encoder used as the round-trip oracle."""
    bits = "".join(
        "1" if g.has_edge(i, j) else "0" for j in range(g.n) for i in range(j)
    )
    bits += "0" * (-len(bits) % 6)
    if g.n <= 62:
        head = chr(g.n + 63)
    else:
        head = "~" + "".join(chr(((g.n >> s) & 63) + 63) for s in (12, 6, 0))
    return head + "".join(chr(int(bits[i:i + 6], 2) + 63) for i in range(0, len(bits), 6))


def test_graph6_base_cases():
    assert encode_graph6(empty(0)) == "?"
    assert decode_graph6("?") == empty(0)
    assert encode_graph6(complete(3)) == "Bw"
    assert decode_graph6("Bw") == complete(3)


@pytest.mark.parametrize("n", [1, 2, 5, 13, 32, 62, 63, 100, 128])
def test_graph6_round_trip_matches_reference(n):
    rng = random.Random(n)
    for density in (0.1, 0.5, 0.9):
        g = random_graph(rng, n, density)
        line = encode_graph6(g)
        assert line == reference_encode(g)
        assert decode_graph6(line) == g


def test_graph6_decode_error_offsets():
    with pytest.raises(Graph6Error) as err:
        decode_graph6("")
    assert err.value.offset == 0
    with pytest.raises(Graph6Error) as err:
        decode_graph6("B")  # order 3 needs one body byte
    assert err.value.offset == 1
    with pytest.raises(Graph6Error) as err:
        decode_graph6("Bww")  # extra byte
    assert err.value.offset == 2
    with pytest.raises(Graph6Error) as err:
        decode_graph6("B" + chr(30))  # byte below 63
    assert err.value.offset == 1
    with pytest.raises(Graph6Error) as err:
        decode_graph6("A" + chr(63 + 0b010000))  # order 2: second bit is padding
    assert err.value.offset == 1
    with pytest.raises(Graph6Error):
        decode_graph6("~~")  # huge-order form: beyond the supported cap
    with pytest.raises(Graph6Error):
        decode_graph6(encode_graph6(complete(1)).replace("@", "~"))


def test_graph6_padding_must_be_zero():
    line = encode_graph6(complete(3))  # "Bw": three edge bits, three padding bits
    broken = line[:-1] + chr(((ord(line[-1]) - 63) | 0b010) + 63)
    with pytest.raises(Graph6Error):
        decode_graph6(broken)


def test_graph6_accepts_header_and_newline():
    g = complete(5)
    assert decode_graph6(">>graph6<<" + encode_graph6(g)) == g
    assert decode_graph6(encode_graph6(g) + "\n") == g


def test_near_regular_sequence():
    assert near_regular_sequence(5, 0) == (0, 0, 0, 0, 0)
    assert near_regular_sequence(7, 3) == (3, 3, 3, 3, 3, 3, 2)
    assert near_regular_sequence(9, 4) == (4,) * 9
    with pytest.raises(ValueError):
        near_regular_sequence(4, 4)
