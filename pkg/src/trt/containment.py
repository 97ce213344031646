"""Tree-in-graph containment: the verification kernel for witnesses and oracles.

Containment is subgraph containment (not induced).  The matcher anchors the
search at the tree's maximum-degree vertex, filters host candidates by degree,
and orders children by decreasing subtree size, so the big-hub trees this
package cares about are accepted or refuted after very little branching.
Candidates are tried in ascending vertex order and the first embedding found
is returned, making every answer deterministic.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .graph import Graph


@dataclass(frozen=True)
class Embedding:
    """Injective map tree-vertex -> host-vertex preserving tree edges."""

    mapping: tuple[int, ...]

    def is_valid(self, host: Graph, tree: Graph) -> bool:
        m = self.mapping
        if len(m) != tree.n or len(set(m)) != len(m):
            return False
        if any(not 0 <= v < host.n for v in m):
            return False
        return all(host.has_edge(m[u], m[v]) for u, v in tree.edges())


def max_degree(g: Graph) -> int:
    """Maximum vertex degree; 0 for empty or edgeless graphs."""
    return max((row.bit_count() for row in g.adj), default=0)


def is_connected(g: Graph) -> bool:
    """Reachability from vertex 0; vacuously true for order <= 1."""
    return _is_connected_rows(g.n, g.adj)


def _is_connected_rows(n: int, rows: Sequence[int]) -> bool:
    if n <= 1:
        return True
    seen = 1
    frontier = 1
    while frontier:
        reach = 0
        m = frontier
        while m:
            v = (m & -m).bit_length() - 1
            reach |= rows[v]
            m &= m - 1
        frontier = reach & ~seen
        seen |= frontier
    return seen == (1 << n) - 1


class TreeMatcher:
    """Precompiled backtracking matcher for one tree pattern.

    Compiling once and probing many hosts is the hot path of the enumeration
    oracle, so `found_in` works on raw (n, adjacency rows) pairs.  Two prunes
    keep refutation cheap on the structured hosts this package builds: the
    anchor is only tried inside host components large enough to hold the
    tree, and siblings whose subtrees are isomorphic must receive ascending
    host images (any embedding can be permuted into that normal form, so no
    embedding is lost).
    """

    def __init__(self, tree: Graph):
        if tree.n < 1 or tree.edge_count() != tree.n - 1 or not is_connected(tree):
            raise ValueError("pattern is not a tree")
        self.tree = tree
        k = tree.n
        degs = tree.degrees()
        root = max(range(k), key=lambda v: (degs[v], -v))

        parent = [-1] * k
        bfs = [root]
        seen = 1 << root
        for v in bfs:
            m = tree.adj[v] & ~seen
            while m:
                u = (m & -m).bit_length() - 1
                seen |= 1 << u
                parent[u] = v
                bfs.append(u)
                m &= m - 1
        size = [1] * k
        shape: dict[int, tuple] = {}
        for v in reversed(bfs):
            if parent[v] >= 0:
                size[parent[v]] += size[v]
            kids = sorted(shape[u] for u in range(k) if parent[u] == v)
            shape[v] = tuple(kids)
        children: list[list[int]] = [[] for _ in range(k)]
        for v in bfs[1:]:
            children[parent[v]].append(v)
        for v in range(k):
            children[v].sort(key=lambda u: (-size[u], shape[u], u))

        order = []
        stack = [root]
        while stack:
            v = stack.pop()
            order.append(v)
            stack.extend(reversed(children[v]))

        pos = {v: i for i, v in enumerate(order)}
        # For each vertex, the preceding sibling with an isomorphic subtree
        # (if any): its image must stay below ours.  chain_rest counts the
        # vertex itself plus its later isomorphic siblings: all their roots
        # draw distinct images from the current candidate pool, so a pool
        # smaller than the chain cannot complete and is cut immediately.
        sym_prev = [-1] * k
        chain_rest = [1] * k
        for v in range(k):
            groups: dict[tuple, list[int]] = {}
            for u in children[v]:
                groups.setdefault(shape[u], []).append(u)
            for members in groups.values():
                for i, u in enumerate(members):
                    if i > 0:
                        sym_prev[pos[u]] = pos[members[i - 1]]
                    chain_rest[pos[u]] = len(members) - i

        self.order = order
        self.parent_pos = [-1] + [pos[parent[v]] for v in order[1:]]
        self.tdeg = [degs[v] for v in order]
        self.sym_prev = sym_prev
        self.chain_rest = chain_rest
        self.k = k

    def find_in(self, n: int, rows: Sequence[int]) -> tuple[int, ...] | None:
        """First embedding as a tree-vertex -> host-vertex tuple, or None."""
        k = self.k
        if k > n:
            return None
        tdeg = self.tdeg
        parent_pos = self.parent_pos
        sym_prev = self.sym_prev
        chain_rest = self.chain_rest
        degs = [row.bit_count() for row in rows]
        degmask: dict[int, int] = {}
        for t in set(tdeg):
            m = 0
            for v in range(n):
                if degs[v] >= t:
                    m |= 1 << v
            degmask[t] = m

        # Anchor only inside components that can hold the whole tree.
        roots_ok = 0
        unseen = (1 << n) - 1
        while unseen:
            start = unseen & -unseen
            comp = start
            frontier = start
            while frontier:
                reach = 0
                m = frontier
                while m:
                    reach |= rows[(m & -m).bit_length() - 1]
                    m &= m - 1
                frontier = reach & ~comp
                comp |= frontier
            if comp.bit_count() >= k:
                roots_ok |= comp
            unseen &= ~comp

        img = [0] * k
        cand = [0] * k
        used = [0] * (k + 1)
        cand[0] = degmask[tdeg[0]] & roots_ok
        d = 0
        while True:
            m = cand[d]
            if m == 0 or (chain_rest[d] > 1 and m.bit_count() < chain_rest[d]):
                cand[d] = 0
                d -= 1
                if d < 0:
                    return None
                continue
            bit = m & -m
            cand[d] = m ^ bit
            img[d] = bit.bit_length() - 1
            if d == k - 1:
                mapping = [0] * k
                for i, v in enumerate(self.order):
                    mapping[v] = img[i]
                return tuple(mapping)
            used[d + 1] = used[d] | bit
            d += 1
            c = rows[img[parent_pos[d]]] & ~used[d] & degmask[tdeg[d]]
            sp = sym_prev[d]
            if sp >= 0:
                c &= -(1 << (img[sp] + 1))
            cand[d] = c

    def found_in(self, n: int, rows: Sequence[int]) -> bool:
        return self.find_in(n, rows) is not None


def contains_subgraph(host: Graph, tree: Graph) -> Embedding | None:
    """Embedding of `tree` in `host` if one exists, else None.

    Raises ValueError("pattern is not a tree") for non-tree patterns.
    """
    found = TreeMatcher(tree).find_in(host.n, host.adj)
    return Embedding(found) if found is not None else None
