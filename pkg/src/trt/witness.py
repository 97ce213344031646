"""Realize and verify witness graphs: extremal graphs, lower-bound graphs,
near-regular realizations, and two-denomination representations.

Every witness emitted by this module is machine-verified before it is
returned: an extremal witness must hit the closed-form edge count and pass a
tree-freeness check, and a lower-bound witness must be free of the left tree
while its complement is free of the right tree.  Verification failure raises
rather than emitting an unverified graph.
"""

from __future__ import annotations

from typing import Sequence, TYPE_CHECKING

from .containment import contains_subgraph
from .graph import (
    CliquePart,
    Graph,
    WitnessDescriptor,
    complement,
    complete,
    disjoint_union,
    empty,
    near_regular_sequence,
)
from .trees import TreeSpec, make_tree
from .turan import ExResult, ex_value

if TYPE_CHECKING:  # pragma: no cover
    from .ramsey import RamseyAnswer


def havel_hakimi(degrees: Sequence[int]) -> Graph:
    """Greedy largest-degree-first realization of a degree sequence.

    Deterministic: ties break toward the smaller vertex label, so a given
    sequence always realizes to the same labeled graph.  Raises ValueError if
    the sequence is not graphical.
    """
    n = len(degrees)
    remaining = list(degrees)
    if any(d < 0 or d >= n for d in remaining):
        raise ValueError(f"degree sequence out of range for order {n}")
    if sum(remaining) % 2 != 0:
        raise ValueError("degree sequence has odd sum")
    rows = [0] * n
    for _ in range(n):
        u = max(range(n), key=lambda v: (remaining[v], -v))
        d = remaining[u]
        if d == 0:
            break
        remaining[u] = 0
        targets = sorted(
            (v for v in range(n) if v != u and not (rows[u] >> v) & 1),
            key=lambda v: (-remaining[v], v),
        )[:d]
        if len(targets) < d or remaining[targets[-1]] <= 0:
            raise ValueError("degree sequence is not graphical")
        for v in targets:
            rows[u] |= 1 << v
            rows[v] |= 1 << u
            remaining[v] -= 1
    return Graph(n, rows)


def near_regular(p: int, d: int) -> Graph:
    """Graph on p vertices with max degree d and floor(d*p/2) edges.

    All degrees equal d except one vertex of degree d-1 when d*p is odd, so
    the output never contains a star with d+1 leaves.
    """
    if not 0 <= d < p:
        raise ValueError(f"near_regular needs 0 <= d < p, got d={d}, p={p}")
    g = havel_hakimi(near_regular_sequence(p, d))
    assert g.edge_count() == d * p // 2
    return g


def realize_witness(desc: WitnessDescriptor) -> Graph:
    """Deterministically realize a symbolic descriptor as a labeled graph."""
    g = empty(0)
    for part in desc.parts:
        if isinstance(part, CliquePart):
            piece = complete(part.order)
        else:
            piece = havel_hakimi(part.degrees)
        g = disjoint_union(g, piece)
    return complement(g) if desc.complemented else g


def frobenius_rep(a: int, b: int, t: int) -> tuple[int, int] | None:
    """Nonnegative (x, y) with a*x + b*y = t, smallest x first; None if impossible.

    A representation always exists when gcd(a,b) = 1 and t >= (a-1)(b-1).
    """
    if a < 1 or b < 1:
        raise ValueError(f"denominations must be >= 1, got a={a}, b={b}")
    if t < 0:
        return None
    for x in range(t // a + 1):
        rem = t - a * x
        if rem % b == 0:
            return (x, rem // b)
    return None


def extremal_witness(spec: TreeSpec, p: int) -> tuple[Graph, WitnessDescriptor]:
    """Realize the extremal construction for ex(p; family) and verify it.

    The returned graph has exactly the closed-form edge count and is certified
    free of the family tree by the containment engine.
    """
    res: ExResult = ex_value(spec, p)
    g = realize_witness(res.witness)
    if g.n != p:
        raise RuntimeError(
            f"witness verification failed: order {g.n} != {p} for {spec.label()}"
        )
    if g.edge_count() != res.value:
        raise RuntimeError(
            f"witness verification failed: {g.edge_count()} edges, expected "
            f"{res.value} for {spec.label()} at p={p}"
        )
    if contains_subgraph(g, make_tree(spec)) is not None:
        raise RuntimeError(
            f"witness verification failed: witness contains {spec.label()} at p={p}"
        )
    return g, res.witness


def verify_two_sided(g: Graph, left: TreeSpec, right: TreeSpec) -> bool:
    """True iff g has no copy of the left tree and complement(g) none of the right."""
    if contains_subgraph(g, make_tree(left)) is not None:
        return False
    return contains_subgraph(complement(g), make_tree(right)) is None


def ramsey_witness(answer: "RamseyAnswer") -> tuple[Graph, WitnessDescriptor]:
    """Realize the lower-bound witness attached to a fired rule and verify it.

    The graph sits on (lower bound - 1) vertices, is free of the left tree,
    and its complement is free of the right tree; both checks run before the
    graph is returned.
    """
    if answer.witness is None:
        raise ValueError(
            f"no witness construction for rule {answer.rule!r} on "
            f"({answer.left.label()}, {answer.right.label()})"
        )
    bound = answer.value if answer.kind == "exact" else answer.lo
    if bound is None:
        raise ValueError("answer carries no lower bound to witness")
    g = realize_witness(answer.witness)
    if g.n != bound - 1:
        raise RuntimeError(
            f"witness verification failed: order {g.n} != {bound - 1} for rule "
            f"{answer.rule!r}"
        )
    left_hit = contains_subgraph(g, make_tree(answer.left))
    if left_hit is not None:
        raise RuntimeError(
            f"witness verification failed: contains {answer.left.label()} "
            f"(rule {answer.rule!r})"
        )
    right_hit = contains_subgraph(complement(g), make_tree(answer.right))
    if right_hit is not None:
        raise RuntimeError(
            f"witness verification failed: complement contains "
            f"{answer.right.label()} (rule {answer.rule!r})"
        )
    return g, answer.witness


__all__ = [
    "havel_hakimi",
    "near_regular",
    "realize_witness",
    "frobenius_rep",
    "extremal_witness",
    "verify_two_sided",
    "ramsey_witness",
]
