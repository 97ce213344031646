"""The six parametric tree families, built with their defining vertex labels.

Families (order n, vertices v0..v_{n-1}):
  path    P_n:        v0-v1-...-v_{n-1}
  star    K_{1,n-1}:  hub v0 joined to every other vertex
  tprime  the unique n-vertex tree with maximum degree n-2
          (star with one edge subdivided): hub v0 joined to v1..v_{n-2},
          pendant edge v_{n-2}v_{n-1}
  tstar   hub v0 joined to v1..v_{n-3}, path v_{n-3}-v_{n-2}-v_{n-1}
  t1      hub v0 joined to v1..v_{n-3}, pendant edges v_{n-4}v_{n-2}
          and v_{n-3}v_{n-1} (two distinct hub neighbors extended)
  t2      hub v0 joined to v1..v_{n-3}, pendant edges v_{n-3}v_{n-2}
          and v_{n-3}v_{n-1} (one hub neighbor extended twice)

Keeping these exact labelings means embeddings reported by the containment
module can be read back against the defining edge lists.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .graph import Graph, from_edges

FAMILIES = ("path", "star", "tprime", "tstar", "t1", "t2")

MIN_ORDER = {"path": 1, "star": 2, "tprime": 4, "tstar": 4, "t1": 5, "t2": 5}


@dataclass(frozen=True)
class TreeSpec:
    """A named tree family plus its order."""

    family: str
    n: int

    def __post_init__(self):
        if self.family not in FAMILIES:
            raise ValueError(f"unknown tree family {self.family!r}; choose from {FAMILIES}")
        if self.n < MIN_ORDER[self.family]:
            raise ValueError(
                f"family {self.family!r} needs order >= {MIN_ORDER[self.family]}, got {self.n}"
            )

    def label(self) -> str:
        return f"{self.family}:{self.n}"


def parse_tree_spec(text: str) -> TreeSpec:
    """Parse 'family:N' (as used on the command line) into a TreeSpec."""
    head, sep, tail = text.partition(":")
    if not sep:
        raise ValueError(f"expected FAMILY:N, got {text!r}")
    try:
        n = int(tail)
    except ValueError:
        raise ValueError(f"expected integer order in {text!r}") from None
    return TreeSpec(head.strip().lower(), n)


@lru_cache(maxsize=None)
def make_tree(spec: TreeSpec) -> Graph:
    """Build the explicit tree for a family spec; raises for orders below the minimum."""
    n = spec.n
    fam = spec.family
    if fam == "path":
        edges = [(i, i + 1) for i in range(n - 1)]
    elif fam == "star":
        edges = [(0, i) for i in range(1, n)]
    elif fam == "tprime":
        edges = [(0, i) for i in range(1, n - 1)] + [(n - 2, n - 1)]
    elif fam == "tstar":
        edges = [(0, i) for i in range(1, n - 2)] + [(n - 3, n - 2), (n - 2, n - 1)]
    elif fam == "t1":
        edges = [(0, i) for i in range(1, n - 2)] + [(n - 4, n - 2), (n - 3, n - 1)]
    else:  # t2
        edges = [(0, i) for i in range(1, n - 2)] + [(n - 3, n - 2), (n - 3, n - 1)]
    tree = from_edges(n, edges)
    assert tree.edge_count() == n - 1
    return tree


def tree_max_degree(spec: TreeSpec) -> int:
    return max(make_tree(spec).degrees()) if spec.n > 1 else 0
