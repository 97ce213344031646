"""Ground truth at desk scale: isomorphism-free graph enumeration, exact
extremal edge counts by exhaustive search, and exhaustive arrowing checks.

Enumeration is by vertex extension with canonical deduplication: order-q
representatives are extended by one vertex in every possible way, and a
candidate survives only if no isomorphic graph was kept before (two-round
color refinement buckets candidates; exact isomorphism tests settle bucket
collisions).  Tree-freeness is hereditary under vertex deletion, so the
enumeration can be restricted to tree-free graphs at every level without
losing completeness, and the extremal search adds a branch-and-bound cut:
a partial graph is dropped once even completing it with maximum-degree
vertices cannot beat the incumbent.

Budgets are hard errors, never silent truncation: a partial search result is
never reported as truth.
"""

from __future__ import annotations

import time
from dataclasses import dataclass

from .containment import TreeMatcher, _is_connected_rows
from .graph import Graph, encode_graph6

DEFAULT_MAX_ORDER = 9
DEFAULT_MAX_COLORING_ORDER = 8


class BudgetExceededError(RuntimeError):
    """An oracle cap (order or wall clock) was exceeded before completion."""


@dataclass(frozen=True)
class OracleBudget:
    max_order: int = DEFAULT_MAX_ORDER
    max_coloring_order: int = DEFAULT_MAX_COLORING_ORDER
    time_limit: float | None = None  # seconds of wall clock


class _Deadline:
    __slots__ = ("until", "ticks")

    def __init__(self, limit: float | None):
        self.until = time.monotonic() + limit if limit is not None else None
        self.ticks = 0

    def tick(self):
        self.ticks += 1
        if self.until is not None and self.ticks % 1024 == 0:
            if time.monotonic() > self.until:
                raise BudgetExceededError("time limit exceeded")


# ---------------------------------------------------------------------------
# Canonical deduplication: refinement-based invariant + exact iso test.
# ---------------------------------------------------------------------------


def _signatures(n: int, rows: tuple[int, ...]) -> list[tuple]:
    """Per-vertex (degree, sorted neighbor degrees): comparable across graphs."""
    degs = [r.bit_count() for r in rows]
    out = []
    for v in range(n):
        m = rows[v]
        s = []
        while m:
            s.append(degs[(m & -m).bit_length() - 1])
            m &= m - 1
        s.sort()
        out.append((degs[v], tuple(s)))
    return out


def _invariant_key(n: int, rows: tuple[int, ...], sigs: list[tuple]) -> tuple:
    # One more refinement round over compressed round-1 colors, plus the
    # per-vertex triangle incidence; iso-invariant, cheap, and sharp enough
    # that bucket collisions are almost always true duplicates.
    relabel = {s: i for i, s in enumerate(sorted(set(sigs)))}
    colors = [relabel[s] for s in sigs]
    out = []
    for v in range(n):
        rv = rows[v]
        m = rv
        s = []
        tri = 0
        while m:
            u = (m & -m).bit_length() - 1
            s.append(colors[u])
            tri += (rv & rows[u]).bit_count()
            m &= m - 1
        s.sort()
        out.append((colors[v], tri, tuple(s)))
    out.sort()
    return tuple(out)


def _isomorphic(n: int, rows_a: tuple[int, ...], sigs_a: list[tuple],
                rows_b: tuple[int, ...], sigs_b: list[tuple]) -> bool:
    if n <= 1:
        return True
    class_size: dict[tuple, int] = {}
    for s in sigs_a:
        class_size[s] = class_size.get(s, 0) + 1
    order_a = sorted(range(n), key=lambda v: (class_size[sigs_a[v]], sigs_a[v], v))
    by_color: dict[tuple, list[int]] = {}
    for w in range(n):
        by_color.setdefault(sigs_b[w], []).append(w)

    images: list[int] = []

    def backtrack(i: int, used: int) -> bool:
        if i == n:
            return True
        a = order_a[i]
        row_a = rows_a[a]
        for b in by_color.get(sigs_a[a], ()):
            if (used >> b) & 1:
                continue
            ok = True
            for j in range(i):
                if ((row_a >> order_a[j]) & 1) != ((rows_b[b] >> images[j]) & 1):
                    ok = False
                    break
            if ok:
                images.append(b)
                if backtrack(i + 1, used | (1 << b)):
                    return True
                images.pop()
        return False

    return backtrack(0, 0)


def _extend(rows: tuple[int, ...], q: int, mask: int) -> tuple[int, ...]:
    return tuple(rows[r] | (((mask >> r) & 1) << q) for r in range(q)) + (mask,)


def _edge_count(rows: tuple[int, ...]) -> int:
    return sum(r.bit_count() for r in rows) // 2


def _levels(p: int, keep=None, deadline: _Deadline | None = None) -> list[list[tuple[int, ...]]]:
    """Canonical representatives for every order 0..p, optionally restricted.

    `keep(order, rows)` must define a class closed under vertex deletion;
    it is applied to every candidate before deduplication.
    """
    deadline = deadline or _Deadline(None)
    levels: list[list[tuple[int, ...]]] = [[()]]
    for q in range(p):
        nxt: list[tuple[int, ...]] = []
        buckets: dict[tuple, list[tuple[tuple[int, ...], list[tuple]]]] = {}
        for rows in levels[q]:
            for mask in range(1 << q):
                deadline.tick()
                cand = _extend(rows, q, mask)
                if keep is not None and not keep(q + 1, cand):
                    continue
                sigs = _signatures(q + 1, cand)
                key = _invariant_key(q + 1, cand, sigs)
                bucket = buckets.get(key)
                if bucket is None:
                    buckets[key] = [(cand, sigs)]
                    nxt.append(cand)
                elif not any(
                    _isomorphic(q + 1, cand, sigs, old, old_sigs)
                    for old, old_sigs in bucket
                ):
                    bucket.append((cand, sigs))
                    nxt.append(cand)
        levels.append(nxt)
    return levels


def canonical_graphs(p: int, avoiding: Graph | None = None,
                     budget: OracleBudget | None = None) -> list[Graph]:
    """One representative per isomorphism class of order p, optionally
    restricted to graphs containing no copy of `avoiding` (a tree)."""
    budget = budget or OracleBudget()
    if p > budget.max_order:
        raise BudgetExceededError(f"order {p} exceeds cap {budget.max_order}")
    deadline = _Deadline(budget.time_limit)
    keep = None
    if avoiding is not None:
        matcher = TreeMatcher(avoiding)
        keep = lambda n, rows: not matcher.found_in(n, rows)
    return [Graph(p, rows) for rows in _levels(p, keep, deadline)[p]]


def count_graphs(p: int, budget: OracleBudget | None = None) -> int:
    """Number of isomorphism classes of order p (self-check constant)."""
    return len(canonical_graphs(p, None, budget))


# ---------------------------------------------------------------------------
# Exhaustive extremal edge counts.
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class OracleExResult:
    p: int
    value: int
    connected_only: bool
    witness: Graph

    def to_json(self) -> dict:
        return {
            "p": self.p,
            "value": self.value,
            "connected_only": self.connected_only,
            "witness": encode_graph6(self.witness),
        }


def _addable(q: int, p: int) -> int:
    # Max edges the remaining p-q vertex insertions can contribute.
    return (p - 1 + q) * (p - q) // 2


def ex_oracle(p: int, tree: Graph, connected_only: bool = False,
              budget: OracleBudget | None = None,
              edge_hint: int | None = None) -> OracleExResult:
    """Exact maximum edges over all (optionally connected) order-p graphs with
    no copy of `tree`, plus one maximizer.

    `edge_hint` seeds the branch-and-bound incumbent (typically the closed
    form minus one).  The seed only prunes: if nothing beats it, the search
    reruns unseeded, so the reported value never depends on the hint.
    """
    budget = budget or OracleBudget()
    if p > budget.max_order:
        raise BudgetExceededError(f"order {p} exceeds cap {budget.max_order}")
    if tree.n < 2:
        raise ValueError("tree must have at least 2 vertices")
    matcher = TreeMatcher(tree)

    def run(seed: int) -> tuple[int, tuple[int, ...] | None]:
        deadline = _Deadline(budget.time_limit)
        if p == 0:
            return (0, ()) if 0 > seed else (seed, None)
        incumbent = seed
        best: tuple[int, ...] | None = None

        def keep(order: int, rows: tuple[int, ...]) -> bool:
            if _edge_count(rows) + _addable(order, p) <= incumbent:
                return False
            return not matcher.found_in(order, rows)

        levels = _levels(p - 1, keep, deadline)
        for rows in levels[p - 1]:
            base = _edge_count(rows)
            for mask in range(1 << (p - 1)):
                deadline.tick()
                e = base + mask.bit_count()
                if e <= incumbent:
                    continue
                cand = _extend(rows, p - 1, mask)
                if matcher.found_in(p, cand):
                    continue
                if connected_only and not _is_connected_rows(p, cand):
                    continue
                incumbent = e
                best = cand
        return incumbent, best

    seed = edge_hint if edge_hint is not None else -1
    value, best = run(seed)
    if best is None and seed > -1:
        value, best = run(-1)
    if best is None:
        raise RuntimeError(f"no order-{p} graph avoids the pattern")
    return OracleExResult(p=p, value=value, connected_only=connected_only,
                          witness=Graph(p, best))


# ---------------------------------------------------------------------------
# Exhaustive arrowing (two-coloring) search.
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class ArrowingResult:
    order: int
    arrows: bool
    counterexample: Graph | None

    def to_json(self) -> dict:
        return {
            "order": self.order,
            "arrows": self.arrows,
            "counterexample": encode_graph6(self.counterexample)
            if self.counterexample is not None else None,
        }


def ramsey_oracle(order: int, left_tree: Graph, right_tree: Graph,
                  budget: OracleBudget | None = None) -> ArrowingResult:
    """Does every graph G on `order` vertices contain the left tree, or its
    complement the right tree?  When not, returns a counterexample graph.

    Arrowing is isomorphism-invariant, so only left-tree-free canonical
    representatives are enumerated and only their complements checked.
    """
    budget = budget or OracleBudget()
    if order > budget.max_coloring_order:
        raise BudgetExceededError(
            f"order {order} exceeds coloring cap {budget.max_coloring_order}"
        )
    left = TreeMatcher(left_tree)
    right = TreeMatcher(right_tree)
    deadline = _Deadline(budget.time_limit)
    if order == 0:
        return ArrowingResult(order=0, arrows=False, counterexample=Graph(0, ()))

    keep = lambda n, rows: not left.found_in(n, rows)
    levels = _levels(order - 1, keep, deadline)
    q = order - 1
    full = (1 << order) - 1
    for rows in levels[q]:
        for mask in range(1 << q):
            deadline.tick()
            cand = _extend(rows, q, mask)
            if left.found_in(order, cand):
                continue
            comp = tuple((full ^ r) ^ (1 << v) for v, r in enumerate(cand))
            if not right.found_in(order, comp):
                return ArrowingResult(order=order, arrows=False,
                                      counterexample=Graph(order, cand))
    return ArrowingResult(order=order, arrows=True, counterexample=None)


# ---------------------------------------------------------------------------
# Structural sweeps used by the acceptance suite.
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class LemmaSweepReport:
    max_p: int
    connected_t16_checked: int
    connected_t16_violations: tuple[str, ...]
    t26_checked: int
    t26_violations: tuple[str, ...]

    @property
    def ok(self) -> bool:
        return not self.connected_t16_violations and not self.t26_violations

    def to_json(self) -> dict:
        return {
            "max_p": self.max_p,
            "connected_t16_checked": self.connected_t16_checked,
            "connected_t16_violations": list(self.connected_t16_violations),
            "t26_checked": self.t26_checked,
            "t26_violations": list(self.t26_violations),
            "ok": self.ok,
        }


def verify_structural_lemmas(max_p: int, budget: OracleBudget | None = None) -> LemmaSweepReport:
    """Edge-bound sweep over all small hosts avoiding the order-6 trees.

    Checks that every connected graph of order 6..max_p with no copy of t1:6
    has at most 2p-3 edges, and that every graph (connected or not) with no
    copy of t2:6 has at most 2p - r(5-r)/2 edges, r = p mod 5.  Reports any
    violator; none is expected.
    """
    from .trees import TreeSpec, make_tree

    budget = budget or OracleBudget()
    if max_p > budget.max_order:
        raise BudgetExceededError(f"order {max_p} exceeds cap {budget.max_order}")
    deadline = _Deadline(budget.time_limit)

    t16 = TreeMatcher(make_tree(TreeSpec("t1", 6)))
    t26 = TreeMatcher(make_tree(TreeSpec("t2", 6)))

    checked1 = 0
    bad1: list[str] = []
    levels = _levels(max_p, lambda n, rows: not t16.found_in(n, rows), deadline)
    for p in range(6, max_p + 1):
        for rows in levels[p]:
            if not _is_connected_rows(p, rows):
                continue
            checked1 += 1
            if _edge_count(rows) > 2 * p - 3:
                bad1.append(encode_graph6(Graph(p, rows)))

    checked2 = 0
    bad2: list[str] = []
    levels = _levels(max_p, lambda n, rows: not t26.found_in(n, rows), deadline)
    for p in range(6, max_p + 1):
        r = p % 5
        bound = 2 * p - (r * (5 - r)) // 2
        for rows in levels[p]:
            checked2 += 1
            if _edge_count(rows) > bound:
                bad2.append(encode_graph6(Graph(p, rows)))

    return LemmaSweepReport(
        max_p=max_p,
        connected_t16_checked=checked1,
        connected_t16_violations=tuple(bad1),
        t26_checked=checked2,
        t26_violations=tuple(bad2),
    )


@dataclass(frozen=True)
class ConnectedExtremalReport:
    family: str
    n: int
    p: int
    value: int
    expected: int
    matches: bool
    max_degree_witness_found: bool
    witness: str

    def to_json(self) -> dict:
        return {
            "family": self.family, "n": self.n, "p": self.p,
            "value": self.value, "expected": self.expected, "matches": self.matches,
            "max_degree_witness_found": self.max_degree_witness_found,
            "witness": self.witness,
        }


def verify_connected_extremal(n: int, family: str, p: int,
                              budget: OracleBudget | None = None) -> ConnectedExtremalReport:
    """Confirm by exhaustive search that connected order-p graphs avoiding
    t1:n / t2:n max out at floor((n-4)p/2) edges, with some maximizer of
    maximum degree exactly n-4."""
    from .trees import TreeSpec, make_tree

    if family not in ("t1", "t2"):
        raise ValueError(f"connected-extremal sweep stated for t1/t2, got {family}")
    if not p >= n >= 7:
        raise ValueError(f"sweep needs p >= n >= 7, got n={n}, p={p}")
    budget = budget or OracleBudget()
    if p > budget.max_order:
        raise BudgetExceededError(f"order {p} exceeds cap {budget.max_order}")

    target = (n - 4) * p // 2
    matcher = TreeMatcher(make_tree(TreeSpec(family, n)))
    deadline = _Deadline(budget.time_limit)
    incumbent = target - 1

    def keep(order: int, rows: tuple[int, ...]) -> bool:
        if _edge_count(rows) + _addable(order, p) <= incumbent:
            return False
        return not matcher.found_in(order, rows)

    levels = _levels(p - 1, keep, deadline)
    best: int | None = None
    best_rows: tuple[int, ...] | None = None
    delta_hit = False
    for rows in levels[p - 1]:
        base = _edge_count(rows)
        for mask in range(1 << (p - 1)):
            deadline.tick()
            e = base + mask.bit_count()
            if e < target or (best is not None and e < best):
                continue
            if best is not None and e == best and delta_hit:
                continue
            cand = _extend(rows, p - 1, mask)
            if matcher.found_in(p, cand):
                continue
            if not _is_connected_rows(p, cand):
                continue
            hit = max(r.bit_count() for r in cand) == n - 4
            if best is None or e > best:
                best, best_rows, delta_hit = e, cand, hit
            elif hit and not delta_hit:
                best_rows, delta_hit = cand, True

    if best is None:
        # Nothing reached the predicted value: fall back to the plain search
        # so the report carries the true (smaller) maximum.
        res = ex_oracle(p, make_tree(TreeSpec(family, n)), connected_only=True, budget=budget)
        best, best_rows = res.value, res.witness.adj
        delta_hit = max(r.bit_count() for r in best_rows) == n - 4

    return ConnectedExtremalReport(
        family=family, n=n, p=p, value=best, expected=target, matches=best == target,
        max_degree_witness_found=delta_hit,
        witness=encode_graph6(Graph(p, best_rows)),
    )
