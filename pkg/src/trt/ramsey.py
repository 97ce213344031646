"""Rule-table evaluation of the two-tree Ramsey numbers this package covers.

`ramsey_value(left, right)` walks a fixed priority list of rules; the first
rule whose hypotheses all hold fires.  Every hypothesis evaluated along the
way is recorded in the answer's trace, exact answers carry a symbolic
lower-bound witness wherever a construction is known, and parameter ranges no
rule resolves exactly come back as ranges (never as extrapolated values).
Queries are evaluated exactly as given: (left, right) order matters and no
symmetry is assumed.

Rule ids, hypotheses and values (m = left order, n = right order):

  star-star-parity          star vs star, m,n >= 3: m+n-3 if mn odd else m+n-2
  star-tprime-parity        star vs tprime, n > m >= 4: m+n-3 if 2 | m(n-1)
                            else m+n-4
  star-tstar-divisibility   star vs tstar, n > m >= 6: m+n-3 if (m-1) | (n-3)
                            else m+n-4
  star-t12-equal-order      star vs t1/t2 of the same order n: 2n-3
  t12-t12-equal-order       t1/t2 vs t1/t2, same order: 2n-7 (n odd >= 17),
                            2n-6 (n even >= 12)
  t12-near-star-equal-order t1/t2 vs tprime/tstar, same order n >= 8: 2n-5
  path-t12-offset           path(n-s) vs t1/t2(n), s in 0..3 with n >= 17,
                            13, 11, 8 respectively: 2n-7
  tprime-t12-successor      tprime(m) vs t1/t2(m+1): 2m-4 (m odd >= 9),
                            2m-5 (m even >= 16)
  t12-tstar-t12-successor   t1/t2/tstar(m) vs t1/t2(m+1), m >= 12: 2m-5
  tree-star-divisible       any family(m >= 3) vs star(n), (m-1) | (n-2):
                            m+n-2
  t12-tprime-divisible      t1/t2(m >= 5) vs tprime(n), (m-1) | (n-3): m+n-3
  tree-t12-divisible        path/tprime/tstar/t1/t2(m) vs t1/t2(n >= 7),
                            (m-1) | (n-4): m+n-4
  tprime-t12-general        tprime(m >= 7) vs t1/t2(n), n >= max(m+2, 19-m),
                            (m-1) not | (n-4): m+n-5
  t12-star-general          t1/t2(m >= 5) vs star(n > m), (m-1) not | (n-2):
                            m+n-3 when n >= (m-3)^2+1 or m+n-4 is a
                            (m-1)/(m-2) combination, else Range(m+n-4, m+n-3)
  tree-star-quotient        any family(m >= 3) vs star(n), (m-1) not | (n-2),
                            n = k(m-1)+b: m+n-3 when k >= m-b, else
                            Range(lower, m+n-3)
  t12-near-star-general     t1/t2(m >= 5) vs tprime/tstar(n > m),
                            (m-1) not | (n-3): m+n-4 under any of five
                            quotient/threshold conditions, else
                            Range(m+n-5 or m+n-6, m+n-4)
  star-t12-parity           star(m >= 5) vs t1/t2(n >= 8), n > m: m+n-4 when
                            2 | mn, else Range(m+n-5, m+n-4) with the upper
                            end conjectured exact
  tree-t12-frobenius        path/tstar/t1/t2(m >= 7) vs t1/t2(n), n = m+1 >= 12
                            or n >= max(m+2, 19-m), (m-1) not | (n-4): m+n-5
                            when n >= (m-3)^2+3 or m+n-6 is a (m-1)/(m-2)
                            combination, else Range(lower, m+n-5)
  degree-bound              fallback: best max-degree lower bound only
"""

from __future__ import annotations

from dataclasses import dataclass

from .graph import CliquePart, DegreeSeqPart, WitnessDescriptor, cliques_descriptor, near_regular_sequence
from .trees import TreeSpec, tree_max_degree
from .turan import ex_value, binom2
from .witness import frobenius_rep

EXACT = "exact"
RANGE = "range"
UNKNOWN = "unknown"


@dataclass(frozen=True)
class HypothesisCheck:
    rule: str
    condition: str
    passed: bool


@dataclass(frozen=True)
class RamseyAnswer:
    left: TreeSpec
    right: TreeSpec
    kind: str  # exact | range | unknown
    value: int | None
    lo: int | None
    hi: int | None
    rule: str
    trace: tuple[HypothesisCheck, ...]
    witness: WitnessDescriptor | None
    notes: tuple[str, ...] = ()

    def to_json(self) -> dict:
        return {
            "left": self.left.label(),
            "right": self.right.label(),
            "kind": self.kind,
            "value": self.value,
            "lo": self.lo,
            "hi": self.hi,
            "rule": self.rule,
            "notes": list(self.notes),
            "trace": [
                {"rule": c.rule, "condition": c.condition, "passed": c.passed}
                for c in self.trace
            ],
            "witness": self.witness.to_json() if self.witness else None,
        }


@dataclass
class _Partial:
    kind: str
    rule: str
    value: int | None = None
    lo: int | None = None
    hi: int | None = None
    witness: WitnessDescriptor | None = None
    notes: tuple[str, ...] = ()


class _Trace:
    def __init__(self):
        self.checks: list[HypothesisCheck] = []

    def check(self, rule: str, condition: str, ok: bool) -> bool:
        self.checks.append(HypothesisCheck(rule, condition, bool(ok)))
        return bool(ok)

    def note(self, rule: str, condition: str) -> None:
        self.checks.append(HypothesisCheck(rule, condition, True))


def _window_descriptor(
    order: int, deg: int, dmin: int, odd_fix_clique: int | None = None
) -> WitnessDescriptor | None:
    """Degree-window construction: max component degree deg, min degree dmin.

    When deg*order is odd and the deficient vertex would dip below dmin, an
    odd-order clique component (whose internal degree still meets dmin) can
    absorb the parity; callers pass a clique order that is legitimately free
    of their left tree.
    """
    if order < 0 or deg < 0 or dmin > deg + 1:
        return None
    if order == 0:
        return WitnessDescriptor(parts=())
    if deg >= order:
        return None
    if (deg * order) % 2 == 0:
        return WitnessDescriptor(parts=(DegreeSeqPart((deg,) * order),))
    if deg - 1 >= dmin:
        return WitnessDescriptor(parts=(DegreeSeqPart(near_regular_sequence(order, deg)),))
    c = odd_fix_clique
    if c is not None and c % 2 == 1 and c <= order and c - 1 >= dmin:
        rest = order - c
        if rest == 0:
            return WitnessDescriptor(parts=(CliquePart(c),))
        if deg < rest and (deg * rest) % 2 == 0:
            return WitnessDescriptor(parts=(CliquePart(c), DegreeSeqPart((deg,) * rest)))
    return None


def _frobenius_cliques(m: int, total: int) -> WitnessDescriptor | None:
    """total as x*(m-1) + y*(m-2) realized as x K_{m-1} + y K_{m-2}."""
    rep = frobenius_rep(m - 1, m - 2, total)
    if rep is None:
        return None
    x, y = rep
    return cliques_descriptor(*([m - 1] * x + [m - 2] * y))


# ---------------------------------------------------------------------------
# Rules, in priority order.  Each returns a _Partial or None; hypothesis
# outcomes are recorded through the trace helper.
# ---------------------------------------------------------------------------

T12 = ("t1", "t2")


def _rule_star_star(left: TreeSpec, right: TreeSpec, tr: _Trace) -> _Partial | None:
    if left.family != "star" or right.family != "star":
        return None
    rid = "star-star-parity"
    m, n = left.n, right.n
    if not tr.check(rid, f"m >= 3 and n >= 3 [m={m}, n={n}]", m >= 3 and n >= 3):
        return None
    if m * n % 2 == 1:
        tr.note(rid, f"m*n = {m * n} is odd: value m+n-3")
        value = m + n - 3
    else:
        tr.note(rid, f"m*n = {m * n} is even: value m+n-2")
        value = m + n - 2
    wit = _window_descriptor(value - 1, m - 2, (value - 2) - (n - 2))
    return _Partial(EXACT, rid, value=value, witness=wit)


def _rule_star_tprime(left: TreeSpec, right: TreeSpec, tr: _Trace) -> _Partial | None:
    if left.family != "star" or right.family != "tprime":
        return None
    rid = "star-tprime-parity"
    m, n = left.n, right.n
    if not tr.check(rid, f"n > m >= 4 [m={m}, n={n}]", n > m >= 4):
        return None
    if (m * (n - 1)) % 2 == 0:
        tr.note(rid, f"m(n-1) = {m * (n - 1)} is even: value m+n-3")
        value = m + n - 3
    else:
        tr.note(rid, f"m(n-1) = {m * (n - 1)} is odd: value m+n-4")
        value = m + n - 4
    wit = _window_descriptor(value - 1, m - 2, (value - 2) - (n - 3))
    return _Partial(EXACT, rid, value=value, witness=wit)


def _rule_star_tstar(left: TreeSpec, right: TreeSpec, tr: _Trace) -> _Partial | None:
    if left.family != "star" or right.family != "tstar":
        return None
    rid = "star-tstar-divisibility"
    m, n = left.n, right.n
    if not tr.check(rid, f"n > m >= 6 [m={m}, n={n}]", n > m >= 6):
        return None
    if (n - 3) % (m - 1) == 0:
        tr.note(rid, f"(m-1) divides (n-3) [{m - 1} | {n - 3}]: value m+n-3")
        t = (n - 3) // (m - 1)
        return _Partial(
            EXACT, rid, value=m + n - 3, witness=cliques_descriptor(*([m - 1] * (t + 1)))
        )
    tr.note(rid, f"(m-1) does not divide (n-3) [{m - 1}, {n - 3}]: value m+n-4")
    wit = _frobenius_cliques(m, m + n - 5)
    if wit is None:
        rest = n - 3
        if m - 2 < rest and ((m - 2) * rest) % 2 == 0:
            wit = WitnessDescriptor(parts=(CliquePart(m - 2), DegreeSeqPart(((m - 2),) * rest)))
        else:
            wit = _window_descriptor(m + n - 5, m - 2, m - 3)
    return _Partial(EXACT, rid, value=m + n - 4, witness=wit)


def _rule_star_t12_equal(left: TreeSpec, right: TreeSpec, tr: _Trace) -> _Partial | None:
    if left.family != "star" or right.family not in T12:
        return None
    rid = "star-t12-equal-order"
    m, n = left.n, right.n
    if not tr.check(rid, f"equal orders [m={m}, n={n}]", m == n):
        return None
    wit = WitnessDescriptor(parts=(CliquePart(n - 2), CliquePart(n - 2)), complemented=True)
    return _Partial(EXACT, rid, value=2 * n - 3, witness=wit)


def _rule_t12_t12_equal(left: TreeSpec, right: TreeSpec, tr: _Trace) -> _Partial | None:
    if left.family not in T12 or right.family not in T12:
        return None
    rid = "t12-t12-equal-order"
    m, n = left.n, right.n
    if m != n:
        return None
    if n % 2 == 1:
        if not tr.check(rid, f"odd order needs n >= 17 [n={n}]", n >= 17):
            return None
        value = 2 * n - 7
    else:
        if not tr.check(rid, f"even order needs n >= 12 [n={n}]", n >= 12):
            return None
        value = 2 * n - 6
    dmin = (value - 2) - (n - 4)
    return _Partial(EXACT, rid, value=value, witness=_window_descriptor(value - 1, n - 4, dmin))


def _rule_t12_near_star_equal(left: TreeSpec, right: TreeSpec, tr: _Trace) -> _Partial | None:
    if left.family not in T12 or right.family not in ("tprime", "tstar"):
        return None
    rid = "t12-near-star-equal-order"
    m, n = left.n, right.n
    if m != n:
        return None
    if not tr.check(rid, f"order at least 8 [n={n}]", n >= 8):
        return None
    return _Partial(EXACT, rid, value=2 * n - 5, witness=cliques_descriptor(n - 3, n - 3))


_PATH_OFFSET_MIN = {0: 17, 1: 13, 2: 11, 3: 8}


def _rule_path_t12_offset(left: TreeSpec, right: TreeSpec, tr: _Trace) -> _Partial | None:
    if left.family != "path" or right.family not in T12:
        return None
    rid = "path-t12-offset"
    m, n = left.n, right.n
    s = n - m
    if s not in _PATH_OFFSET_MIN:
        return None
    if not tr.check(
        rid, f"offset s={s} needs n >= {_PATH_OFFSET_MIN[s]} [n={n}]", n >= _PATH_OFFSET_MIN[s]
    ):
        return None
    return _Partial(EXACT, rid, value=2 * n - 7, witness=cliques_descriptor(n - 4, n - 4))


def _rule_tprime_t12(left: TreeSpec, right: TreeSpec, tr: _Trace) -> _Partial | None:
    if left.family != "tprime" or right.family not in T12:
        return None
    rid = "tprime-t12-successor"
    m, n = left.n, right.n
    if n == m + 1:
        if m % 2 == 1:
            if not tr.check(rid, f"odd m needs m >= 9 [m={m}]", m >= 9):
                return None
            value = 2 * m - 4
        else:
            if not tr.check(rid, f"even m needs m >= 16 [m={m}]", m >= 16):
                return None
            value = 2 * m - 5
        dmin = (value - 2) - (m - 3)
        wit = _window_descriptor(value - 1, m - 3, dmin, odd_fix_clique=m - 1)
        return _Partial(EXACT, rid, value=value, witness=wit)
    rid = "tprime-t12-general"
    if not tr.check(rid, f"m >= 7 [m={m}]", m >= 7):
        return None
    if not tr.check(rid, f"n >= max(m+2, 19-m) [n={n}]", n >= max(m + 2, 19 - m)):
        return None
    if not tr.check(rid, f"(m-1) does not divide (n-4) [{m - 1}, {n - 4}]", (n - 4) % (m - 1) != 0):
        return None
    wit = _window_descriptor(m + n - 6, m - 3, m - 3, odd_fix_clique=m - 1)
    return _Partial(EXACT, rid, value=m + n - 5, witness=wit)


def _rule_t12_tstar_successor(left: TreeSpec, right: TreeSpec, tr: _Trace) -> _Partial | None:
    if left.family not in ("t1", "t2", "tstar") or right.family not in T12:
        return None
    rid = "t12-tstar-t12-successor"
    m, n = left.n, right.n
    if n != m + 1:
        return None
    if not tr.check(rid, f"m >= 12 [m={m}]", m >= 12):
        return None
    wit = _window_descriptor(2 * m - 6, m - 4, m - 4, odd_fix_clique=m - 2)
    return _Partial(EXACT, rid, value=2 * m - 5, witness=wit)


def _rule_tree_star_divisible(left: TreeSpec, right: TreeSpec, tr: _Trace) -> _Partial | None:
    if right.family != "star":
        return None
    rid = "tree-star-divisible"
    m, n = left.n, right.n
    if not tr.check(rid, f"m >= 3 [m={m}]", m >= 3):
        return None
    if not tr.check(rid, f"(m-1) divides (n-2) [{m - 1}, {n - 2}]", (n - 2) % (m - 1) == 0):
        return None
    t = (n - 2) // (m - 1)
    return _Partial(
        EXACT, rid, value=m + n - 2, witness=cliques_descriptor(*([m - 1] * (t + 1)))
    )


def _rule_t12_tprime_divisible(left: TreeSpec, right: TreeSpec, tr: _Trace) -> _Partial | None:
    if left.family not in T12 or right.family != "tprime":
        return None
    rid = "t12-tprime-divisible"
    m, n = left.n, right.n
    if not tr.check(rid, f"(m-1) divides (n-3) [{m - 1}, {n - 3}]", (n - 3) % (m - 1) == 0):
        return None
    t = (n - 3) // (m - 1)
    return _Partial(
        EXACT, rid, value=m + n - 3, witness=cliques_descriptor(*([m - 1] * (t + 1)))
    )


# Left-family minimum orders for the divisibility rule.  Order-4 paths are
# excluded even though the source claims them: a star on m+n-4 vertices is
# path-free with a complement (a clique plus one isolate) too small to hold
# the order-n tree, so r(path:4, t1/t2:n) >= n+1 > m+n-4; exhaustive search
# confirms r(path:4, t1:7) = 8.
_T12_RIGHT_MIN_LEFT = {"path": 5, "tprime": 5, "tstar": 6, "t1": 5, "t2": 5}


def _rule_tree_t12_divisible(left: TreeSpec, right: TreeSpec, tr: _Trace) -> _Partial | None:
    if left.family not in _T12_RIGHT_MIN_LEFT or right.family not in T12:
        return None
    rid = "tree-t12-divisible"
    m, n = left.n, right.n
    need = _T12_RIGHT_MIN_LEFT[left.family]
    if not tr.check(rid, f"{left.family} left needs m >= {need} [m={m}]", m >= need):
        return None
    if not tr.check(rid, f"n >= 7 [n={n}]", n >= 7):
        return None
    if not tr.check(rid, f"(m-1) divides (n-4) [{m - 1}, {n - 4}]", (n - 4) % (m - 1) == 0):
        return None
    t = (n - 4) // (m - 1)
    return _Partial(
        EXACT, rid, value=m + n - 4, witness=cliques_descriptor(*([m - 1] * (t + 1)))
    )


def _rule_t12_star(left: TreeSpec, right: TreeSpec, tr: _Trace) -> _Partial | None:
    if left.family not in T12 or right.family != "star":
        return None
    rid = "t12-star-general"
    m, n = left.n, right.n
    if not tr.check(rid, f"n > m >= 5 [m={m}, n={n}]", n > m >= 5):
        return None
    if not tr.check(rid, f"(m-1) does not divide (n-2) [{m - 1}, {n - 2}]", (n - 2) % (m - 1) != 0):
        return None
    rep = _frobenius_cliques(m, m + n - 4)
    if n >= (m - 3) ** 2 + 1:
        tr.note(rid, f"n >= (m-3)^2+1 [{n} >= {(m - 3) ** 2 + 1}]: value m+n-3")
        return _Partial(EXACT, rid, value=m + n - 3, witness=rep)
    if rep is not None:
        tr.note(rid, f"m+n-4 = {m + n - 4} is a (m-1)/(m-2) combination: value m+n-3")
        return _Partial(EXACT, rid, value=m + n - 3, witness=rep)
    tr.note(rid, "neither exactness condition holds: open pocket, range answer")
    wit = _window_descriptor(m + n - 5, m - 4, m - 4, odd_fix_clique=m - 2)
    return _Partial(RANGE, rid, lo=m + n - 4, hi=m + n - 3, witness=wit)


def _rule_tree_star_quotient(left: TreeSpec, right: TreeSpec, tr: _Trace) -> _Partial | None:
    if right.family != "star":
        return None
    rid = "tree-star-quotient"
    m, n = left.n, right.n
    # The quotient bound needs the left tree below full star degree: for a
    # star (any family tag whose order-m member has degree m-1) a near-regular
    # two-coloring beats m+n-3 whenever both orders are even, and the parity
    # rule already settles those queries exactly.
    if not tr.check(
        rid, f"left tree is not a star [max degree {tree_max_degree(left)} <= m-2]",
        tree_max_degree(left) <= m - 2,
    ):
        return None
    if not tr.check(rid, f"m >= 3 [m={m}]", m >= 3):
        return None
    if not tr.check(rid, f"n >= m-1 so n = k(m-1)+b with k >= 1 [n={n}]", n >= m - 1):
        return None
    if not tr.check(rid, f"(m-1) does not divide (n-2) [{m - 1}, {n - 2}]", (n - 2) % (m - 1) != 0):
        return None
    k, b = divmod(n, m - 1)
    if k >= m - b:
        tr.note(rid, f"k >= m-b [k={k}, b={b}, m-b={m - b}]: value m+n-3")
        return _Partial(EXACT, rid, value=m + n - 3, witness=_frobenius_cliques(m, m + n - 4))
    tr.note(rid, f"k < m-b [k={k}, b={b}]: only the upper bound m+n-3 is known")
    lo, wit = _degree_floor(left, right)
    return _Partial(RANGE, rid, lo=lo, hi=m + n - 3, witness=wit)


def _rule_t12_near_star(left: TreeSpec, right: TreeSpec, tr: _Trace) -> _Partial | None:
    if left.family not in T12 or right.family not in ("tprime", "tstar"):
        return None
    rid = "t12-near-star-general"
    m, n = left.n, right.n
    if not tr.check(rid, f"n > m >= 5 [m={m}, n={n}]", n > m >= 5):
        return None
    if not tr.check(rid, f"(m-1) does not divide (n-3) [{m - 1}, {n - 3}]", (n - 3) % (m - 1) != 0):
        return None
    k, b = divmod(n, m - 1)
    q, a = divmod(n, m - 2)
    conds = (
        (f"b in {{1,2,4}} [b={b}]", b in (1, 2, 4)),
        (f"b = 0 and k >= 3 [b={b}, k={k}]", b == 0 and k >= 3),
        (f"n >= (m-3)^2+2 [{n} >= {(m - 3) ** 2 + 2}]", n >= (m - 3) ** 2 + 2),
        (f"n >= m^2-1-b(m-2) [{n} >= {m * m - 1 - b * (m - 2)}]", n >= m * m - 1 - b * (m - 2)),
        (f"a >= 3 and n >= (a-4)(m-1)+4 [a={a}]", a >= 3 and n >= (a - 4) * (m - 1) + 4),
    )
    fired = [text for text, ok in conds if ok]
    if fired:
        tr.note(rid, f"exactness condition holds: {fired[0]}")
        return _Partial(EXACT, rid, value=m + n - 4, witness=_frobenius_cliques(m, m + n - 5))
    tr.note(
        rid,
        f"none of the five exactness conditions holds [b={b}, k={k}, a={a}, q={q}]: "
        "open pocket, range answer",
    )
    if right.family == "tprime":
        wit = _window_descriptor(m + n - 6, m - 4, m - 4, odd_fix_clique=m - 2)
        return _Partial(RANGE, rid, lo=m + n - 5, hi=m + n - 4, witness=wit)
    wit = _window_descriptor(m + n - 7, m - 4, m - 4, odd_fix_clique=m - 2)
    return _Partial(RANGE, rid, lo=m + n - 6, hi=m + n - 4, witness=wit)


def _rule_star_t12(left: TreeSpec, right: TreeSpec, tr: _Trace) -> _Partial | None:
    if left.family != "star" or right.family not in T12:
        return None
    rid = "star-t12-parity"
    m, n = left.n, right.n
    if not tr.check(rid, f"m >= 5, n >= 8, n > m [m={m}, n={n}]", m >= 5 and n >= 8 and n > m):
        return None
    if m * n % 2 == 0:
        tr.note(rid, f"m*n = {m * n} is even: value m+n-4")
        wit = _window_descriptor(m + n - 5, m - 2, m - 2)
        return _Partial(EXACT, rid, value=m + n - 4, witness=wit)
    tr.note(rid, f"m*n = {m * n} is odd: open parity pocket, range answer")
    wit = _window_descriptor(m + n - 6, m - 2, m - 3)
    return _Partial(
        RANGE, rid, lo=m + n - 5, hi=m + n - 4, witness=wit,
        notes=("upper end m+n-4 is conjectured exact for the odd-product case",),
    )


def _rule_tree_t12_frobenius(left: TreeSpec, right: TreeSpec, tr: _Trace) -> _Partial | None:
    if left.family not in ("path", "tstar", "t1", "t2") or right.family not in T12:
        return None
    rid = "tree-t12-frobenius"
    m, n = left.n, right.n
    if not tr.check(rid, f"m >= 7 [m={m}]", m >= 7):
        return None
    gate = (n == m + 1 and n >= 12) or n >= max(m + 2, 19 - m)
    if not tr.check(rid, f"n = m+1 >= 12 or n >= max(m+2, 19-m) [n={n}]", gate):
        return None
    if not tr.check(rid, f"(m-1) does not divide (n-4) [{m - 1}, {n - 4}]", (n - 4) % (m - 1) != 0):
        return None
    b_residues = [b for b in (2, 3, 5) if (n - b) % (m - 1) == 0]
    if b_residues and n >= max(m + 2, 19 - m):
        tr.note(rid, f"(m-1) divides (n-{b_residues[0]}): combination shortcut applies")
    rep = _frobenius_cliques(m, m + n - 6)
    if n >= (m - 3) ** 2 + 3:
        tr.note(rid, f"n >= (m-3)^2+3 [{n} >= {(m - 3) ** 2 + 3}]: value m+n-5")
        return _Partial(EXACT, rid, value=m + n - 5, witness=rep)
    if rep is not None:
        tr.note(rid, f"m+n-6 = {m + n - 6} is a (m-1)/(m-2) combination: value m+n-5")
        return _Partial(EXACT, rid, value=m + n - 5, witness=rep)
    tr.note(rid, "neither exactness condition holds: open pocket, range answer")
    lo, wit = _degree_floor(left, right)
    return _Partial(RANGE, rid, lo=lo, hi=m + n - 5, witness=wit)


_RULES = (
    _rule_star_star,
    _rule_star_tprime,
    _rule_star_tstar,
    _rule_star_t12_equal,
    _rule_t12_t12_equal,
    _rule_t12_near_star_equal,
    _rule_path_t12_offset,
    _rule_tprime_t12,
    _rule_t12_tstar_successor,
    _rule_tree_star_divisible,
    _rule_t12_tprime_divisible,
    _rule_tree_t12_divisible,
    _rule_t12_star,
    _rule_tree_star_quotient,
    _rule_t12_near_star,
    _rule_star_t12,
    _rule_tree_t12_frobenius,
)

RULE_PRIORITY = (
    "star-star-parity",
    "star-tprime-parity",
    "star-tstar-divisibility",
    "star-t12-equal-order",
    "t12-t12-equal-order",
    "t12-near-star-equal-order",
    "path-t12-offset",
    "tprime-t12-successor",
    "tprime-t12-general",
    "t12-tstar-t12-successor",
    "tree-star-divisible",
    "t12-tprime-divisible",
    "tree-t12-divisible",
    "t12-star-general",
    "tree-star-quotient",
    "t12-near-star-general",
    "star-t12-parity",
    "tree-t12-frobenius",
    "degree-bound",
)


# ---------------------------------------------------------------------------
# Max-degree lower bounds (the fallback floor) and the public entry points.
# ---------------------------------------------------------------------------


def degree_lower_bound(d1: int, d2: int, mode: str) -> int:
    """Lower bound for the Ramsey number from the two maximum degrees.

    Modes: "parity" (always applicable), "star-vs-bigger" (left connected of
    order m with d1 < d2 <= m), "disconnected-case" (left connected, d1 != m-1,
    d2 > m).  Mode hypotheses are the caller's responsibility.
    """
    if d1 < 2 or d2 < 2:
        raise ValueError(f"degree bounds need d1, d2 >= 2, got {d1}, {d2}")
    if mode == "parity":
        return d1 + d2 - (1 if ((d1 - 1) * (d2 - 1)) % 2 == 1 else 0)
    if mode == "star-vs-bigger":
        return 2 * d2 - 1
    if mode == "disconnected-case":
        return d1 + d2
    raise ValueError(f"unknown mode {mode!r}")


def _degree_floor(left: TreeSpec, right: TreeSpec) -> tuple[int | None, WitnessDescriptor | None]:
    """Best applicable degree-derived lower bound plus a witness recipe."""
    m, n = left.n, right.n
    d1, d2 = tree_max_degree(left), tree_max_degree(right)
    if d1 < 2 or d2 < 2:
        return None, None
    best = degree_lower_bound(d1, d2, "parity")
    best_mode = "parity"
    if d1 < d2 <= m and 2 * d2 - 1 > best:
        best = 2 * d2 - 1
        best_mode = "star-vs-bigger"
    if d1 != m - 1 and d2 > m and d1 + d2 > best:
        best = d1 + d2
        best_mode = "disconnected-case"
    if best_mode == "star-vs-bigger" and d2 - 1 < m:
        wit = cliques_descriptor(d2 - 1, d2 - 1)
    else:
        fix = d1 + 1 if d1 + 1 < m and (d1 + 1) % 2 == 1 else None
        wit = _window_descriptor(best - 1, d1 - 1, (best - 2) - (d2 - 1), odd_fix_clique=fix)
    return best, wit


def _fallback(left: TreeSpec, right: TreeSpec, tr: _Trace) -> _Partial:
    rid = "degree-bound"
    d1, d2 = tree_max_degree(left), tree_max_degree(right)
    if not tr.check(rid, f"both max degrees >= 2 [d1={d1}, d2={d2}]", d1 >= 2 and d2 >= 2):
        return _Partial(UNKNOWN, rid)
    lo, wit = _degree_floor(left, right)
    tr.note(rid, f"no closed-form rule applies; best degree lower bound {lo}")
    return _Partial(UNKNOWN, rid, lo=lo, witness=wit)


def ramsey_value(left: TreeSpec, right: TreeSpec) -> RamseyAnswer:
    """Evaluate the (left, right) Ramsey query against the rule table."""
    tr = _Trace()
    partial = None
    for rule in _RULES:
        partial = rule(left, right, tr)
        if partial is not None:
            break
    if partial is None:
        partial = _fallback(left, right, tr)
    if partial.kind == EXACT:
        lo = hi = partial.value
    else:
        lo, hi = partial.lo, partial.hi
    return RamseyAnswer(
        left=left, right=right, kind=partial.kind, value=partial.value,
        lo=lo, hi=hi, rule=partial.rule, trace=tuple(tr.checks),
        witness=partial.witness, notes=partial.notes,
    )


def all_rule_answers(left: TreeSpec, right: TreeSpec) -> list[RamseyAnswer]:
    """Every rule's independent verdict (for cross-consistency checking)."""
    out = []
    for rule in _RULES:
        tr = _Trace()
        partial = rule(left, right, tr)
        if partial is None:
            continue
        lo = hi = partial.value
        if partial.kind != EXACT:
            lo, hi = partial.lo, partial.hi
        out.append(
            RamseyAnswer(
                left=left, right=right, kind=partial.kind, value=partial.value,
                lo=lo, hi=hi, rule=partial.rule, trace=tuple(tr.checks),
                witness=partial.witness, notes=partial.notes,
            )
        )
    return out


def check_rule_consistency(left: TreeSpec, right: TreeSpec) -> list[RamseyAnswer]:
    """Raise if two applicable rules give incompatible answers."""
    answers = all_rule_answers(left, right)
    for i, a in enumerate(answers):
        for b in answers[i + 1:]:
            a_lo = a.lo if a.lo is not None else 0
            b_lo = b.lo if b.lo is not None else 0
            a_hi = a.hi if a.hi is not None else 10 ** 9
            b_hi = b.hi if b.hi is not None else 10 ** 9
            if max(a_lo, b_lo) > min(a_hi, b_hi):
                raise AssertionError(
                    f"internal inconsistency on ({left.label()}, {right.label()}): "
                    f"{a.rule} gives [{a.lo}, {a.hi}], {b.rule} gives [{b.lo}, {b.hi}]"
                )
    return answers


@dataclass(frozen=True)
class TuranUpperCheck:
    p: int
    holds: bool
    left_edges: int
    right_edges: int
    total_pairs: int

    def to_json(self) -> dict:
        return {
            "p": self.p,
            "holds": self.holds,
            "left_edges": self.left_edges,
            "right_edges": self.right_edges,
            "total_pairs": self.total_pairs,
        }


def ramsey_upper_via_turan(left: TreeSpec, right: TreeSpec, p: int) -> TuranUpperCheck:
    """Certify r(left, right) <= p from the two extremal edge counts.

    Holds iff ex(p; left) + ex(p; right) < C(p, 2): a graph and its complement
    on p vertices cannot both stay at or below their extremal counts then.
    """
    if p < max(left.n, right.n):
        raise ValueError(f"p={p} below max order {max(left.n, right.n)}")
    exl = ex_value(left, p).value
    exr = ex_value(right, p).value
    pairs = binom2(p)
    return TuranUpperCheck(
        p=p, holds=exl + exr < pairs, left_edges=exl, right_edges=exr, total_pairs=pairs
    )
