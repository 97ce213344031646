"""Closed-form maximum edge counts ex(p; family) with branch diagnostics.

All arithmetic is exact integer arithmetic; halved expressions assert their
divisibility instead of rounding.  Every result carries the parameter
decomposition p = k(n-1) + r, the winning branch, and a symbolic witness
descriptor realizable by the constructions module.

Branches:
  trivial_complete  p < n: no n-vertex tree fits, so K_p is extremal
  clique_union      k disjoint K_{n-1} plus one K_r
  deficit           (k-1) disjoint K_{n-1} plus a near-regular remainder
  special           star family: a single near-regular graph
"""

from __future__ import annotations

from dataclasses import dataclass

from .graph import (
    CliquePart,
    DegreeSeqPart,
    WitnessDescriptor,
    cliques_descriptor,
    near_regular_sequence,
)
from .trees import TreeSpec

BRANCH_TRIVIAL = "trivial_complete"
BRANCH_CLIQUE_UNION = "clique_union"
BRANCH_DEFICIT = "deficit"
BRANCH_SPECIAL = "special"


@dataclass(frozen=True)
class ExResult:
    family: TreeSpec
    p: int
    value: int
    branch: str
    k: int | None
    r: int | None
    branch_values: tuple[int, int] | None  # (deficit, clique_union) where both exist
    tie: bool
    witness: WitnessDescriptor

    def to_json(self) -> dict:
        return {
            "family": self.family.family,
            "n": self.family.n,
            "p": self.p,
            "k": self.k,
            "r": self.r,
            "value": self.value,
            "branch": self.branch,
            "branch_values": list(self.branch_values) if self.branch_values else None,
            "tie": self.tie,
            "witness": self.witness.to_json(),
        }


def _half(x: int) -> int:
    assert x % 2 == 0, f"expected even numerator, got {x}"
    return x // 2


def binom2(x: int) -> int:
    return x * (x - 1) // 2 if x >= 2 else 0


def decompose(p: int, n: int) -> tuple[int, int]:
    """p = k(n-1) + r with k >= 1 and r in 0..n-2; requires p >= n-1 >= 1."""
    if n < 2 or p < n - 1:
        raise ValueError(f"cannot decompose p={p} over n={n}")
    return p // (n - 1), p % (n - 1)


def _deficit_value(n: int, p: int, r: int) -> int:
    return ((n - 2) * p) // 2 - (n - 1 + r)


def _clique_value(n: int, p: int, r: int) -> int:
    return _half((n - 2) * p - r * (n - 1 - r))


def _deficit_witness(n: int, k: int, r: int) -> WitnessDescriptor:
    parts: list[CliquePart | DegreeSeqPart] = [CliquePart(n - 1)] * (k - 1)
    parts.append(DegreeSeqPart(near_regular_sequence(n - 1 + r, n - 4)))
    return WitnessDescriptor(parts=tuple(parts))


def _clique_witness(n: int, k: int, r: int) -> WitnessDescriptor:
    return cliques_descriptor(*([n - 1] * k + [r]))


def t12_deficit_wins(n: int, r: int) -> bool:
    """Case split for the two-pendant families: where the deficit branch wins."""
    if n >= 16:
        return 3 <= r <= n - 6
    if 13 <= n <= 15:
        return 4 <= r <= n - 7
    return False


def ex_value_by_case(n: int, p: int) -> int:
    """Piecewise (case-split) form of the t1/t2 value, for cross-checking."""
    k, r = decompose(p, n)
    if t12_deficit_wins(n, r):
        return _deficit_value(n, p, r)
    return _clique_value(n, p, r)


def ex_value(spec: TreeSpec, p: int) -> ExResult:
    """Exact maximum edges in a graph of order p with no copy of the family tree."""
    if p < 0:
        raise ValueError(f"negative order p={p}")
    n = spec.n
    fam = spec.family

    if p < n:
        k, r = (1, 0) if p == n - 1 else (None, None)
        return ExResult(
            family=spec, p=p, value=binom2(p), branch=BRANCH_TRIVIAL, k=k, r=r,
            branch_values=None, tie=False, witness=cliques_descriptor(p),
        )

    if fam == "tstar":
        raise ValueError("unsupported family for closed form: tstar")
    if fam == "path" and n < 2:
        raise ValueError(f"outside theorem domain: path with n={n}, p={p}")
    if fam == "tprime" and n < 5:
        raise ValueError(f"outside theorem domain: tprime with n={n}, p={p}")

    k, r = decompose(p, n)

    if fam == "path":
        value = k * binom2(n - 1) + binom2(r)
        assert value == _clique_value(n, p, r)
        return ExResult(
            family=spec, p=p, value=value, branch=BRANCH_CLIQUE_UNION, k=k, r=r,
            branch_values=None, tie=False, witness=_clique_witness(n, k, r),
        )

    if fam == "star":
        value = ((n - 2) * p) // 2
        return ExResult(
            family=spec, p=p, value=value, branch=BRANCH_SPECIAL, k=k, r=r,
            branch_values=None, tie=False,
            witness=WitnessDescriptor(parts=(DegreeSeqPart(near_regular_sequence(p, n - 2)),)),
        )

    if fam == "tprime":
        if n >= 7 and 2 <= r <= n - 4:
            value = ((n - 2) * (p - 1) - r - 1) // 2
            parts: list[CliquePart | DegreeSeqPart] = [CliquePart(n - 1)] * (k - 1)
            parts.append(DegreeSeqPart(near_regular_sequence(n - 1 + r, n - 3)))
            return ExResult(
                family=spec, p=p, value=value, branch=BRANCH_DEFICIT, k=k, r=r,
                branch_values=None, tie=False, witness=WitnessDescriptor(parts=tuple(parts)),
            )
        value = _clique_value(n, p, r)
        return ExResult(
            family=spec, p=p, value=value, branch=BRANCH_CLIQUE_UNION, k=k, r=r,
            branch_values=None, tie=False, witness=_clique_witness(n, k, r),
        )

    # t1 / t2 share one formula: max of the deficit and clique-union branches.
    deficit = _deficit_value(n, p, r)
    clique = _clique_value(n, p, r)
    if deficit >= clique:
        branch = BRANCH_DEFICIT
        value = deficit
        witness = _deficit_witness(n, k, r)
    else:
        branch = BRANCH_CLIQUE_UNION
        value = clique
        witness = _clique_witness(n, k, r)
    return ExResult(
        family=spec, p=p, value=value, branch=branch, k=k, r=r,
        branch_values=(deficit, clique), tie=deficit == clique, witness=witness,
    )


def ex_bounds(spec: TreeSpec, p: int) -> tuple[int, int]:
    """Sandwich bounds for the t1/t2 value when (n-1) does not divide p.

    lo is the exact-rational lower bound (n-2)p/2 - (n-1)^2/8 rounded up;
    hi = floor((n-2)(p-1)/2).
    """
    if spec.family not in ("t1", "t2"):
        raise ValueError(f"bounds stated only for t1/t2, got {spec.family}")
    n = spec.n
    if p < n:
        raise ValueError(f"bounds need p >= n, got p={p}, n={n}")
    if p % (n - 1) == 0:
        raise ValueError("corollary hypothesis violated: (n-1) divides p")
    num = 4 * (n - 2) * p - (n - 1) ** 2
    lo = -((-num) // 8)
    hi = ((n - 2) * (p - 1)) // 2
    return lo, hi


@dataclass(frozen=True)
class CaseExplanation:
    family: TreeSpec
    p: int
    k: int
    r: int
    sign: int  # r(n-3-r) - 2(n-1): positive -> deficit, negative -> clique union
    branch: str
    tie: bool
    conditions: tuple[tuple[str, bool], ...]

    def to_json(self) -> dict:
        return {
            "family": self.family.family,
            "n": self.family.n,
            "p": self.p,
            "k": self.k,
            "r": self.r,
            "sign": self.sign,
            "branch": self.branch,
            "tie": self.tie,
            "conditions": [{"condition": c, "holds": ok} for c, ok in self.conditions],
        }


def ex_case_explain(spec: TreeSpec, p: int) -> CaseExplanation:
    """Which branch regime (n, r) falls in, with the deciding sign."""
    if spec.family not in ("t1", "t2"):
        raise ValueError(f"case analysis stated only for t1/t2, got {spec.family}")
    res = ex_value(spec, p)
    if res.k is None:
        raise ValueError(f"p={p} below the theorem domain p >= n-1")
    n = spec.n
    k, r = decompose(p, n)
    sign = r * (n - 3 - r) - 2 * (n - 1)
    conditions = (
        (f"n >= 16 and 3 <= r <= n-6 [n={n}, r={r}]", n >= 16 and 3 <= r <= n - 6),
        (f"13 <= n <= 15 and 4 <= r <= n-7 [n={n}, r={r}]", 13 <= n <= 15 and 4 <= r <= n - 7),
    )
    branch = res.branch if res.branch != BRANCH_TRIVIAL else BRANCH_CLIQUE_UNION
    tie = res.tie if res.branch_values else sign == 0
    return CaseExplanation(
        family=spec, p=p, k=k, r=r, sign=sign, branch=branch, tie=tie, conditions=conditions,
    )
