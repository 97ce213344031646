"""Command-line entry point binding all modules.

Exit codes: 0 success, 1 negative verification (a forbidden tree was found,
a sweep reported violators, or a selftest criterion failed), 2 usage or input
error, 3 oracle budget exceeded.  `--json` switches every subcommand to one
machine-readable JSON document with stable field names.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from .acceptance import run_criteria
from .containment import contains_subgraph
from .graph import (
    DegreeSeqPart,
    Graph6Error,
    WitnessDescriptor,
    decode_graph6,
    encode_graph6,
    near_regular_sequence,
)
from .oracle import (
    BudgetExceededError,
    DEFAULT_MAX_COLORING_ORDER,
    DEFAULT_MAX_ORDER,
    OracleBudget,
    ex_oracle,
    ramsey_oracle,
    verify_structural_lemmas,
)
from .ramsey import ramsey_value
from .trees import FAMILIES, TreeSpec, make_tree, parse_tree_spec
from .turan import ex_value
from .witness import extremal_witness, near_regular, ramsey_witness


def _budget_from(args) -> OracleBudget:
    explicit = getattr(args, "max_order", None)
    if explicit is not None:
        # An explicit flag caps both search kinds for this invocation.
        return OracleBudget(
            max_order=explicit, max_coloring_order=explicit,
            time_limit=getattr(args, "time_limit", None),
        )
    env = os.environ.get("TRT_MAX_ORDER")
    max_order = int(env) if env else DEFAULT_MAX_ORDER
    return OracleBudget(
        max_order=max_order,
        max_coloring_order=min(max_order, DEFAULT_MAX_COLORING_ORDER),
        time_limit=getattr(args, "time_limit", None),
    )


def _emit(args, payload: dict, human: str) -> None:
    if getattr(args, "json", False):
        print(json.dumps(payload, indent=2))
    else:
        print(human)


def _cmd_ex(args) -> int:
    spec = TreeSpec(args.family, args.n)
    res = ex_value(spec, args.p)
    payload = res.to_json()
    human = (
        f"ex(p={res.p}; {spec.label()}) = {res.value}  "
        f"[k={res.k} r={res.r} branch={res.branch}"
        + (f" tie branch_values={res.branch_values}" if res.tie else "")
        + f"]  witness: {res.witness.label()}"
    )
    if args.witness:
        g, _ = extremal_witness(spec, args.p)
        payload["witness_graph6"] = encode_graph6(g)
        human += "\n" + encode_graph6(g)
    _emit(args, payload, human)
    return 0


def _cmd_ramsey(args) -> int:
    left = parse_tree_spec(args.left)
    right = parse_tree_spec(args.right)
    ans = ramsey_value(left, right)
    payload = ans.to_json()
    if ans.kind == "exact":
        human = f"r({left.label()}, {right.label()}) = {ans.value}  [rule {ans.rule}]"
    elif ans.kind == "range":
        human = (
            f"r({left.label()}, {right.label()}) in [{ans.lo}, {ans.hi}]  [rule {ans.rule}]"
        )
    else:
        lo = f" >= {ans.lo}" if ans.lo is not None else ""
        human = f"r({left.label()}, {right.label()}) unknown{lo}  [rule {ans.rule}]"
    for note in ans.notes:
        human += f"\n  note: {note}"
    if ans.witness is not None:
        human += f"\n  lower-bound recipe: {ans.witness.label()}"
    if args.witness:
        g, _ = ramsey_witness(ans)
        payload["witness_graph6"] = encode_graph6(g)
        human += "\n" + encode_graph6(g)
    _emit(args, payload, human)
    return 0


def _cmd_construct(args) -> int:
    if args.what == "extremal":
        g, desc = extremal_witness(TreeSpec(args.family, args.n), args.p)
    elif args.what == "ramsey-witness":
        ans = ramsey_value(parse_tree_spec(args.left), parse_tree_spec(args.right))
        g, desc = ramsey_witness(ans)
    else:  # near-regular
        g = near_regular(args.p, args.d)
        desc = WitnessDescriptor(parts=(DegreeSeqPart(near_regular_sequence(args.p, args.d)),))
    print(encode_graph6(g))
    if args.json:
        meta = {
            "order": g.n,
            "edges": g.edge_count(),
            "descriptor": desc.to_json() if desc is not None else None,
        }
        print(json.dumps(meta, indent=2), file=sys.stderr)
    return 0


def _cmd_check(args) -> int:
    spec = parse_tree_spec(args.avoid)
    tree = make_tree(spec)
    if args.graph == "-":
        lines = sys.stdin.read().splitlines()
    else:
        with open(args.graph) as fh:
            lines = fh.read().splitlines()
    lines = [ln for ln in lines if ln.strip()]
    if not lines:
        raise ValueError("no graphs on input")
    for idx, line in enumerate(lines):
        host = decode_graph6(line.strip())
        emb = contains_subgraph(host, tree)
        if emb is not None:
            label_map = " ".join(f"{t}->{h}" for t, h in enumerate(emb.mapping))
            print(f"graph {idx}: contains {spec.label()}: {label_map}")
            return 1
    print(f"{len(lines)} graph(s) free of {spec.label()}")
    return 0


def _cmd_oracle(args) -> int:
    budget = _budget_from(args)
    if args.oracle_what == "ex":
        spec = TreeSpec(args.family, args.n)
        hint = None
        try:
            hint = ex_value(spec, args.p).value - 1
        except ValueError:
            pass  # no closed form (e.g. tstar): run unseeded
        res = ex_oracle(
            args.p, make_tree(spec), connected_only=args.connected,
            budget=budget, edge_hint=hint,
        )
        payload = res.to_json()
        payload["family"] = spec.family
        payload["n"] = spec.n
        _emit(args, payload, (
            f"oracle ex(p={args.p}; {spec.label()}"
            + (", connected" if args.connected else "")
            + f") = {res.value}\n{encode_graph6(res.witness)}"
        ))
        return 0
    if args.oracle_what == "ramsey":
        left = parse_tree_spec(args.left)
        right = parse_tree_spec(args.right)
        res = ramsey_oracle(args.order, make_tree(left), make_tree(right), budget=budget)
        payload = res.to_json()
        payload["left"] = left.label()
        payload["right"] = right.label()
        if res.arrows:
            human = f"every graph on {res.order} vertices arrows ({left.label()}, {right.label()})"
        else:
            human = (
                f"order {res.order} does not arrow ({left.label()}, {right.label()}); "
                f"counterexample:\n{encode_graph6(res.counterexample)}"
            )
        _emit(args, payload, human)
        return 0
    # lemmas sweep
    rep = verify_structural_lemmas(args.max_p, budget=budget)
    human = (
        f"order-6 sweeps up to p={rep.max_p}: {rep.connected_t16_checked} connected "
        f"t1:6-free hosts within 2p-3, {rep.t26_checked} t2:6-free hosts within "
        f"2p - r(5-r)/2; violations: "
        f"{list(rep.connected_t16_violations) + list(rep.t26_violations) or 'none'}"
    )
    _emit(args, rep.to_json(), human)
    return 0 if rep.ok else 1


def _cmd_selftest(args) -> int:
    numbers = None
    if args.only:
        numbers = [int(x) for x in args.only.split(",")]
    results = run_criteria(numbers)
    for res in results:
        print(res.line())
    return 0 if all(r.passed for r in results) else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="trt",
        description=(
            "Extremal edge counts and Ramsey numbers for six parametric tree "
            "families, with verified constructions and exhaustive small-scale oracles."
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_ex = sub.add_parser("ex", help="closed-form extremal edge count")
    p_ex.add_argument("--family", required=True, choices=FAMILIES)
    p_ex.add_argument("--n", required=True, type=int, help="tree order")
    p_ex.add_argument("--p", required=True, type=int, help="host order")
    p_ex.add_argument("--witness", action="store_true", help="realize and print the witness")
    p_ex.add_argument("--json", action="store_true")
    p_ex.set_defaults(fn=_cmd_ex)

    p_ram = sub.add_parser("ramsey", help="Ramsey number via the rule table")
    p_ram.add_argument("--left", required=True, metavar="FAMILY:M")
    p_ram.add_argument("--right", required=True, metavar="FAMILY:N")
    p_ram.add_argument("--witness", action="store_true")
    p_ram.add_argument("--json", action="store_true")
    p_ram.set_defaults(fn=_cmd_ramsey)

    p_con = sub.add_parser("construct", help="emit witness graphs as graph6")
    con_sub = p_con.add_subparsers(dest="what", required=True)
    c_ex = con_sub.add_parser("extremal")
    c_ex.add_argument("--family", required=True, choices=FAMILIES)
    c_ex.add_argument("--n", required=True, type=int)
    c_ex.add_argument("--p", required=True, type=int)
    c_ex.add_argument("--json", action="store_true")
    c_rw = con_sub.add_parser("ramsey-witness")
    c_rw.add_argument("--left", required=True, metavar="FAMILY:M")
    c_rw.add_argument("--right", required=True, metavar="FAMILY:N")
    c_rw.add_argument("--json", action="store_true")
    c_nr = con_sub.add_parser("near-regular")
    c_nr.add_argument("--p", required=True, type=int)
    c_nr.add_argument("--d", required=True, type=int)
    c_nr.add_argument("--json", action="store_true")
    p_con.set_defaults(fn=_cmd_construct)

    p_chk = sub.add_parser("check", help="test graph6 input for a forbidden tree")
    p_chk.add_argument("--graph", default="-", help="graph6 file, '-' for stdin")
    p_chk.add_argument("--avoid", required=True, metavar="FAMILY:N")
    p_chk.set_defaults(fn=_cmd_check)

    p_or = sub.add_parser("oracle", help="exhaustive searches at small order")
    or_sub = p_or.add_subparsers(dest="oracle_what", required=True)
    o_ex = or_sub.add_parser("ex")
    o_ex.add_argument("--family", required=True, choices=FAMILIES)
    o_ex.add_argument("--n", required=True, type=int)
    o_ex.add_argument("--p", required=True, type=int)
    o_ex.add_argument("--connected", action="store_true")
    o_ram = or_sub.add_parser("ramsey")
    o_ram.add_argument("--left", required=True, metavar="FAMILY:M")
    o_ram.add_argument("--right", required=True, metavar="FAMILY:N")
    o_ram.add_argument("--order", required=True, type=int)
    o_lem = or_sub.add_parser("lemmas")
    o_lem.add_argument("--max-p", required=True, type=int, dest="max_p")
    for sp in (o_ex, o_ram, o_lem):
        sp.add_argument("--max-order", type=int, dest="max_order")
        sp.add_argument("--time-limit", type=float, dest="time_limit")
        sp.add_argument("--json", action="store_true")
    p_or.set_defaults(fn=_cmd_oracle)

    p_self = sub.add_parser("selftest", help="run the acceptance criteria")
    p_self.add_argument("--only", help="comma-separated criterion numbers")
    p_self.set_defaults(fn=_cmd_selftest)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.fn(args)
    except BudgetExceededError as exc:
        print(f"budget exceeded: {exc}", file=sys.stderr)
        return 3
    except Graph6Error as exc:
        print(f"input error: {exc}", file=sys.stderr)
        return 2
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except RuntimeError as exc:
        print(f"verification failed: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
