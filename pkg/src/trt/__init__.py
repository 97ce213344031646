"""trt: extremal edge counts and Ramsey numbers for six parametric tree
families, their verified extremal and lower-bound constructions, and
exhaustive small-scale oracles for cross-checking everything."""

from .containment import Embedding, TreeMatcher, contains_subgraph, is_connected, max_degree
from .graph import (
    MAX_ORDER,
    CliquePart,
    DegreeSeqPart,
    Graph,
    Graph6Error,
    WitnessDescriptor,
    complement,
    complete,
    complete_bipartite,
    decode_graph6,
    disjoint_union,
    empty,
    encode_graph6,
    from_edges,
)
from .oracle import (
    ArrowingResult,
    BudgetExceededError,
    OracleBudget,
    OracleExResult,
    canonical_graphs,
    count_graphs,
    ex_oracle,
    ramsey_oracle,
    verify_connected_extremal,
    verify_structural_lemmas,
)
from .ramsey import (
    RamseyAnswer,
    RULE_PRIORITY,
    degree_lower_bound,
    ramsey_upper_via_turan,
    ramsey_value,
)
from .trees import FAMILIES, TreeSpec, make_tree, parse_tree_spec, tree_max_degree
from .turan import ExResult, ex_bounds, ex_case_explain, ex_value
from .witness import (
    extremal_witness,
    frobenius_rep,
    havel_hakimi,
    near_regular,
    ramsey_witness,
    realize_witness,
)

__version__ = "0.1.0"

__all__ = [
    "MAX_ORDER",
    "Graph",
    "Graph6Error",
    "CliquePart",
    "DegreeSeqPart",
    "WitnessDescriptor",
    "empty",
    "from_edges",
    "complete",
    "complete_bipartite",
    "disjoint_union",
    "complement",
    "encode_graph6",
    "decode_graph6",
    "FAMILIES",
    "TreeSpec",
    "make_tree",
    "parse_tree_spec",
    "tree_max_degree",
    "Embedding",
    "TreeMatcher",
    "contains_subgraph",
    "max_degree",
    "is_connected",
    "ExResult",
    "ex_value",
    "ex_bounds",
    "ex_case_explain",
    "RamseyAnswer",
    "RULE_PRIORITY",
    "ramsey_value",
    "ramsey_upper_via_turan",
    "degree_lower_bound",
    "havel_hakimi",
    "near_regular",
    "realize_witness",
    "frobenius_rep",
    "extremal_witness",
    "ramsey_witness",
    "OracleBudget",
    "OracleExResult",
    "ArrowingResult",
    "BudgetExceededError",
    "canonical_graphs",
    "count_graphs",
    "ex_oracle",
    "ramsey_oracle",
    "verify_structural_lemmas",
    "verify_connected_extremal",
    "__version__",
]
