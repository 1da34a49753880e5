"""Win-move games, grounded argumentation, and their explanations."""

from ._backend import NAME as BACKEND
from .af import (
    ArgLabel,
    GroundedLabeling,
    af_to_game,
    characteristic_function,
    game_to_af,
    grounded_extension_lfp,
    grounded_labeling,
)
from .export import export_dot, export_json
from .graph import (
    ArgumentationFramework,
    GameGraph,
    ParseError,
    UnknownNodeError,
    ValidationError,
    format_apx,
    format_edge_list,
    parse_apx,
    parse_edge_list,
)
from .provenance import ProvenanceSubgraph, explain_argument, provenance_subgraph
from .solver import (
    INF,
    EdgeType,
    SolvedGame,
    SolverInvariantError,
    Status,
    classify_edges,
    good_moves,
    solve,
)
from .stable import (
    Kernel,
    SizeLimitError,
    StableSolution,
    enumerate_kernels,
    stable_extensions,
    stable_models,
    wfs_stable_report,
)

__all__ = [name for name in dir() if not name.startswith("_")]
