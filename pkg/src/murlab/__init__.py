"""Exact computation and certification of the minimum universal rank of graphs."""

from .engine import (
    Budget,
    Certificate,
    MurResult,
    ParamPoint,
    PRESETS,
    SpreadResult,
    complement_params,
    compute_mur,
    mur_lower,
    mur_spread,
    mur_upper,
    regular_mur,
    family_mur,
    spread_bounds,
    symbolic_universal_matrix,
    universal_matrix,
)
from .fixtures import FIXTURE_NAMES, verify_fixture
from .graphs import Graph, GraphError, Graph6Error, encode_graph6, parse_edge_list, parse_graph6
from .report import build_report, parse_report, replay_report, report_to_json

__all__ = [
    "Budget",
    "Certificate",
    "FIXTURE_NAMES",
    "Graph",
    "Graph6Error",
    "GraphError",
    "MurResult",
    "PRESETS",
    "ParamPoint",
    "SpreadResult",
    "build_report",
    "complement_params",
    "compute_mur",
    "encode_graph6",
    "family_mur",
    "mur_lower",
    "mur_spread",
    "mur_upper",
    "parse_edge_list",
    "parse_graph6",
    "parse_report",
    "regular_mur",
    "replay_report",
    "report_to_json",
    "spread_bounds",
    "symbolic_universal_matrix",
    "universal_matrix",
    "verify_fixture",
]

__version__ = "0.1.0"
