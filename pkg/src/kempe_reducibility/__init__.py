"""Kempe-chain reducibility of subcubic plane patterns for 3-edge-coloring."""
from .coloring import compute_gamma0, extendable_by_enumeration, is_extendable, is_proper
from .kempe import (
    AuxiliaryGraph,
    boundary_switch_pair,
    boundary_switch_single,
    brute_force_quasimatching,
    build_auxiliary_graph,
    has_noncrossing_perfect_quasimatching,
    is_reducible_to,
)
from .library import all_builtins, builtin
from .pattern import (
    Pattern,
    PatternError,
    PatternSyntaxError,
    PatternValidationError,
    canonical_representative,
    enumerate_class_representatives,
    line_graph,
    load_pattern,
    parse_pattern,
)
from .ranks import RankTable, Verdict, compute_ranks, is_reducible_pattern, rank_histogram_table

__version__ = "0.1.0"
