"""Decompositions of generalized Dyck paths and Kostka-cone lattice points."""

from .catalan import (
    Decomposition,
    ParseError,
    RunProfile,
    SignedList,
    complement,
    cost,
    is_generalized_catalan,
    is_valid_decomposition,
    prefix_sums,
    run_profile,
    sublist,
    width,
)
from .kostka import (
    ColumnSplit,
    KostkaIrreducible,
    KostkaPair,
    Partition,
    column_vector,
    common_reduce,
    conjugate,
    dominates,
    restrict_columns,
    split_pair,
    verify_column_split,
)
from .oracle import (
    BudgetExceededError,
    SearchBudget,
    all_catalan_subsets,
    enumerate_hilbert_basis,
    kostka_reducible_bruteforce,
    reducible_bruteforce,
)
from .reducer import (
    DEFAULT_SEARCH_LIMIT,
    Irreducible,
    PhaseProfile,
    ReduceOutcome,
    Undecided,
    phase_profile,
    reduce,
    reduce_equality,
    reduce_strict,
    reduce_y1,
)
from .render import path_points, render_svg
from .staircase import (
    GreedyPermutation,
    build_pi,
    build_sigma,
    check_order_transfer,
    restrict_through,
)

__version__ = "0.1.0"

__all__ = [
    "BudgetExceededError",
    "ColumnSplit",
    "Decomposition",
    "DEFAULT_SEARCH_LIMIT",
    "GreedyPermutation",
    "Irreducible",
    "KostkaIrreducible",
    "KostkaPair",
    "ParseError",
    "Partition",
    "PhaseProfile",
    "ReduceOutcome",
    "RunProfile",
    "SearchBudget",
    "SignedList",
    "Undecided",
    "all_catalan_subsets",
    "build_pi",
    "build_sigma",
    "check_order_transfer",
    "column_vector",
    "common_reduce",
    "complement",
    "conjugate",
    "cost",
    "dominates",
    "enumerate_hilbert_basis",
    "is_generalized_catalan",
    "is_valid_decomposition",
    "kostka_reducible_bruteforce",
    "path_points",
    "phase_profile",
    "prefix_sums",
    "reduce",
    "reduce_equality",
    "reduce_strict",
    "reduce_y1",
    "reducible_bruteforce",
    "render_svg",
    "restrict_columns",
    "restrict_through",
    "run_profile",
    "split_pair",
    "sublist",
    "verify_column_split",
    "width",
]
