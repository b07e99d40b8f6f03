"""Hypergraph coloring algorithms with certified lower bounds.

The package turns two kinds of probabilistic existence arguments into
working code: randomized colorers whose success is guaranteed under
explicit edge-count preconditions, and a recursive table of chromatic
bounds that certifies how many edges a hypergraph must have before r
colors can fail, including an exact rational constant for the
3-uniform case.
"""

from .chains import (
    ChainCertificate,
    OrderStats,
    PluharResult,
    SequenceStats,
    is_ordered_chain,
    longest_ordered_chain,
    monte_carlo_order,
    order_from_coloring,
    ordered_chain_probability,
    ordered_fraction_monte_carlo,
    pluhar_color,
)
from .bounds import (
    BoundTable,
    WindowConstant,
    alon_lower_bound,
    best_alon_lower_bound,
    bound_report,
    build_table,
    check_table_soundness,
    closed_form_bounds,
    erdos_upper_bound,
    extend_table,
    pluhar_threshold,
    scan_window_constant,
    seed_table,
    table_m_lower_bound,
    value_thresholds,
    window_constant,
)
from .colorers import (
    AlonResult,
    IndependentSetResult,
    PeelResult,
    RandomizedRunConfig,
    alon_edge_limit,
    alon_recolor,
    degree_sum_target,
    peel_color,
    weighted_independent_set,
)
from .core import (
    Coloring,
    Hypergraph,
    VertexOrder,
    chain_blocks,
    complete,
    degrees,
    fano,
    generate,
    induced,
    is_proper,
    random_uniform,
)
from .errors import BudgetExceededError, InvalidInstanceError, RestartsExhaustedError
from .exact import (
    SolveBudget,
    SolveOutcome,
    chromatic_number,
    is_r_colorable,
    longest_chain_by_enumeration,
    solve_coloring,
)

__version__ = "0.1.0"

__all__ = [
    "AlonResult",
    "BoundTable",
    "BudgetExceededError",
    "ChainCertificate",
    "Coloring",
    "Hypergraph",
    "IndependentSetResult",
    "InvalidInstanceError",
    "OrderStats",
    "PeelResult",
    "PluharResult",
    "RandomizedRunConfig",
    "RestartsExhaustedError",
    "SequenceStats",
    "SolveBudget",
    "SolveOutcome",
    "VertexOrder",
    "WindowConstant",
    "alon_edge_limit",
    "alon_lower_bound",
    "alon_recolor",
    "best_alon_lower_bound",
    "bound_report",
    "build_table",
    "chain_blocks",
    "check_table_soundness",
    "chromatic_number",
    "closed_form_bounds",
    "complete",
    "degree_sum_target",
    "degrees",
    "erdos_upper_bound",
    "extend_table",
    "fano",
    "generate",
    "induced",
    "is_ordered_chain",
    "is_proper",
    "is_r_colorable",
    "longest_chain_by_enumeration",
    "longest_ordered_chain",
    "monte_carlo_order",
    "order_from_coloring",
    "ordered_chain_probability",
    "ordered_fraction_monte_carlo",
    "peel_color",
    "pluhar_color",
    "pluhar_threshold",
    "random_uniform",
    "scan_window_constant",
    "seed_table",
    "solve_coloring",
    "table_m_lower_bound",
    "value_thresholds",
    "weighted_independent_set",
    "window_constant",
    "__version__",
]
