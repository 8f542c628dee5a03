"""Exact weighted colouring-sum solver and audit harness for cycle-derived
graph families (wheels, double wheels, helms, closed helms, sunlets, webs)."""

from .coloring import (
    Coloring,
    Partition,
    coloring_sum,
    is_b_colouring,
    is_b_vertex,
    is_proper,
    optimal_labeling,
    theta,
)
from .families import Family, build, make, parse_family
from .formulas import coverage_table, predict
from .graphs import Graph, VertexRole
from .oracle import brute_force_oracle
from .solvers import (
    QUANTITIES,
    BudgetExhausted,
    SearchBudget,
    SumResult,
    b_chromatic_number,
    b_sum,
    chi_sum,
    chromatic_number,
    m_bound,
    solve,
)
from .verification import ResultsCache, VerificationRow, render_report, run_campaign

__all__ = [
    "Coloring",
    "Partition",
    "coloring_sum",
    "is_b_colouring",
    "is_b_vertex",
    "is_proper",
    "optimal_labeling",
    "theta",
    "Family",
    "build",
    "make",
    "parse_family",
    "coverage_table",
    "predict",
    "Graph",
    "VertexRole",
    "brute_force_oracle",
    "QUANTITIES",
    "BudgetExhausted",
    "SearchBudget",
    "SumResult",
    "b_chromatic_number",
    "b_sum",
    "chi_sum",
    "chromatic_number",
    "m_bound",
    "solve",
    "ResultsCache",
    "VerificationRow",
    "render_report",
    "run_campaign",
]
