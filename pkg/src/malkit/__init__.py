"""Temporal-connectivity labelings of graphs with few labels and a bounded lifetime."""
from .errors import BudgetExceeded, DisconnectedError, GraphError, InfeasibleError, MalError, ParseError
from .graph import Graph, metrics, parse_graph, format_graph
from .temporal import Labeling, TemporalGraph, is_temporally_connected
from .exact import ExactBudget, exact_mal, exact_dcss
from .folklore import label_2r, label_2r_plus_1, label_optimal_large_age
from .approx import label_trivial, label_3half, label_5thirds
from .dcss import dcss_to_mal, mal_to_dcss, plus2_spanner
from .solve import SolveReport, solve

__version__ = "0.1.0"
