"""One entry point over every MAL algorithm, with mandatory self-verification."""
from __future__ import annotations

import json
import time
from dataclasses import asdict, dataclass

from .approx import label_3half, label_5thirds, label_trivial
from .dcss import SOLVERS, solve_mal_via_dcss
from .errors import InfeasibleError
from .exact import ExactBudget, exact_mal
from .folklore import EXACT, label_2r, label_2r_plus_1, label_optimal_large_age
from .graph import Graph, is_connected, metrics
from .temporal import Labeling, TemporalGraph, is_temporally_connected

HEURISTIC = "heuristic"

ALGORITHMS = (
    "trivial", "folklore-2r", "folklore-2r1", "large-age", "three-half", "five-thirds",
    *(f"via-dcss:{name}" for name in SOLVERS), "exact",
)


@dataclass
class SolveReport:
    algorithm: str
    labelCount: int
    lifetime: int
    ageBudget: int
    feasible: bool
    optimalityFlag: str
    wallTimeMs: int

    def to_json(self) -> str:
        return json.dumps(asdict(self))


def run_algorithm(g: Graph, a: int, algo: str,
                  budget: ExactBudget = ExactBudget()) -> tuple[Labeling, str]:
    """Return (labeling, optimality flag); the labeling is not yet verified."""
    if algo == "trivial":
        return label_trivial(g), HEURISTIC
    if algo == "folklore-2r":
        return label_2r(g), HEURISTIC
    if algo == "folklore-2r1":
        return label_2r_plus_1(g), HEURISTIC
    if algo == "large-age":
        res = label_optimal_large_age(g, a)
        return res.labeling, res.flag
    if algo == "three-half":
        return label_3half(g), HEURISTIC
    if algo == "five-thirds":
        return label_5thirds(g), HEURISTIC
    if algo.startswith("via-dcss:"):
        name = algo.split(":", 1)[1]
        if name not in SOLVERS:
            raise ValueError(f"unknown DCSS solver {name!r}; choose from {sorted(SOLVERS)}")
        return solve_mal_via_dcss(g, a, SOLVERS[name]), HEURISTIC
    if algo == "exact":
        return exact_mal(g, a, budget), EXACT
    raise ValueError(f"unknown algorithm {algo!r}; choose from {', '.join(ALGORITHMS)}")


def solve(g: Graph, a: int, algo: str,
          budget: ExactBudget = ExactBudget()) -> tuple[Labeling, SolveReport]:
    """Run algo and verify its output against the age budget.

    Raises InfeasibleError when no labeling can exist (disconnected graph or
    a < D) or when the algorithm's own precondition on a fails.
    """
    if g.directed:
        raise ValueError("solve handles undirected graphs only")
    if not is_connected(g):
        raise InfeasibleError("graph is disconnected, no labeling is temporally connected")
    diam = metrics(g).diameter
    if a < diam:
        raise InfeasibleError(f"age {a} is below the diameter {diam}")
    start = time.perf_counter()
    lab, flag = run_algorithm(g, a, algo, budget)
    ms = int((time.perf_counter() - start) * 1000)
    feasible = bool(is_temporally_connected(TemporalGraph(g, lab), a))
    return lab, SolveReport(algo, lab.total, lab.lifetime, a, feasible, flag, ms)
