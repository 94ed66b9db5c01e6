"""
Maximum independent sets in conflict graphs.

The conflict graph is split into connected components with networkx; each
component with an edge becomes a CP-SAT model (one boolean per vertex, one
`x + y <= 1` per conflict, maximize the sum). The solver runs on a single
worker with a fixed seed so results are reproducible.
"""
from dataclasses import dataclass, field
from time import monotonic
from typing import Iterable, List, Optional, Sequence, Tuple

import networkx as nx
import structlog
from ortools.sat.python import cp_model

logger = structlog.get_logger()


@dataclass
class IndependentSet:
    chosen: List[int] = field(default_factory=list)
    optimal: bool = True
    components: int = 0

    @property
    def size(self) -> int:
        return len(self.chosen)


def _solve_component(
    nodes: List[int],
    edges: List[Tuple[int, int]],
    time_budget: float,
    seed: int,
    hint: Optional[set],
) -> Tuple[List[int], bool]:
    model = cp_model.CpModel()
    variables = {node: model.NewBoolVar(f"x_{node}") for node in nodes}
    for u, v in edges:
        model.Add(variables[u] + variables[v] <= 1)
    model.Maximize(sum(variables.values()))
    if hint:
        for node in nodes:
            model.AddHint(variables[node], 1 if node in hint else 0)

    solver = cp_model.CpSolver()
    solver.parameters.max_time_in_seconds = max(time_budget, 0.1)
    solver.parameters.num_workers = 1
    solver.parameters.random_seed = seed
    status = solver.Solve(model)

    if status in (cp_model.OPTIMAL, cp_model.FEASIBLE):
        chosen = [node for node in nodes if solver.Value(variables[node])]
        return chosen, status == cp_model.OPTIMAL
    logger.warning("mis_component_unsolved", nodes=len(nodes), status=solver.StatusName(status))
    return [], False


def _extend_greedily(count: int, graph: nx.Graph, chosen: Iterable[int]) -> List[int]:
    selected = set(chosen)
    for node in range(count):
        if node not in selected and not any(neighbor in selected for neighbor in graph.neighbors(node)):
            selected.add(node)
    return sorted(selected)


def max_independent_set(
    count: int,
    conflicts: Sequence[Tuple[int, int]],
    time_budget: float = 30.0,
    seed: int = 0,
    hint: Optional[Iterable[int]] = None,
) -> IndependentSet:
    """
    Largest set of vertices in range(count) with no conflict pair inside.

    Args:
        count: Number of vertices
        conflicts: Pairs that may not both be chosen
        time_budget: Seconds shared by all components
        seed: CP-SAT random seed
        hint: Optional known-good selection used as a solution hint

    Returns:
        IndependentSet; `optimal` is False when some component hit the budget,
        in which case the selection is extended greedily to inclusion-maximality
    """
    graph = nx.Graph()
    graph.add_nodes_from(range(count))
    graph.add_edges_from(conflicts)
    hint_set = set(hint) if hint is not None else None

    deadline = monotonic() + time_budget
    chosen: List[int] = []
    optimal = True
    components = sorted((sorted(c) for c in nx.connected_components(graph)), key=lambda c: c[0])
    for nodes in components:
        if len(nodes) == 1:
            chosen.extend(nodes)
            continue
        edges = list(graph.subgraph(nodes).edges())
        part, solved = _solve_component(nodes, edges, deadline - monotonic(), seed, hint_set)
        chosen.extend(part)
        optimal = optimal and solved

    if not optimal:
        chosen = _extend_greedily(count, graph, chosen)
    result = IndependentSet(chosen=sorted(chosen), optimal=optimal, components=len(components))
    logger.info("mis_solved", vertices=count, conflicts=len(conflicts), size=result.size, optimal=optimal)
    return result
