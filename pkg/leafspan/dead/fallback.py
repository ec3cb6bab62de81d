import logging
from fractions import Fraction
from typing import Dict, List, Optional, Set

import networkx as nx

from leafspan.cost import BASE_BONUS, graph_cost
from leafspan.dead.forest import ForestState
from leafspan.exceptions import OracleTooLarge, ProfitBelowBound
from leafspan.graph import Edge, Graph, SpanningForest, edge

log = logging.getLogger(__name__)


def _lookahead(g: Graph, inside: Set[int], y: int) -> int:
    return len(g.neighbors(y) - inside)


def expand(g: Graph, root: int) -> SpanningForest:
    """
    Greedy leafy spanning tree grown from ``root``.

    Every round expands the tree vertex whose outside neighbours bring
    the most new leaves. A leaf with a single outside neighbour ``y`` is
    scored by what expanding ``y`` next would bring, and both are then
    expanded together.
    """
    inside: Set[int] = {root}
    degree: Dict[int, int] = {root: 0}
    edges: List[Edge] = []

    def attach(v: int) -> None:
        for w in sorted(g.neighbors(v) - inside):
            inside.add(w)
            degree[w] = 1
            degree[v] += 1
            edges.append(edge(v, w))

    attach(root)
    while len(inside) < g.v:
        best, best_score, reach = None, None, None
        for v in sorted(inside):
            outside = g.neighbors(v) - inside
            if not outside:
                continue
            if degree[v] != 1:
                score, via = len(outside), None
            elif len(outside) >= 2:
                score, via = len(outside) - 1, None
            else:
                (y,) = outside
                further = _lookahead(g, inside | {y}, y)
                score, via = max(further - 1, 0), y
            if best_score is None or score > best_score:
                best, best_score, reach = v, score, via
        attach(best)
        if reach is not None:
            attach(reach)
    return SpanningForest(vertices=g.adjacency, edges=edges)


def improve(g: Graph, tree: SpanningForest) -> SpanningForest:
    """Swaps a tree edge for a chord while that adds leaves."""
    t = nx.Graph(sorted(tree.edges))
    t.add_nodes_from(g.adjacency)
    improved = True
    while improved:
        improved = False
        degree = dict(t.degree())
        for a, b in g.edges():
            if t.has_edge(a, b):
                continue
            cycle = nx.shortest_path(t, a, b)
            for p, q in zip(cycle, cycle[1:]):
                changed = {a: degree[a] + 1, b: degree[b] + 1}
                for v in (p, q):
                    changed[v] = changed.get(v, degree[v]) - 1
                gain = sum((d == 1) - (degree[v] == 1) for v, d in changed.items())
                if gain > 0:
                    t.remove_edge(p, q)
                    t.add_edge(a, b)
                    improved = True
                    break
            if improved:
                break
    return SpanningForest(vertices=g.adjacency, edges=t.edges())


def leafy_tree(g: Graph, target: Fraction) -> SpanningForest:
    """
    The leafiest greedy tree over all roots, highest degree first.

    Stops at the first tree with at least ``target`` leaves.
    """
    best: Optional[SpanningForest] = None
    for root in sorted(g.adjacency, key=lambda v: (-g.degree(v), v)):
        tree = improve(g, expand(g, root))
        if best is None or tree.leaves > best.leaves:
            best = tree
        if best.leaves >= target:
            break
    return best


def fallback(g: Graph, reason: str) -> ForestState:
    """
    A spanning tree for a graph the reductions and bases do not cover.

    The greedy tree is kept only when it reaches c(G) + 3/2 leaves. Otherwise
    the exact tree is searched for within the oracle budget.

    Raises
    ------
    ProfitBelowBound
        Neither the greedy tree nor the oracle reached the bound
    """
    bound = graph_cost(g) + BASE_BONUS
    log.warning("no base fits the %d-vertex graph (%s), using a greedy tree", g.v, reason)
    tree = leafy_tree(g, bound)
    if tree.leaves >= bound:
        return ForestState.create(g, tree, "fallback.greedy")

    from leafspan.oracle import max_leaf_exact

    try:
        exact = max_leaf_exact(g, capped=False)
    except OracleTooLarge as exc:
        raise ProfitBelowBound(
            f"greedy tree has {tree.leaves} leaves, bound is {bound}, oracle gave up: {exc}"
        ) from exc
    log.warning("greedy tree missed the bound on %d vertices, using the exact tree", g.v)
    return ForestState.create(g, exact.witness, "fallback.exact")
