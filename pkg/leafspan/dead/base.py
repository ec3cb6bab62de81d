import logging
from collections import deque
from fractions import Fraction
from typing import Dict, FrozenSet, List, Set, Tuple

import attr

from leafspan.cost import DegreeClasses, graph_cost
from leafspan.dead.forest import ForestState, potential
from leafspan.exceptions import BaseInvariantError
from leafspan.graph import Edge, Graph, SpanningForest, connected_components, edge
from leafspan.reductions import find_reduction

log = logging.getLogger(__name__)

STAR_ALPHA = Fraction(5, 3)
COMPONENT_ALPHA = Fraction(2)
TERMINAL_MARGIN = Fraction(23, 12)


@attr.s(slots=True, frozen=True)
class BaseStats:
    """Counts describing one component of the bipartite core."""

    w2: int = attr.ib()
    w3: int = attr.ib()
    y3: int = attr.ib()
    y4: int = attr.ib()
    x: int = attr.ib()
    k: int = attr.ib()
    k2: int = attr.ib()
    pendants: int = attr.ib()

    def check(self) -> None:
        """
        Raises
        ------
        BaseInvariantError
            One of the counting inequalities fails
        """
        w2, w3, y3, y4, x, k = self.w2, self.w3, self.y3, self.y4, self.x, self.k
        failures = []
        if self.pendants != w2 + w3:
            failures.append("|U'| = w2 + w3")
        if 7 * x > 2 * w2 + 3 * w3 + 3 * y3 + 4 * y4:
            failures.append("7x <= 2w2 + 3w3 + 3y3 + 4y4")
        if 2 * k > x:
            failures.append("2k <= x")
        if 3 * k > x + w2:
            failures.append("3k <= x + w2")
        if 12 * k > 5 * x + 2 * w2:
            failures.append("12k <= 5x + 2w2")
        if w2 + w3 + y3 + y4 < 7:
            failures.append("w2 + w3 + y3 + y4 >= 7")
        if self.k2 > w2:
            failures.append("k2 <= w2")
        if failures:
            raise BaseInvariantError(f"base component {self} breaks {', '.join(failures)}")


def check_pendant_structure(g: Graph, classes: DegreeClasses) -> None:
    """
    What an irreducible graph with pendant vertices must look like:
    X is independent with degrees of at least 7, W is independent with
    degrees of at most 4 and every vertex of W carries one pendant.

    Raises
    ------
    BaseInvariantError
    """
    for x in classes.X:
        if g.degree(x) < 7 or g.neighbors(x) & classes.X:
            raise BaseInvariantError(f"vertex {x} of X has degree {g.degree(x)} or an X neighbour")
    for w in classes.W:
        if g.degree(w) > 4 or g.neighbors(w) & classes.W:
            raise BaseInvariantError(f"vertex {w} of W has degree {g.degree(w)} or a W neighbour")
        if len(g.neighbors(w) & classes.U) != 1:
            raise BaseInvariantError(f"vertex {w} of W carries several pendants")


def star_base(g: Graph) -> ForestState:
    """A vertex of degree four or more joined to its four lowest neighbours."""
    a = min(v for v in g.adjacency if g.degree(v) >= 4)
    tips = sorted(g.neighbors(a))[:4]
    forest = SpanningForest(vertices=[a] + tips, edges=[(a, t) for t in tips])
    state = ForestState.create(g, forest, "B1")
    if state.alpha < STAR_ALPHA:
        raise BaseInvariantError(f"star at {a} has potential {state.alpha}")
    log.debug("star base at %d, alpha %s", a, state.alpha)
    return state


def _bipartite_core(g: Graph, classes: DegreeClasses) -> Graph:
    hub = classes.W | classes.X
    keep = hub | classes.U | classes.Y
    core = g.induced(keep)
    loose = [(u, v) for u, v in core.edges() if u not in hub and v not in hub]
    return core.delete_edges(loose)


def _bfs_forest(g: Graph, vertices: Set[int]) -> List[Edge]:
    seen: Set[int] = set()
    edges = []
    for root in sorted(vertices):
        if root in seen:
            continue
        seen.add(root)
        queue = deque([root])
        while queue:
            v = queue.popleft()
            for w in sorted(g.neighbors(v)):
                if w in vertices and w not in seen:
                    seen.add(w)
                    edges.append(edge(v, w))
                    queue.append(w)
    return edges


def _component_tree(
    core: Graph, part: Set[int], classes: DegreeClasses
) -> Tuple[SpanningForest, BaseStats]:
    W, X = part & classes.W, part & classes.X
    Y, U = part & classes.Y, part & classes.U

    edges = _bfs_forest(core, W | X)
    edges += [edge(u, next(iter(core.neighbors(u)))) for u in sorted(U)]
    edges += [edge(y, min(core.neighbors(y) & X)) for y in sorted(Y)]

    # union the Y-X edges that still join components of the forest
    parent: Dict[int, int] = {v: v for v in part}

    def find(v: int) -> int:
        while parent[v] != v:
            parent[v] = parent[parent[v]]
            v = parent[v]
        return v

    for u, v in edges:
        parent[find(u)] = find(v)
    inner = core.induced(part - Y)
    groups = [set(c) for c in connected_components(inner)]
    for y in sorted(Y):
        for x in sorted(core.neighbors(y) & X):
            ry, rx = find(y), find(x)
            if ry != rx:
                parent[ry] = rx
                edges.append(edge(y, x))

    seen_x = [len(c & X) for c in groups]
    stats = BaseStats(
        w2=sum(1 for w in W if len(core.neighbors(w) & X) == 2),
        w3=sum(1 for w in W if len(core.neighbors(w) & X) == 3),
        y3=sum(1 for y in Y if len(core.neighbors(y) & X) <= 3),
        y4=sum(1 for y in Y if len(core.neighbors(y) & X) == 4),
        x=len(X),
        k=len(groups),
        k2=seen_x.count(2),
        pendants=len(U),
    )
    if stats.w2 + stats.w3 != len(W):
        raise BaseInvariantError("a vertex of W does not see two or three vertices of X")
    if stats.y3 + stats.y4 != len(Y):
        raise BaseInvariantError("a vertex of Y sees more than four vertices of X")
    return SpanningForest(vertices=part, edges=edges), stats


def core_base(g: Graph, classes: DegreeClasses) -> ForestState:
    """
    One tree per component of the bipartite core around the pendant
    vertices, each with potential at least 2.

    When the core is the whole graph and has no Y vertices the tree is
    already a spanning tree with at least c(G) + 23/12 leaves.
    """
    check_pendant_structure(g, classes)
    core = _bipartite_core(g, classes)
    trees: List[SpanningForest] = []
    for part in connected_components(core):
        tree, stats = _component_tree(core, part, classes)
        stats.check()
        if not part & classes.Y:
            if len(part) != g.v:
                raise BaseInvariantError("a core component without Y vertices is not the whole graph")
            if tree.leaves < graph_cost(g) + TERMINAL_MARGIN:
                raise BaseInvariantError(f"terminal tree has only {tree.leaves} leaves")
            log.debug("core base covers the graph: %s", stats)
            return ForestState.create(g, tree, "B2.terminal")
        alpha = potential(g, tree)
        if alpha < COMPONENT_ALPHA:
            raise BaseInvariantError(f"core tree {stats} has potential {alpha}")
        trees.append(tree)

    vertices: FrozenSet[int] = frozenset().union(*(t.vertices for t in trees))
    edges = frozenset().union(*(t.edges for t in trees))
    state = ForestState.create(g, SpanningForest(vertices=vertices, edges=edges), "B2")
    if state.alpha < COMPONENT_ALPHA:
        raise BaseInvariantError(f"core forest has potential {state.alpha}")
    log.debug("core base with %d trees, alpha %s", len(trees), state.alpha)
    return state


def build_base(g: Graph, classes: DegreeClasses, checked: bool = False) -> ForestState:
    """
    The starting forest of the growth phase.

    Parameters
    ----------
    g: Graph
        A connected graph no reduction applies to
    classes: DegreeClasses
        ``classify(g)``
    checked: bool
        Skip the test that no reduction applies, when the caller just ran it

    Raises
    ------
    BaseInvariantError
        A reduction still applies, the graph is cubic, or a base
        inequality fails
    """
    if not checked and find_reduction(g) is not None:
        raise BaseInvariantError("a reduction applies, no base forest is needed")
    if classes.U:
        return core_base(g, classes)
    if not classes.T:
        raise BaseInvariantError("cubic graphs are grown by the cubic procedure")
    return star_base(g)
