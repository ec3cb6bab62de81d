from collections import deque
from typing import Dict, FrozenSet, Iterable, List, Set, Tuple

from leafspan.exceptions import InputError, UnknownVertex
from leafspan.graph.core import Edge, Graph, SpanningForest, edge


def component_of(g: Graph, start: int, blocked: Iterable[int] = ()) -> Set[int]:
    """Vertices reachable from ``start`` without passing through ``blocked``."""
    if start not in g:
        raise UnknownVertex(f"vertex {start} is not in the graph")
    blocked = set(blocked)
    seen = {start}
    queue = deque([start])
    while queue:
        v = queue.popleft()
        for w in g.neighbors(v):
            if w not in seen and w not in blocked:
                seen.add(w)
                queue.append(w)
    return seen


def connected_components(g: Graph) -> List[Set[int]]:
    """Components ordered by their smallest vertex id."""
    components = []
    seen: Set[int] = set()
    for v in g.vertices():
        if v not in seen:
            component = component_of(g, v)
            seen |= component
            components.append(component)
    return components


def is_connected(g: Graph) -> bool:
    if g.v == 0:
        return False
    return len(component_of(g, min(g.adjacency))) == g.v


def _lowpoints(g: Graph) -> Tuple[FrozenSet[int], FrozenSet[Edge]]:
    # iterative DFS, the recursion limit is too low for long paths
    disc: Dict[int, int] = {}
    low: Dict[int, int] = {}
    cut: Set[int] = set()
    bridges: Set[Edge] = set()
    counter = 0
    for root in g.vertices():
        if root in disc:
            continue
        disc[root] = low[root] = counter
        counter += 1
        root_children = 0
        stack = [(root, -1, iter(sorted(g.neighbors(root))))]
        while stack:
            v, parent, neighbours = stack[-1]
            descended = False
            for w in neighbours:
                if w not in disc:
                    disc[w] = low[w] = counter
                    counter += 1
                    stack.append((w, v, iter(sorted(g.neighbors(w)))))
                    descended = True
                    break
                if w != parent:
                    low[v] = min(low[v], disc[w])
            if descended:
                continue
            stack.pop()
            if not stack:
                continue
            p = stack[-1][0]
            low[p] = min(low[p], low[v])
            if low[v] > disc[p]:
                bridges.add(edge(p, v))
            if p == root:
                root_children += 1
            elif low[v] >= disc[p]:
                cut.add(p)
        if root_children > 1:
            cut.add(root)
    return frozenset(cut), frozenset(bridges)


def cutpoints(g: Graph) -> FrozenSet[int]:
    """Vertices whose removal increases the number of components."""
    return _lowpoints(g)[0]


def bridges(g: Graph) -> FrozenSet[Edge]:
    """Edges whose removal disconnects their component."""
    return _lowpoints(g)[1]


def is_biconnected(g: Graph) -> bool:
    """
    Connected and free of cutpoints. A single edge counts as biconnected.

    Raises
    ------
    InputError
        The graph has fewer than two vertices
    """
    if g.v < 2:
        raise InputError("biconnectivity needs at least two vertices")
    return is_connected(g) and not cutpoints(g)


def check_tree(g: Graph, tree: SpanningForest) -> Tuple[int, bool]:
    """
    Independent check that ``tree`` is a spanning tree of ``g``.

    Returns
    -------
    Tuple[int, bool]
        The leaf count of ``tree`` and whether it spans ``g``, is acyclic
        and connected, and uses graph edges only
    """
    leaves = tree.leaves
    if tree.vertices != frozenset(g.adjacency):
        return leaves, False
    if any(not g.has_edge(u, v) for u, v in tree.edges):
        return leaves, False
    if g.v == 1:
        return leaves, not tree.edges
    return leaves, tree.components == 1
