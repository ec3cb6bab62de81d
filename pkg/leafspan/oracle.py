import itertools
import logging
from collections import deque
from typing import FrozenSet, Optional, Set

import attr

from leafspan.cache import BoundedCache
from leafspan.config import get_settings
from leafspan.cost import bound_report
from leafspan.exceptions import DisconnectedGraph, NonExistentEntry, OracleTooLarge
from leafspan.graph import Graph, SpanningForest, cutpoints, edge, is_connected

log = logging.getLogger(__name__)

_results: Optional[BoundedCache] = None


def _cache() -> BoundedCache:
    global _results
    if _results is None:
        _results = BoundedCache(max_size=get_settings().oracle_cache_size)
    return _results


@attr.s(slots=True, frozen=True)
class OracleResult:
    u: int = attr.ib()
    witness: SpanningForest = attr.ib()
    explored: int = attr.ib()


def _dominates(g: Graph, chosen: FrozenSet[int]) -> bool:
    return all(v in chosen or g.neighbors(v) & chosen for v in g.adjacency)


def _connected_within(g: Graph, chosen: FrozenSet[int]) -> bool:
    start = min(chosen)
    seen = {start}
    queue = deque([start])
    while queue:
        v = queue.popleft()
        for w in g.neighbors(v) & chosen:
            if w not in seen:
                seen.add(w)
                queue.append(w)
    return len(seen) == len(chosen)


def _witness(g: Graph, chosen: FrozenSet[int]) -> SpanningForest:
    """BFS tree on the dominating set, every other vertex hung off it."""
    root = min(chosen)
    seen: Set[int] = {root}
    queue = deque([root])
    edges = []
    while queue:
        v = queue.popleft()
        for w in sorted(g.neighbors(v) & chosen):
            if w not in seen:
                seen.add(w)
                edges.append(edge(v, w))
                queue.append(w)
    for v in g.vertices():
        if v not in chosen:
            edges.append(edge(v, min(g.neighbors(v) & chosen)))
    return SpanningForest(vertices=g.adjacency, edges=edges)


def max_leaf_exact(g: Graph, limit: Optional[int] = None, capped: bool = True) -> OracleResult:
    """
    The maximum number of leaves over all spanning trees of ``g``.

    Internal vertices of a spanning tree form a connected dominating set,
    and every connected dominating set yields a tree with the rest as
    leaves, so u(G) = v(G) - minimum connected dominating set. Cutpoints
    are internal in every spanning tree and are always included; the
    remaining vertices are tried in subsets of increasing size.

    Parameters
    ----------
    g: Graph
        A connected graph on at least two vertices
    limit: int, optional
        Candidate sets to try before giving up.
        Defaults to ``Settings.oracle_budget``
    capped: bool
        Refuse graphs beyond the size caps; the budget always applies

    Raises
    ------
    DisconnectedGraph
    OracleTooLarge
        The graph exceeds the size caps or the candidate budget ran out
    """
    settings = get_settings()
    if g.v < 2 or not is_connected(g):
        raise DisconnectedGraph("the oracle needs a connected graph on at least two vertices")
    if capped and g.v > settings.oracle_max_vertices and g.e > settings.oracle_max_edges:
        raise OracleTooLarge(f"graph with v={g.v}, e={g.e} is beyond the oracle caps")

    key = g.canonical_key()
    try:
        return _cache().get_entry(key)
    except NonExistentEntry:
        pass

    if g.v == 2:
        result = OracleResult(u=2, witness=SpanningForest(g.adjacency, g.edges()), explored=0)
        _cache().add_entry(key, result)
        return result

    budget = settings.oracle_budget if limit is None else limit
    forced = cutpoints(g)
    free = sorted(set(g.adjacency) - forced)
    explored = 0
    for size in range(len(free) + 1):
        for extra in itertools.combinations(free, size):
            chosen = forced | frozenset(extra)
            if not chosen:
                continue
            explored += 1
            if explored > budget:
                raise OracleTooLarge(f"no answer within {budget} candidate sets")
            if _dominates(g, chosen) and _connected_within(g, chosen):
                witness = _witness(g, chosen)
                result = OracleResult(u=witness.leaves, witness=witness, explored=explored)
                log.debug("oracle: u=%d after %d candidates", result.u, explored)
                _cache().add_entry(key, result)
                return result
    raise OracleTooLarge("no connected dominating set found")


def max_leaf_lower_bound_check(g: Graph) -> bool:
    """True when u(G) reaches t/3 + s/4 + 3/2, compared exactly."""
    return max_leaf_exact(g).u >= bound_report(g).bound


def clear_cache() -> None:
    global _results
    _results = None
