import enum
import logging
from typing import Iterable, List, Optional, Tuple

import attr

from leafspan.exceptions import PathGrowthError
from leafspan.graph import Edge, Graph, bridges, edge

log = logging.getLogger(__name__)


class PathOutcome(enum.Enum):
    FULL = "full"
    EARLY = "early"


@attr.s(slots=True, frozen=True)
class PathResult:
    """
    A grown path and how growth stopped.

    For an early stop ``pivot`` is ``(t, t')``: the last vertex ``t``,
    every extension of which is a bridge, and its predecessor ``t'``.
    """

    path: Tuple[int, ...] = attr.ib(converter=tuple)
    outcome: PathOutcome = attr.ib()
    pivot: Optional[Tuple[int, int]] = attr.ib(default=None)

    @property
    def edges(self) -> List[Edge]:
        return [edge(u, v) for u, v in zip(self.path, self.path[1:])]

    @property
    def early(self) -> bool:
        return self.outcome is PathOutcome.EARLY


def grow_leaf_path(
    g: Graph,
    start: int,
    first: int,
    excluded: int,
    stop_set: Iterable[int],
    avoid: Optional[int] = None,
) -> PathResult:
    """
    Walks from ``start`` through degree-3 vertices, keeping
    ``g - E(P) - excluded`` connected, until it reaches a terminal vertex.

    A vertex is terminal when it lies in ``stop_set`` or has degree four
    or more without being a neighbour of ``excluded``. The walk never
    steps onto ``avoid`` or ``excluded``.

    Parameters
    ----------
    g: Graph
    start: int
        First vertex of the path
    first: int
        Second vertex of the path
    excluded: int
        Vertex treated as deleted while testing for bridges
    stop_set: Iterable[int]
        Vertices that end the walk unconditionally
    avoid: int, optional
        A neighbour the walk must never use

    Raises
    ------
    PathGrowthError
        ``(start, first)`` is missing or a bridge of ``g - excluded``, or
        the walk reached a vertex it can neither stop at nor leave
    """
    stop = frozenset(stop_set)
    if not g.has_edge(start, first) or first in (excluded, avoid):
        raise PathGrowthError(f"cannot start a path along {edge(start, first)}")
    base = g.delete_vertices([excluded])
    if edge(start, first) in bridges(base):
        raise PathGrowthError(f"initial edge {edge(start, first)} is a bridge")

    around_excluded = g.neighbors(excluded)
    path = [start, first]
    removed = {edge(start, first)}
    for _ in range(g.v):
        t = path[-1]
        d = g.degree(t)
        if t in stop:
            return PathResult(path, PathOutcome.FULL)
        if d >= 4 and t not in around_excluded:
            return PathResult(path, PathOutcome.FULL)
        if d != 3 or t in around_excluded:
            raise PathGrowthError(f"path stuck at vertex {t} of degree {d}")

        previous = path[-2]
        candidates = sorted(
            v for v in g.neighbors(t) if v not in (previous, excluded, avoid)
        )
        if not candidates:
            raise PathGrowthError(f"no way forward from vertex {t}")
        current_bridges = bridges(base.delete_edges(removed))
        for v in candidates:
            if edge(t, v) not in current_bridges and v not in path:
                path.append(v)
                removed.add(edge(t, v))
                break
        else:
            log.debug("path from %d stopped early at (%d, %d)", start, t, previous)
            return PathResult(path, PathOutcome.EARLY, pivot=(t, previous))
    raise PathGrowthError(f"path from {start} did not terminate in {g.v} steps")
