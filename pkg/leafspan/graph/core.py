from typing import Dict, FrozenSet, Iterable, List, Optional, Tuple

import attr

from leafspan.exceptions import MissingEdge, NonSimpleGraph, UnknownVertex

Edge = Tuple[int, int]


def edge(u: int, v: int) -> Edge:
    """Canonical form of an undirected edge, smaller id first."""
    return (u, v) if u < v else (v, u)


@attr.s(slots=True, frozen=True)
class Graph:
    """
    A simple undirected graph with stable integer vertex ids.

    Every mutation returns a new graph, the receiver is never touched.
    ``provenance`` maps each vertex to the ids of the root instance it
    stands for, and ``next_id`` is the id handed to the next fresh vertex.
    """

    adjacency: Dict[int, FrozenSet[int]] = attr.ib()
    provenance: Dict[int, FrozenSet[int]] = attr.ib()
    next_id: int = attr.ib()

    @classmethod
    def from_edges(
        cls, edges: Iterable[Tuple[int, int]], vertices: Iterable[int] = ()
    ) -> "Graph":
        """
        Builds a root graph from an edge list.

        Parameters
        ----------
        edges: Iterable[Tuple[int, int]]
            Pairs of non-negative integer ids
        vertices: Iterable[int], optional
            Extra vertex ids, for isolated vertices

        Raises
        ------
        NonSimpleGraph
            A loop or a repeated edge was found
        """
        adjacency: Dict[int, set] = {v: set() for v in vertices}
        for u, v in edges:
            if u == v:
                raise NonSimpleGraph(f"loop at vertex {u}")
            if v in adjacency.get(u, ()):
                raise NonSimpleGraph(f"repeated edge {edge(u, v)}")
            adjacency.setdefault(u, set()).add(v)
            adjacency.setdefault(v, set()).add(u)
        for v in adjacency:
            if v < 0:
                raise UnknownVertex(f"vertex ids must be non-negative, got {v}")
        return cls(
            adjacency={v: frozenset(ns) for v, ns in adjacency.items()},
            provenance={v: frozenset((v,)) for v in adjacency},
            next_id=max(adjacency, default=-1) + 1,
        )

    def __contains__(self, v: int) -> bool:
        return v in self.adjacency

    @property
    def v(self) -> int:
        return len(self.adjacency)

    @property
    def e(self) -> int:
        return sum(len(ns) for ns in self.adjacency.values()) // 2

    @property
    def size(self) -> Tuple[int, int]:
        """The (v, e) pair reductions must strictly decrease."""
        return self.v, self.e

    def vertices(self) -> List[int]:
        return sorted(self.adjacency)

    def edges(self) -> List[Edge]:
        return sorted(
            (u, v) for u, ns in self.adjacency.items() for v in ns if u < v
        )

    def neighbors(self, v: int) -> FrozenSet[int]:
        try:
            return self.adjacency[v]
        except KeyError:
            raise UnknownVertex(f"vertex {v} is not in the graph") from None

    def degree(self, v: int) -> int:
        return len(self.neighbors(v))

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.adjacency.get(u, ())

    def delete_edges(self, es: Iterable[Edge]) -> "Graph":
        """
        Returns the graph without the given edges, all vertices retained.

        Raises
        ------
        MissingEdge
        """
        adjacency = dict(self.adjacency)
        for u, v in es:
            if v not in adjacency.get(u, ()):
                raise MissingEdge(f"edge {edge(u, v)} is not in the graph")
            adjacency[u] = adjacency[u] - {v}
            adjacency[v] = adjacency[v] - {u}
        return attr.evolve(self, adjacency=adjacency)

    def delete_vertices(self, vs: Iterable[int]) -> "Graph":
        """
        Returns the subgraph induced on the remaining vertices.

        Raises
        ------
        UnknownVertex
        """
        gone = frozenset(vs)
        for v in gone:
            if v not in self.adjacency:
                raise UnknownVertex(f"vertex {v} is not in the graph")
        adjacency = {
            v: ns - gone for v, ns in self.adjacency.items() if v not in gone
        }
        provenance = {v: p for v, p in self.provenance.items() if v not in gone}
        return attr.evolve(self, adjacency=adjacency, provenance=provenance)

    def induced(self, vs: Iterable[int]) -> "Graph":
        keep = frozenset(vs)
        return self.delete_vertices(v for v in self.adjacency if v not in keep)

    def contract_edge(self, e: Edge) -> Tuple["Graph", int]:
        """
        Merges the endpoints of ``e`` into a fresh vertex.

        Returns
        -------
        Tuple[Graph, int]
            The contracted graph and the id of the merged vertex,
            whose provenance is the union of both parts

        Raises
        ------
        MissingEdge
        """
        x, y = e
        if not self.has_edge(x, y):
            raise MissingEdge(f"edge {edge(x, y)} is not in the graph")
        merged = self.next_id
        around = (self.adjacency[x] | self.adjacency[y]) - {x, y}
        adjacency = {}
        for v, ns in self.adjacency.items():
            if v in (x, y):
                continue
            if x in ns or y in ns:
                ns = (ns - {x, y}) | {merged}
            adjacency[v] = ns
        adjacency[merged] = frozenset(around)
        provenance = {v: p for v, p in self.provenance.items() if v not in (x, y)}
        provenance[merged] = self.provenance[x] | self.provenance[y]
        graph = Graph(adjacency=adjacency, provenance=provenance, next_id=merged + 1)
        return graph, merged

    def add_pendant(self, a: int, vid: Optional[int] = None) -> Tuple["Graph", int]:
        """Adjoins a new vertex of degree one to ``a``."""
        if a not in self.adjacency:
            raise UnknownVertex(f"vertex {a} is not in the graph")
        vid = self.next_id if vid is None else vid
        if vid in self.adjacency:
            raise NonSimpleGraph(f"vertex {vid} already exists")
        adjacency = dict(self.adjacency)
        adjacency[a] = adjacency[a] | {vid}
        adjacency[vid] = frozenset((a,))
        provenance = dict(self.provenance)
        provenance[vid] = frozenset()
        graph = Graph(
            adjacency=adjacency,
            provenance=provenance,
            next_id=max(self.next_id, vid + 1),
        )
        return graph, vid

    def with_next_id(self, next_id: int) -> "Graph":
        return attr.evolve(self, next_id=max(self.next_id, next_id))

    def canonical_key(self) -> Tuple[int, Tuple[Edge, ...]]:
        """A hashable key for memoizing per-graph results."""
        return self.v, tuple(self.edges())


@attr.s(slots=True, frozen=True)
class SpanningForest:
    """An acyclic edge set over a set of vertices."""

    vertices: FrozenSet[int] = attr.ib(converter=frozenset)
    edges: FrozenSet[Edge] = attr.ib(
        converter=lambda es: frozenset(edge(u, v) for u, v in es)
    )

    def degrees(self) -> Dict[int, int]:
        degrees = {v: 0 for v in self.vertices}
        for u, v in self.edges:
            degrees[u] = degrees.get(u, 0) + 1
            degrees[v] = degrees.get(v, 0) + 1
        return degrees

    def leaf_set(self) -> FrozenSet[int]:
        return frozenset(v for v, d in self.degrees().items() if d == 1)

    @property
    def leaves(self) -> int:
        return len(self.leaf_set())

    @property
    def components(self) -> int:
        """Component count, or -1 if the edge set has a cycle."""
        parent = {v: v for v in self.vertices}
        for u, v in self.edges:
            parent.setdefault(u, u)
            parent.setdefault(v, v)

        def find(v: int) -> int:
            while parent[v] != v:
                parent[v] = parent[parent[v]]
                v = parent[v]
            return v

        count = len(parent)
        for u, v in self.edges:
            ru, rv = find(u), find(v)
            if ru == rv:
                return -1
            parent[ru] = rv
            count -= 1
        return count

    def adjacency(self) -> Dict[int, List[int]]:
        adjacency: Dict[int, List[int]] = {v: [] for v in self.vertices}
        for u, v in sorted(self.edges):
            adjacency.setdefault(u, []).append(v)
            adjacency.setdefault(v, []).append(u)
        return adjacency

    def with_edges(self, es: Iterable[Edge], vertices: Iterable[int] = ()) -> "SpanningForest":
        es = list(es)
        extra = {x for e in es for x in e}
        return SpanningForest(
            vertices=self.vertices | extra | frozenset(vertices),
            edges=self.edges | {edge(u, v) for u, v in es},
        )

    def without_vertices(self, vs: Iterable[int]) -> "SpanningForest":
        gone = frozenset(vs)
        return SpanningForest(
            vertices=self.vertices - gone,
            edges=(e for e in self.edges if e[0] not in gone and e[1] not in gone),
        )
