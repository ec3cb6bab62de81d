import random
from typing import Any, Dict, Iterator, List, Optional, Set, Tuple

import attr
import networkx as nx

from leafspan.exceptions import InfeasibleSpec, InputError
from leafspan.graph import Graph

FAMILIES = ("gadget", "chain", "random", "cubic", "petersen", "glue")
GADGET_PENDANTS = (6, 7, 8)


@attr.s(slots=True, frozen=True)
class GenSpec:
    family: str = attr.ib()
    params: Dict[str, Any] = attr.ib(factory=dict)
    seed: int = attr.ib(default=0)

    @family.validator
    def _known(self, attribute: Any, value: str) -> None:
        if value not in FAMILIES:
            raise InfeasibleSpec(f"unknown family {value!r}, expected one of {', '.join(FAMILIES)}")


def from_networkx(nxg: nx.Graph) -> Graph:
    """Relabels the nodes 0..n-1 in sorted order and converts."""
    nxg = nx.convert_node_labels_to_integers(nxg, ordering="sorted")
    return Graph.from_edges(nxg.edges(), vertices=nxg.nodes())


def gadget() -> Graph:
    """
    The 9-vertex graph meeting the leaf bound with equality.

    A triangle 0-1-2, support vertices 3, 4, 5 with ``i`` and ``i + 1``
    around the triangle joined to ``3 + i``, and pendants 6, 7, 8 on the
    supports.
    """
    edges: List[Tuple[int, int]] = [(0, 1), (1, 2), (0, 2)]
    for i in range(3):
        edges += [(i, 3 + i), (3 + i, (i + 1) % 3), (3 + i, 6 + i)]
    return Graph.from_edges(edges)


def glue(g1: Graph, x1: int, g2: Graph, x2: int) -> Graph:
    """
    Identifies the pendant vertices ``x1`` and ``x2`` and contracts one of
    the two bridges at the shared vertex, so the neighbours of the pendants
    end up adjacent. The first graph keeps the low ids.

    Raises
    ------
    InputError
        Either gluing vertex is not pendant, or a graph is too small
    """
    for g, x in ((g1, x1), (g2, x2)):
        if g.v <= 2:
            raise InputError("gluing needs graphs on at least three vertices")
        if g.degree(x) != 1:
            raise InputError(f"gluing vertex {x} is not pendant")
    (n1,) = g1.neighbors(x1)
    (n2,) = g2.neighbors(x2)
    first = {v: i for i, v in enumerate(v for v in g1.vertices() if v != x1)}
    offset = len(first)
    second = {v: offset + i for i, v in enumerate(v for v in g2.vertices() if v != x2)}

    edges = [(first[u], first[v]) for u, v in g1.edges() if x1 not in (u, v)]
    edges += [(second[u], second[v]) for u, v in g2.edges() if x2 not in (u, v)]
    edges.append((first[n1], second[n2]))
    return Graph.from_edges(edges)


def chain(k: int) -> Graph:
    """``k`` gadgets glued in a row, with 7k + 2 vertices and bound 2k + 2."""
    if k < 1:
        raise InfeasibleSpec(f"a chain needs at least one gadget, got {k}")
    g = gadget()
    for _ in range(k - 1):
        tail = max(v for v in g.adjacency if g.degree(v) == 1)
        g = glue(g, tail, gadget(), GADGET_PENDANTS[0])
    return g


def petersen() -> Graph:
    return from_networkx(nx.petersen_graph())


def random_graph(n: int, m: int, min_degree: int = 1, seed: int = 0, attempts: int = 50) -> Graph:
    """
    A connected simple graph with ``n`` vertices, ``m`` edges and minimum
    degree ``min_degree``, the same for the same seed.

    Raises
    ------
    InfeasibleSpec
    """
    if n < 2 or not n - 1 <= m <= n * (n - 1) // 2:
        raise InfeasibleSpec(f"no connected simple graph has n={n}, m={m}")
    if min_degree < 1 or min_degree > n - 1 or 2 * m < n * min_degree:
        raise InfeasibleSpec(f"min_degree={min_degree} is impossible with n={n}, m={m}")

    rng = random.Random(seed)
    for _ in range(attempts):
        edges = _grow_random(rng, n, m, min_degree)
        if edges is not None:
            return Graph.from_edges(edges, vertices=range(n))
    raise InfeasibleSpec(f"no graph found for n={n}, m={m}, min_degree={min_degree}")


def _grow_random(
    rng: random.Random, n: int, m: int, min_degree: int
) -> Optional[List[Tuple[int, int]]]:
    order = list(range(n))
    rng.shuffle(order)
    around: Dict[int, Set[int]] = {v: set() for v in range(n)}

    def join(u: int, v: int) -> None:
        around[u].add(v)
        around[v].add(u)

    for i in range(1, n):
        join(order[i], order[rng.randrange(i)])
    count = n - 1

    while True:
        short = [v for v in range(n) if len(around[v]) < min_degree]
        if not short:
            break
        v = min(short, key=lambda x: (len(around[x]), rng.random()))
        options = [w for w in range(n) if w != v and w not in around[v]]
        if not options or count == m:
            return None
        w = min(options, key=lambda x: (len(around[x]) >= min_degree, rng.random()))
        join(v, w)
        count += 1

    free = [(u, v) for u in range(n) for v in range(u + 1, n) if v not in around[u]]
    rng.shuffle(free)
    for u, v in free[: m - count]:
        join(u, v)
    return [(u, v) for u in range(n) for v in around[u] if u < v]


def cubic(n: int, seed: int = 0, attempts: int = 100) -> Graph:
    """
    A connected 3-regular graph on ``n`` vertices.

    Raises
    ------
    InfeasibleSpec
        ``n`` is odd or below 4
    """
    if n < 4 or n % 2:
        raise InfeasibleSpec(f"no cubic graph has {n} vertices")
    rng = random.Random(seed)
    for _ in range(attempts):
        nxg = nx.random_regular_graph(3, n, seed=rng.randrange(2 ** 32))
        if nx.is_connected(nxg):
            return from_networkx(nxg)
    raise InfeasibleSpec(f"no connected cubic graph found on {n} vertices")


def atlas(max_vertices: int = 7) -> Iterator[Graph]:
    """Every connected graph on 2 to ``max_vertices`` vertices, up to isomorphism."""
    if max_vertices > 7:
        raise InfeasibleSpec("the graph atlas stops at seven vertices")
    for nxg in nx.graph_atlas_g():
        if 2 <= nxg.number_of_nodes() <= max_vertices and nx.is_connected(nxg):
            yield from_networkx(nxg)


def generate(spec: GenSpec) -> Graph:
    """
    Builds the graph a ``GenSpec`` describes.

    Raises
    ------
    InfeasibleSpec
    """
    params = dict(spec.params)
    try:
        if spec.family == "gadget":
            return gadget()
        if spec.family == "petersen":
            return petersen()
        if spec.family == "chain":
            return chain(int(params["k"]))
        if spec.family == "cubic":
            return cubic(int(params["n"]), seed=spec.seed)
        if spec.family == "glue":
            from leafspan.toolkit.fileio import read_graph

            return glue(
                read_graph(params["first"]),
                int(params["x1"]),
                read_graph(params["second"]),
                int(params["x2"]),
            )
        return random_graph(
            int(params["n"]),
            int(params["m"]),
            min_degree=int(params.get("min_degree", 1)),
            seed=spec.seed,
        )
    except KeyError as exc:
        raise InfeasibleSpec(f"{spec.family} needs the parameter {exc.args[0]!r}") from None
    except ValueError as exc:
        raise InfeasibleSpec(f"bad {spec.family} parameter: {exc}") from None
