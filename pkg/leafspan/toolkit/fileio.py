from pathlib import Path
from typing import Iterable, List, Tuple, Union

from leafspan.exceptions import GraphFormatError
from leafspan.graph import Edge, Graph, SpanningForest, edge

PathLike = Union[str, Path]


def _parse(text: str) -> Tuple[int, List[Edge]]:
    header = None
    edges: List[Edge] = []
    for number, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if header is None:
            if len(parts) != 3 or parts[0] != "p":
                raise GraphFormatError(f"line {number}: expected 'p <n> <m>', got {line!r}")
            try:
                header = (int(parts[1]), int(parts[2]))
            except ValueError:
                raise GraphFormatError(f"line {number}: non-integer header {line!r}") from None
            continue
        if len(parts) != 2:
            raise GraphFormatError(f"line {number}: expected '<u> <v>', got {line!r}")
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise GraphFormatError(f"line {number}: non-integer edge {line!r}") from None
        if not (0 <= u < header[0] and 0 <= v < header[0]):
            raise GraphFormatError(f"line {number}: vertex out of range [0, {header[0]})")
        edges.append((u, v))

    if header is None:
        raise GraphFormatError("missing 'p <n> <m>' header")
    n, m = header
    if len(edges) != m:
        raise GraphFormatError(f"header promises {m} edges, found {len(edges)}")
    return n, edges


def _format(n: int, edges: Iterable[Edge]) -> str:
    edges = sorted(edge(u, v) for u, v in edges)
    lines = [f"p {n} {len(edges)}"] + [f"{u} {v}" for u, v in edges]
    return "\n".join(lines) + "\n"


def loads_graph(text: str) -> Graph:
    """
    Parses the ``p <n> <m>`` edge-list format.

    Raises
    ------
    GraphFormatError
    NonSimpleGraph
    """
    n, edges = _parse(text)
    return Graph.from_edges(edges, vertices=range(n))


def dumps_graph(g: Graph) -> str:
    if g.vertices() != list(range(g.v)):
        raise GraphFormatError("graph files need vertex ids 0..n-1")
    return _format(g.v, g.edges())


def loads_tree(text: str) -> SpanningForest:
    n, edges = _parse(text)
    return SpanningForest(vertices=range(n), edges=edges)


def dumps_tree(tree: SpanningForest) -> str:
    return _format(len(tree.vertices), tree.edges)


def read_graph(path: PathLike) -> Graph:
    return loads_graph(_read(path))


def write_graph(g: Graph, path: PathLike) -> None:
    Path(path).write_text(dumps_graph(g), encoding="utf-8")


def read_tree(path: PathLike) -> SpanningForest:
    return loads_tree(_read(path))


def write_tree(tree: SpanningForest, path: PathLike) -> None:
    Path(path).write_text(dumps_tree(tree), encoding="utf-8")


def _read(path: PathLike) -> str:
    try:
        return Path(path).read_text(encoding="utf-8")
    except (OSError, UnicodeDecodeError) as exc:
        raise GraphFormatError(f"cannot read {path}: {exc}") from exc
