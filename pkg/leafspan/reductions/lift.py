import logging
from typing import Sequence, Tuple

from leafspan.exceptions import LiftError
from leafspan.graph import Graph, SpanningForest, check_tree, edge
from leafspan.reductions.steps import LiftedTree, ReductionKind, ReductionStep

log = logging.getLogger(__name__)


def expand_vertex(
    g: Graph, tree: SpanningForest, merged: int, primary: int, other: int
) -> SpanningForest:
    """
    Undoes a contraction inside a tree.

    Each tree edge at ``merged`` moves to ``primary`` when that is a
    neighbour in ``g``, otherwise to ``other``, and the edge between the
    two parts is added. The leaf count never drops.

    Raises
    ------
    LiftError
        A tree neighbour of ``merged`` is adjacent to neither part
    """
    edges = []
    for u, v in tree.edges:
        if merged not in (u, v):
            edges.append((u, v))
            continue
        n = v if u == merged else u
        if g.has_edge(primary, n):
            edges.append(edge(primary, n))
        elif g.has_edge(other, n):
            edges.append(edge(other, n))
        else:
            raise LiftError(f"vertex {n} is adjacent to neither {primary} nor {other}")
    edges.append(edge(primary, other))
    vertices = (tree.vertices - {merged}) | {primary, other}
    return SpanningForest(vertices=vertices, edges=edges)


def _attach(tree: SpanningForest, pairs: Sequence[Tuple[int, int]]) -> SpanningForest:
    degrees = tree.degrees()
    for leaf, target in pairs:
        if degrees.get(target, 0) < 2:
            raise LiftError(f"attachment target {target} is not internal")
    return tree.with_edges(pairs)


def lift(
    g: Graph,
    step: ReductionStep,
    child_trees: Sequence[SpanningForest],
    verify: bool = True,
) -> LiftedTree:
    """
    Turns spanning trees of the children of ``step`` into one of ``g``.

    Parameters
    ----------
    g: Graph
        The graph ``step`` was applied to
    step: ReductionStep
    child_trees: Sequence[SpanningForest]
        One spanning tree per child, in order
    verify: bool
        Check every child tree and the result with ``check_tree``

    Raises
    ------
    LiftError
        A child tree does not span its child, an attachment target is a
        leaf, or the leaf count misses the contract of the step's kind
    """
    if len(child_trees) != len(step.children):
        raise LiftError(f"{step.kind.value} needs {len(step.children)} child trees")
    if verify:
        for child, tree in zip(step.children, child_trees):
            if not check_tree(child, tree)[1]:
                raise LiftError(f"child tree does not span its {step.kind.value} child")

    data = step.lift_data
    below = sum(tree.leaves for tree in child_trees)
    if step.kind is ReductionKind.R2_SPLIT:
        x1, x2 = data["pendants"]
        first, second = child_trees
        tree = first.without_vertices([x1])
        tree = tree.with_edges(second.without_vertices([x2]).edges, second.vertices - {x2})
    else:
        (tree,) = child_trees
        tree = _attach(tree, data.get("attach", ()))
        tree = tree.with_edges(data.get("extra_edges", ()))
    if "merged" in data:
        tree = expand_vertex(g, tree, *data["merged"])

    lifted = LiftedTree(tree=tree, leaf_gain=step.kind.leaf_gain)
    if step.kind is ReductionKind.R2_SPLIT:
        if lifted.leaves != below - 2:
            raise LiftError(f"split lift has {lifted.leaves} leaves, expected {below - 2}")
    elif lifted.leaves < below + lifted.leaf_gain:
        raise LiftError(
            f"{step.kind.value} lift has {lifted.leaves} leaves, "
            f"expected at least {below + lifted.leaf_gain}"
        )
    if verify and not check_tree(g, tree)[1]:
        raise LiftError(f"{step.kind.value} lift is not a spanning tree")
    log.debug("lifted %s: %d -> %d leaves", step.kind.value, below, lifted.leaves)
    return lifted
