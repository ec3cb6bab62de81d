import logging
from fractions import Fraction
from typing import List, Optional, Tuple

import attr

from leafspan.config import Settings, get_settings
from leafspan.cost import bound_report
from leafspan.dead import run_to_spanning_tree
from leafspan.exceptions import BoundMissed, LeafSpanException
from leafspan.graph import Edge, Graph, SpanningForest, check_tree
from leafspan.reductions import ReductionStep, find_reduction, lift

log = logging.getLogger(__name__)

__all__ = ("Certificate", "check_tree", "replay", "solve")


@attr.s(slots=True, frozen=True)
class Certificate:
    """
    What a solve proves about one graph: the guaranteed bound, the tree
    found, and the ordered trace of reductions, bases and growth steps.
    """

    v: int = attr.ib()
    e: int = attr.ib()
    s: int = attr.ib()
    t: int = attr.ib()
    bound: Fraction = attr.ib()
    min_leaves: int = attr.ib()
    leaves: int = attr.ib()
    tree: Tuple[Edge, ...] = attr.ib(converter=lambda es: tuple(sorted(es)))
    trace: List[dict] = attr.ib(factory=list)
    verified: bool = attr.ib(default=False)

    @property
    def margin(self) -> Fraction:
        return self.leaves - self.bound

    def spanning_tree(self) -> SpanningForest:
        vertices = {x for e in self.tree for x in e}
        return SpanningForest(vertices=vertices, edges=self.tree)


@attr.s(slots=True)
class _Frame:
    graph: Graph = attr.ib()
    step: Optional[ReductionStep] = attr.ib(default=None)
    trees: List[SpanningForest] = attr.ib(factory=list)


def _solve_tree(g: Graph, verify: bool, settings: Settings) -> Tuple[SpanningForest, List[dict]]:
    trace: List[dict] = []
    stack = [_Frame(g)]
    result: Optional[SpanningForest] = None

    def deliver(tree: SpanningForest) -> None:
        nonlocal result
        stack.pop()
        if stack:
            stack[-1].trees.append(tree)
        else:
            result = tree

    while stack:
        frame = stack[-1]
        if frame.step is None:
            current = frame.graph
            if current.v == 2:
                trace.append({"phase": "base", "kind": "K2"})
                deliver(SpanningForest(vertices=current.adjacency, edges=current.edges()))
                continue
            step = find_reduction(current)
            if step is None:
                tree, ledger = run_to_spanning_tree(current, checked=True, settings=settings)
                trace.extend(ledger.records())
                deliver(tree)
                continue
            trace.append(step.record())
            frame.step = step

        if len(frame.trees) < len(frame.step.children):
            stack.append(_Frame(frame.step.children[len(frame.trees)]))
            continue

        lifted = lift(frame.graph, frame.step, frame.trees, verify=verify)
        bound = bound_report(frame.graph).bound
        if lifted.leaves < bound:
            raise BoundMissed(
                f"{frame.step.kind.value} lift gives {lifted.leaves} leaves, bound is {bound}"
            )
        deliver(lifted.tree)

    return result, trace


def solve(
    g: Graph, verify: Optional[bool] = None, settings: Optional[Settings] = None
) -> Certificate:
    """
    A spanning tree of ``g`` with at least t/3 + s/4 + 3/2 leaves.

    Parameters
    ----------
    g: Graph
        A connected simple graph on at least two vertices
    verify: bool, optional
        Re-check every lifted tree.
        Defaults to ``Settings.verify_lifts``
    settings: Settings, optional

    Raises
    ------
    DisconnectedGraph
    InvariantBreach
        Some step of the construction failed its own check
    """
    settings = settings or get_settings()
    verify = settings.verify_lifts if verify is None else verify
    report = bound_report(g)
    tree, trace = _solve_tree(g, verify, settings)

    leaves, ok = check_tree(g, tree)
    if not ok:
        raise BoundMissed("the final tree is not a spanning tree")
    if leaves < report.bound:
        raise BoundMissed(f"{leaves} leaves is below the bound {report.bound}")
    log.info("solved v=%d e=%d: bound %s, %d leaves", g.v, g.e, report.bound, leaves)
    return Certificate(
        v=g.v,
        e=g.e,
        s=report.s,
        t=report.t,
        bound=report.bound,
        min_leaves=report.min_leaves,
        leaves=leaves,
        tree=tree.edges,
        trace=trace,
        verified=ok,
    )


def replay(cert: Certificate, g: Graph) -> bool:
    """
    True when ``cert`` belongs to ``g`` and solving ``g`` again reproduces
    its trace and its tree.
    """
    try:
        report = bound_report(g)
        if (cert.v, cert.e, cert.s, cert.t) != (g.v, g.e, report.s, report.t):
            return False
        if cert.bound != report.bound or cert.min_leaves != report.min_leaves:
            return False
        leaves, ok = check_tree(g, cert.spanning_tree())
        if not ok or leaves != cert.leaves:
            return False
        fresh = solve(g)
    except LeafSpanException as exc:
        log.debug("replay failed: %s", exc)
        return False
    return fresh.trace == cert.trace and fresh.tree == cert.tree
