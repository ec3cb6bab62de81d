import logging
from typing import Optional

from leafspan.dead.forest import ForestState, StepRecord, measure, profit
from leafspan.dead.steps import StepPlan
from leafspan.exceptions import BaseInvariantError, ForestShapeError
from leafspan.graph import Graph, SpanningForest

log = logging.getLogger(__name__)

SEED_MARGIN = 5


def leaf_margin(st: ForestState) -> int:
    """3 leaves + dead leaves - tree vertices, which no cubic move lowers."""
    return 3 * st.forest.leaves + len(st.dead) - len(st.in_forest)


def seed(g: Graph) -> ForestState:
    """The lowest vertex with its three neighbours."""
    if any(d != 3 for d in map(g.degree, g.adjacency)):
        raise BaseInvariantError("the cubic procedure needs a 3-regular graph")
    root = min(g.adjacency)
    tips = sorted(g.neighbors(root))
    forest = SpanningForest(vertices=[root] + tips, edges=[(root, t) for t in tips])
    return ForestState.create(g, forest, "cubic")


def next_move(st: ForestState) -> Optional[StepPlan]:
    degrees = st.forest.degrees()
    inside = sorted(st.in_forest)
    for v in inside:
        outside = st.outside_neighbors(v)
        if degrees[v] >= 2 and outside:
            return StepPlan("cubic.branch", [(v, outside[0])], {"x": v})
    for v in inside:
        outside = st.outside_neighbors(v)
        if len(outside) >= 2:
            return StepPlan("cubic.fork", [(v, outside[0]), (v, outside[1])], {"x": v})
    for z in st.level1():
        attached = sorted(st.attach_map(z))
        if len(attached) >= 2:
            return StepPlan("cubic.absorb", [(attached[0], z)], {"z": z})
    for v in inside:
        outside = st.outside_neighbors(v)
        if len(outside) == 1:
            y = outside[0]
            further = st.outside_neighbors(y)
            if len(further) == 2:
                edges = [(v, y), (y, further[0]), (y, further[1])]
                return StepPlan("cubic.reach", edges, {"x": v, "y": y})
    if st.outside():
        raise ForestShapeError(f"cubic growth stuck with {len(st.outside())} vertices outside")
    return None


def grow_cubic(g: Graph) -> ForestState:
    """
    Grows a spanning tree of a 3-regular graph with at least
    (v + 6) / 4 leaves.

    Raises
    ------
    ForestShapeError
        The leaf margin dropped or the growth got stuck
    """
    st = seed(g)
    margin = leaf_margin(st)
    if margin < SEED_MARGIN:
        raise ForestShapeError(f"seed margin is {margin}")
    while True:
        plan = next_move(st)
        if plan is None:
            break
        after = st.forest.with_edges(plan.edges)
        delta = measure(g, st.forest, after)
        record = StepRecord(kind=plan.kind, witnesses=plan.witnesses, profit=profit(**delta), **delta)
        grown = st.grown(plan.edges, record)
        if leaf_margin(grown) < margin:
            raise ForestShapeError(f"{plan.kind} lowered the leaf margin")
        margin = leaf_margin(grown)
        st = grown
    log.debug("cubic growth finished with %d leaves", st.forest.leaves)
    return st
