import logging
from typing import Optional, Tuple

from leafspan.config import Settings, get_settings
from leafspan.cost import BASE_BONUS, classify, graph_cost
from leafspan.dead.base import (
    COMPONENT_ALPHA,
    STAR_ALPHA,
    TERMINAL_MARGIN,
    build_base,
    check_pendant_structure,
)
from leafspan.dead.cubic import grow_cubic
from leafspan.dead.fallback import fallback
from leafspan.dead.forest import ForestState, PotentialLedger
from leafspan.dead.steps import apply_step, find_step
from leafspan.exceptions import BaseInvariantError, ForestShapeError, ProfitBelowBound
from leafspan.graph import Graph, SpanningForest, check_tree
from leafspan.reductions import find_reduction

log = logging.getLogger(__name__)

# least final potential for each kind of start
FINAL_ALPHA = {
    "B1": STAR_ALPHA,
    "B2": COMPONENT_ALPHA,
    "B2.terminal": TERMINAL_MARGIN,
    "fallback.greedy": BASE_BONUS,
    "fallback.exact": BASE_BONUS,
}


def _cubic(g: Graph, settings: Settings) -> ForestState:
    st = grow_cubic(g)
    if 4 * st.forest.leaves >= g.v + 6:
        return st
    if g.v > settings.cubic_exhaustive_max_vertices:
        return fallback(g, f"cubic growth reached only {st.forest.leaves} leaves")
    from leafspan.oracle import max_leaf_exact

    log.warning("cubic growth missed the bound on %d vertices, using the exact tree", g.v)
    return ForestState.create(g, max_leaf_exact(g).witness, "cubic.exact")


def grow(g: Graph, checked: bool = False, settings: Optional[Settings] = None) -> ForestState:
    """Builds the base forest of ``g`` and grows it until no step applies."""
    settings = settings or get_settings()
    classes = classify(g)
    if not classes.U and not classes.T:
        return _cubic(g, settings)
    if classes.U:
        if not checked and find_reduction(g) is not None:
            raise BaseInvariantError("a reduction applies, no base forest is needed")
        checked = True
        try:
            check_pendant_structure(g, classes)
        except BaseInvariantError as exc:
            return fallback(g, str(exc))
    st = build_base(g, classes, checked=checked)
    while True:
        plan = find_step(g, st)
        if plan is None:
            return st
        st = apply_step(g, st, plan)


def run_to_spanning_tree(
    g: Graph, checked: bool = False, settings: Optional[Settings] = None
) -> Tuple[SpanningForest, PotentialLedger]:
    """
    A spanning tree of an irreducible graph with at least c(G) + 3/2 leaves.

    Parameters
    ----------
    g: Graph
        A connected graph on three or more vertices no reduction applies to
    checked: bool
        The caller already made sure no reduction applies
    settings: Settings, optional

    Raises
    ------
    ForestShapeError
        The grown forest is not a spanning tree or has live leaves
    ProfitBelowBound
        The final potential is below what its base guarantees
    """
    st = grow(g, checked=checked, settings=settings)
    tree = st.forest
    leaves, ok = check_tree(g, tree)
    if not ok:
        raise ForestShapeError("growth phase did not end in a spanning tree")
    if st.dead != tree.leaf_set():
        raise ForestShapeError(f"live leaves remain: {sorted(tree.leaf_set() - st.dead)}")
    st.check_ledger()

    cost = graph_cost(g)
    if leaves != st.alpha + cost:
        raise ForestShapeError(f"{leaves} leaves but potential {st.alpha} over cost {cost}")
    kind = st.ledger.base_kind
    if kind in FINAL_ALPHA and st.alpha < FINAL_ALPHA[kind]:
        raise ProfitBelowBound(f"{kind} run ended with potential {st.alpha}")
    log.debug("%s growth: %d steps, %d leaves", kind, len(st.ledger.history), leaves)
    return tree, st.ledger
