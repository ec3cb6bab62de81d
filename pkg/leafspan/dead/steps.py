import logging
from fractions import Fraction
from typing import Any, Callable, Dict, List, Optional, Tuple

import attr

from leafspan.dead.forest import ForestState, StepRecord, measure, profit
from leafspan.exceptions import (
    ForestShapeError,
    NoStepApplicable,
    ProfitBelowBound,
)
from leafspan.graph import Edge, Graph, edge

log = logging.getLogger(__name__)

STEP_BOUNDS: Dict[str, Fraction] = {
    "S1": Fraction(1, 3),
    "S2": Fraction(1, 2),
    "S3": Fraction(1, 6),
    "S4": Fraction(0),
    "S5": Fraction(0),
    "S6.1": Fraction(1, 3),
    "S6.2": Fraction(0),
    "S7.1": Fraction(1, 12),
    "S7.2.1": Fraction(1, 12),
    "S7.2.2": Fraction(1, 4),
    "S7.2.3": Fraction(1, 12),
    "S8.1.1": Fraction(1, 6),
    "S8.1.2": Fraction(0),
    "S8.2.1": Fraction(1, 4),
    "S8.2.2.1": Fraction(0),
    "S8.2.2.2": Fraction(0),
    "S8.2.2.2.join": Fraction(1, 6),
    "S8.2.2.3": Fraction(0),
}


@attr.s(slots=True, frozen=True)
class StepPlan:
    kind: str = attr.ib()
    edges: Tuple[Edge, ...] = attr.ib(converter=lambda es: tuple(edge(u, v) for u, v in es))
    witnesses: Dict[str, Any] = attr.ib(factory=dict)

    @property
    def bound(self) -> Optional[Fraction]:
        return STEP_BOUNDS.get(self.kind)


Finder = Callable[[ForestState], Optional[StepPlan]]


def _is_light(g: Graph, v: int) -> bool:
    return g.degree(v) == 3


def _s1(st: ForestState) -> Optional[StepPlan]:
    for x, y in st.graph.edges():
        if x in st.label and y in st.label and st.label[x] != st.label[y]:
            return StepPlan("S1", [(x, y)], {"x": x, "y": y})
    return None


def _s2(st: ForestState) -> Optional[StepPlan]:
    degrees = st.forest.degrees()
    for x in sorted(st.in_forest):
        outside = st.outside_neighbors(x)
        if degrees[x] >= 2 and outside:
            return StepPlan("S2", [(x, outside[0])], {"x": x, "y": outside[0]})
    return None


def _s3(st: ForestState) -> Optional[StepPlan]:
    for x in sorted(st.in_forest):
        outside = st.outside_neighbors(x)
        if len(outside) >= 2:
            y1, y2 = outside[:2]
            return StepPlan("S3", [(x, y1), (x, y2)], {"x": x, "y": [y1, y2]})
    return None


def _s4(st: ForestState) -> Optional[StepPlan]:
    for z in st.level1():
        attached = sorted(st.attach_map(z))
        p1 = attached[0]
        others = [p for p in attached if st.label[p] != st.label[p1]]
        if others:
            p2 = others[0]
            return StepPlan("S4", [(p1, z), (p2, z)], {"z": z, "p": [p1, p2]})
    return None


def _s5(st: ForestState) -> Optional[StepPlan]:
    for z in st.level1():
        attached = sorted(st.attach_map(z))
        if len(attached) >= 3:
            return StepPlan("S5", [(attached[0], z)], {"z": z, "p": attached[0]})
    return None


def check_settled(st: ForestState) -> None:
    """
    Shape of a forest once S1 to S5 are exhausted: every forest vertex
    with an outside neighbour is a leaf with exactly one, and every
    level-1 vertex sees at most two forest vertices, all in one component.

    Raises
    ------
    ForestShapeError
    """
    degrees = st.forest.degrees()
    for v in st.in_forest:
        outside = st.outside_neighbors(v)
        if outside and (degrees[v] != 1 or len(outside) != 1):
            raise ForestShapeError(f"forest vertex {v} still has room to grow")
    for z in st.level1():
        attached = st.attach_map(z)
        if len(attached) > 2 or len({st.label[p] for p in attached}) != 1:
            raise ForestShapeError(f"level-1 vertex {z} attaches to {sorted(attached)}")


def _s6(st: ForestState) -> Optional[StepPlan]:
    g = st.graph
    for z in st.level1():
        if g.degree(z) < 4:
            continue
        attached = sorted(st.attach_map(z))
        outside = st.outside_neighbors(z)
        if len(attached) == 1:
            ys = outside[:3]
            kind = "S6.1"
        else:
            ys = outside[:2]
            kind = "S6.2"
        edges = [(attached[0], z)] + [(z, y) for y in ys]
        return StepPlan(kind, edges, {"z": z, "p": attached[0], "y": ys})
    return None


def _s7(st: ForestState) -> Optional[StepPlan]:
    g = st.graph
    for z in st.level1():
        attached = sorted(st.attach_map(z))
        if not _is_light(g, z) or len(attached) != 1:
            continue
        p = attached[0]
        ys = st.outside_neighbors(z)
        if len(ys) != 2:
            raise ForestShapeError(f"level-1 vertex {z} has {len(ys)} outside neighbours")
        edges = [(p, z), (z, ys[0]), (z, ys[1])]
        heavy = [y for y in ys if not _is_light(g, y)]
        if not heavy:
            return StepPlan("S7.1", edges, {"z": z, "p": p, "y": ys})

        y1 = heavy[0]
        y2 = ys[1] if ys[0] == y1 else ys[0]
        witnesses = {"z": z, "p": p, "y": [y1, y2]}
        touching = sorted(st.attach_map(y1))
        if any(st.label[q] == st.label[p] for q in touching):
            return StepPlan("S7.2.1", edges, witnesses)
        if touching:
            witnesses["q"] = touching[0]
            return StepPlan("S7.2.2", edges + [(touching[0], y1)], witnesses)
        further = [v for v in st.outside_neighbors(y1) if v not in (z, y2)][:2]
        witnesses["w"] = further
        return StepPlan("S7.2.3", edges + [(y1, v) for v in further], witnesses)
    return None


def _s8(st: ForestState) -> Optional[StepPlan]:
    g = st.graph
    for z in st.level1():
        attached = sorted(st.attach_map(z))
        if not _is_light(g, z) or len(attached) != 2:
            continue
        p1 = attached[0]
        (y,) = st.outside_neighbors(z)
        edges = [(p1, z), (z, y)]
        witnesses: Dict[str, Any] = {"z": z, "p": attached, "y": y}
        touching = sorted(st.attach_map(y))

        if touching:
            if not _is_light(g, y) or len(touching) != 2:
                raise ForestShapeError(f"vertex {y} should be light with two forest neighbours")
            if st.label[touching[0]] != st.label[touching[1]]:
                raise ForestShapeError(f"forest neighbours of {y} lie in two components")
            if st.label[touching[0]] == st.label[p1]:
                return StepPlan("S8.1.1", edges, witnesses)
            witnesses["q"] = touching[0]
            return StepPlan("S8.1.2", edges + [(y, touching[0])], witnesses)

        further = [v for v in st.outside_neighbors(y) if v != z]
        if not _is_light(g, y):
            witnesses["w"] = further[:3]
            return StepPlan("S8.2.1", edges + [(y, v) for v in further[:3]], witnesses)

        z1, z2 = further
        edges = edges + [(y, z1), (y, z2)]
        witnesses["w"] = [z1, z2]
        heavy = [v for v in (z1, z2) if not _is_light(g, v)]
        if not heavy:
            return StepPlan("S8.2.2.1", edges, witnesses)
        a = heavy[0]
        b = z2 if a == z1 else z1
        witnesses["a"] = a
        near = sorted(st.attach_map(a))
        if near:
            if any(st.label[q] == st.label[p1] for q in near):
                return StepPlan("S8.2.2.2", edges, witnesses)
            witnesses["q"] = near[0]
            return StepPlan("S8.2.2.2.join", edges + [(near[0], a)], witnesses)
        beyond = [v for v in st.outside_neighbors(a) if v not in (y, b)][:2]
        witnesses["r"] = beyond
        return StepPlan("S8.2.2.3", edges + [(a, v) for v in beyond], witnesses)
    return None


EARLY: List[Finder] = [_s1, _s2, _s3, _s4, _s5]
LATE: List[Finder] = [_s6, _s7, _s8]


def find_step(g: Graph, st: ForestState) -> Optional[StepPlan]:
    """
    The first applicable growth step, trying S1 through S8 in order.

    Returns nothing once the forest is a spanning tree of ``g``.

    Raises
    ------
    NoStepApplicable
        The forest is not a spanning tree yet every step fails
    """
    for finder in EARLY:
        plan = finder(st)
        if plan is not None:
            return plan
    if not st.outside():
        if st.components != 1:
            raise NoStepApplicable("spanning forest is disconnected but no edge joins it")
        return None
    check_settled(st)
    for finder in LATE:
        plan = finder(st)
        if plan is not None:
            return plan
    raise NoStepApplicable(f"{len(st.outside())} vertices remain outside the forest")


def apply_step(g: Graph, st: ForestState, plan: StepPlan) -> ForestState:
    """
    Grows the forest by the edges of ``plan`` and books the profit.

    Parameters
    ----------
    g: Graph
        The graph the forest lives in
    st: ForestState
    plan: StepPlan

    Raises
    ------
    ForestShapeError
        An edge is missing from ``g``, closes a cycle, or a dead leaf revived
    ProfitBelowBound
        The measured profit is below the proven bound of the step
    LedgerMismatch
        The potential no longer matches the ledger
    """
    if st.graph is not g and st.graph != g:
        raise ForestShapeError("forest state belongs to another graph")
    for u, v in plan.edges:
        if not g.has_edge(u, v):
            raise ForestShapeError(f"{plan.kind} uses {edge(u, v)}, which is not a graph edge")
    after = st.forest.with_edges(plan.edges)
    if after.components < 0:
        raise ForestShapeError(f"{plan.kind} closes a cycle")

    delta = measure(g, st.forest, after)
    gained = profit(**delta)
    record = StepRecord(kind=plan.kind, witnesses=dict(plan.witnesses), profit=gained, bound=plan.bound, **delta)
    grown = st.grown(plan.edges, record)

    if not st.dead <= grown.dead:
        raise ForestShapeError(f"{plan.kind} revived dead leaves {sorted(st.dead - grown.dead)}")
    grown.check_ledger()
    if plan.bound is not None and gained < plan.bound:
        raise ProfitBelowBound(f"{plan.kind} gained {gained}, needs {plan.bound}")
    log.debug("%s %s: profit %s, alpha %s", plan.kind, plan.witnesses, gained, grown.alpha)
    return grown
