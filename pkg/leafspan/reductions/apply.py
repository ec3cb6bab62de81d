import logging
from collections import deque
from fractions import Fraction
from typing import Any, Callable, Dict, Iterable, List, Sequence

from leafspan.cost import QUARTER, THIRD, DegreeClasses, classify, graph_cost
from leafspan.exceptions import PathGrowthError, ReductionNotApplicable
from leafspan.graph import (
    Edge,
    Graph,
    component_of,
    connected_components,
    cutpoints,
    edge,
    is_connected,
)
from leafspan.reductions.paths import PathResult, grow_leaf_path
from leafspan.reductions.steps import ReductionKind, ReductionStep

log = logging.getLogger(__name__)

Witnesses = Dict[str, Any]
Builder = Callable[[Graph, Witnesses], ReductionStep]

R4_CONDITIONS = ("3", "2", "4", "5", "1", "scan")
EARLY_DROP = Fraction(11, 6)


def _require(condition: bool, message: str) -> None:
    if not condition:
        raise ReductionNotApplicable(message)


def _vertex(g: Graph, witnesses: Witnesses, key: str) -> int:
    try:
        v = witnesses[key]
    except KeyError:
        raise ReductionNotApplicable(f"missing witness {key!r}") from None
    _require(type(v) is int and v in g, f"witness {key}={v!r} is not a vertex")
    return v


def _step(
    kind: ReductionKind,
    g: Graph,
    witnesses: Witnesses,
    children: Sequence[Graph],
    lift_data: Dict[str, Any],
) -> ReductionStep:
    for child in children:
        _require(child.size < g.size, f"{kind.value} child {child.size} is not smaller than {g.size}")
        _require(is_connected(child), f"{kind.value} child is disconnected")
    return ReductionStep(
        kind=kind,
        witnesses=witnesses,
        parent_cost=graph_cost(g),
        child_costs=tuple(graph_cost(child) for child in children),
        children=tuple(children),
        lift_data=lift_data,
    )


def _bfs_edges(g: Graph, root: int, blocked: Iterable[int]) -> List[Edge]:
    """Tree edges of a BFS from ``root`` that never enters ``blocked``."""
    blocked = set(blocked)
    seen = {root}
    queue = deque([root])
    edges = []
    while queue:
        v = queue.popleft()
        for w in sorted(g.neighbors(v)):
            if w not in seen and w not in blocked:
                seen.add(w)
                edges.append(edge(v, w))
                queue.append(w)
    return edges


def _grow(g: Graph, **kwargs: Any) -> PathResult:
    try:
        return grow_leaf_path(g, **kwargs)
    except PathGrowthError as exc:
        raise ReductionNotApplicable(str(exc)) from exc


def build_r1(g: Graph, witnesses: Witnesses) -> ReductionStep:
    a = _vertex(g, witnesses, "a")
    b = _vertex(g, witnesses, "b")
    _require(g.degree(a) == 2, f"vertex {a} does not have degree 2")
    _require(g.has_edge(a, b), f"{b} is not a neighbour of {a}")
    (c,) = g.neighbors(a) - {b}
    recorded = {"a": a, "b": b}

    if c not in component_of(g, b, blocked=(a,)):
        child, merged = g.contract_edge((a, b))
        step = _step(
            ReductionKind.R1_CONTRACT, g, recorded, [child], {"merged": (merged, b, a)}
        )
        _require(step.child_costs[0] == step.parent_cost, "contraction changed the cost")
        return step

    child = g.delete_edges([(a, b)])
    step = _step(ReductionKind.R1_DELETE_EDGE, g, recorded, [child], {})
    _require(step.child_costs[0] >= step.parent_cost, "edge deletion lowered the cost")
    return step


def build_r2(g: Graph, witnesses: Witnesses) -> ReductionStep:
    a = _vertex(g, witnesses, "a")
    pendants = classify(g).U
    _require(a not in pendants, f"split vertex {a} is pendant")
    core = g.delete_vertices(pendants)
    _require(core.v >= 3, "pendant-free core is too small to split")
    parts = connected_components(core.delete_vertices([a]))
    _require(len(parts) >= 2, f"{a} is not a cutpoint of the pendant-free core")

    first = parts[0]
    hanging = {u for u in pendants if g.neighbors(u) <= first}
    side1 = {a} | first | hanging
    side2 = set(g.adjacency) - first - hanging
    x1, x2 = g.next_id, g.next_id + 1
    g1, _ = g.induced(side1).add_pendant(a, x1)
    g2, _ = g.induced(side2).add_pendant(a, x2)
    children = [g1.with_next_id(g.next_id + 2), g2.with_next_id(g.next_id + 2)]

    step = _step(
        ReductionKind.R2_SPLIT, g, {"a": a}, children, {"pendants": (x1, x2)}
    )
    _require(
        step.parent_cost <= sum(step.child_costs) - 2 * QUARTER,
        "split children do not cover the parent cost",
    )
    return step


def build_r3(g: Graph, witnesses: Witnesses) -> ReductionStep:
    x = _vertex(g, witnesses, "x")
    y = _vertex(g, witnesses, "y")
    _require(g.has_edge(x, y), f"{x} and {y} are not adjacent")
    _require(min(g.degree(x), g.degree(y)) >= 5, "both endpoints need degree at least 5")
    child = g.delete_edges([(x, y)])
    step = _step(ReductionKind.R3_DELETE_EDGE, g, {"x": x, "y": y}, [child], {})
    _require(step.child_costs[0] == step.parent_cost, "edge deletion changed the cost")
    return step


def _r4_condition(g: Graph, classes: DegreeClasses, a: int, b: int, condition: str) -> bool:
    if condition == "3":
        hanging = g.neighbors(b) & classes.U
        return b in classes.W and a in hanging and len(hanging) >= 2
    if condition == "2":
        return b in classes.W and a not in classes.U and g.degree(a) == 3
    if condition in ("4", "5"):
        if a in classes.U or b not in classes.W:
            return False
        light = len(g.neighbors(a) & classes.S)
        if condition == "4":
            return g.degree(a) <= 6 and light <= 1
        return g.degree(a) == 4 and light <= 2
    if condition == "1":
        return g.degree(a) <= 3
    return condition == "scan"


def build_r4(g: Graph, witnesses: Witnesses) -> ReductionStep:
    a = _vertex(g, witnesses, "a")
    b = _vertex(g, witnesses, "b")
    condition = witnesses.get("condition", "scan")
    _require(g.has_edge(a, b), f"{a} and {b} are not adjacent")
    _require(
        _r4_condition(g, classify(g), a, b, condition),
        f"condition {condition!r} does not hold for ({a}, {b})",
    )
    side = component_of(g, b, blocked=(a,))
    child = g.induced(side)
    _require(b in cutpoints(child), f"{b} is not a cutpoint after removing {a}")

    step = _step(
        ReductionKind.R4_CUTPOINT_ATTACH,
        g,
        {"a": a, "b": b, "condition": condition},
        [child],
        {"attach": [(a, b)], "extra_edges": _bfs_edges(g, a, blocked=side)},
    )
    _require(step.child_costs[0] >= step.parent_cost - 1, "cost dropped by more than 1")
    return step


def build_r5(g: Graph, witnesses: Witnesses) -> ReductionStep:
    x = _vertex(g, witnesses, "x")
    w = _vertex(g, witnesses, "w")
    w_prime = _vertex(g, witnesses, "w_prime")
    classes = classify(g)
    _require(x in classes.X, f"{x} is not at distance two from a pendant")
    _require(w in classes.W and g.has_edge(x, w) and g.degree(w) == 3, f"{w} is not a degree-3 support of {x}")
    _require(
        w_prime != w and g.has_edge(x, w_prime) and g.degree(w_prime) == 3,
        f"{w_prime} is not a second degree-3 neighbour of {x}",
    )
    _require(len(g.neighbors(w_prime) & classes.S) <= 1, f"{w_prime} has too many light neighbours")

    contracted, merged = g.contract_edge((x, w))
    side = component_of(contracted, merged, blocked=(w_prime,))
    child = contracted.induced(side)
    _require(merged in cutpoints(child), "contracted vertex is not a cutpoint")

    step = _step(
        ReductionKind.R5_CONTRACT_SPLIT,
        g,
        {"x": x, "w": w, "w_prime": w_prime},
        [child],
        {
            "attach": [(w_prime, merged)],
            "extra_edges": _bfs_edges(contracted, w_prime, blocked=side),
            "merged": (merged, x, w),
        },
    )
    _require(step.child_costs[0] >= step.parent_cost - 1, "cost dropped by more than 1")
    return step


def _r6_entry(g: Graph, classes: DegreeClasses, x: int, w: int, y: int) -> None:
    _require(x in classes.X and g.degree(x) <= 6, f"{x} is not a light vertex of X")
    _require(w in classes.W and g.has_edge(x, w), f"{w} is not a support vertex next to {x}")
    _require(
        g.has_edge(x, y) and g.degree(y) == 3 and y not in classes.W,
        f"{y} is not a degree-3 neighbour of {x} outside W",
    )


def _cut_target(child: Graph, preferred: int, around: Iterable[int]) -> int:
    cps = cutpoints(child)
    if preferred in cps:
        return preferred
    fallback = sorted(v for v in around if v in cps)
    _require(bool(fallback), "no cutpoint to attach to")
    return fallback[0]


def build_r6_1(g: Graph, witnesses: Witnesses) -> ReductionStep:
    x = _vertex(g, witnesses, "x")
    w = _vertex(g, witnesses, "w")
    y = _vertex(g, witnesses, "y")
    first = _vertex(g, witnesses, "first")
    classes = classify(g)
    _r6_entry(g, classes, x, w, y)
    _require(first != x and g.has_edge(y, first), f"{first} is not a path successor of {y}")

    stop = sorted((g.neighbors(x) & classes.S) - {y})
    result = _grow(g, start=y, first=first, excluded=x, stop_set=stop, avoid=w)
    recorded: Witnesses = {"x": x, "w": w, "y": y, "first": first, "path": list(result.path)}
    stripped = g.delete_edges(result.edges)

    if not result.early:
        child = stripped.delete_vertices([x])
        _require(w in cutpoints(child), f"{w} is not a cutpoint of the stripped graph")
        kind, attach, allowed = ReductionKind.R6_1_PATH_FULL, [(x, w)], Fraction(1)
    else:
        t, t_prime = result.pivot
        recorded["pivot"] = [t, t_prime]
        child = stripped.delete_vertices([x, t_prime])
        cps = cutpoints(child)
        _require(w in cps and t in cps, "attachment targets are not cutpoints")
        kind, attach, allowed = ReductionKind.R6_1_PATH_EARLY, [(x, w), (t_prime, t)], EARLY_DROP

    step = _step(kind, g, recorded, [child], {"attach": attach})
    _require(step.parent_cost - step.child_costs[0] <= allowed, f"{kind.value} cost drop too large")
    return step


def build_r6_2(g: Graph, witnesses: Witnesses) -> ReductionStep:
    x = _vertex(g, witnesses, "x")
    w = _vertex(g, witnesses, "w")
    y = _vertex(g, witnesses, "y")
    start = _vertex(g, witnesses, "start")
    first = _vertex(g, witnesses, "first")
    classes = classify(g)
    _r6_entry(g, classes, x, w, y)
    _require(
        start != x and g.has_edge(y, start) and g.degree(start) == 3,
        f"{start} is not a degree-3 neighbour of {y}",
    )

    contracted, merged = g.contract_edge((x, w))
    contracted_cost = graph_cost(contracted)
    _require(graph_cost(g) - contracted_cost <= THIRD, "contraction cost drop too large")
    _require(first not in (x, w), f"{first} was merged away")
    stop = sorted(g.neighbors(y) - {x, start})
    result = _grow(contracted, start=start, first=first, excluded=y, stop_set=stop, avoid=merged)
    recorded: Witnesses = {
        "x": x, "w": w, "y": y, "start": start, "first": first, "path": list(result.path),
    }
    stripped = contracted.delete_edges(result.edges)

    if not result.early:
        child = stripped.delete_vertices([y])
        target = _cut_target(child, merged, contracted.neighbors(y))
        kind, attach = ReductionKind.R6_2_PATH_FULL, [(y, target)]
    else:
        t, t_prime = result.pivot
        recorded["pivot"] = [t, t_prime]
        child = stripped.delete_vertices([y, t_prime])
        _require(t in cutpoints(child), f"{t} is not a cutpoint of the stripped graph")
        target = _cut_target(child, merged, contracted.neighbors(y) - {t_prime})
        kind, attach = ReductionKind.R6_2_PATH_EARLY, [(y, target), (t_prime, t)]
    recorded["target"] = target

    step = _step(kind, g, recorded, [child], {"attach": attach, "merged": (merged, x, w)})
    if kind is ReductionKind.R6_2_PATH_FULL:
        _require(contracted_cost - step.child_costs[0] <= 2 * THIRD, "path removal cost drop too large")
    else:
        _require(step.parent_cost - step.child_costs[0] <= EARLY_DROP, "early stop cost drop too large")
    return step


BUILDERS: Dict[str, Builder] = {
    "R1": build_r1,
    "R2": build_r2,
    "R3": build_r3,
    "R4": build_r4,
    "R5": build_r5,
    "R6_1": build_r6_1,
    "R6_2": build_r6_2,
}


def rebuild(g: Graph, kind: ReductionKind, witnesses: Witnesses) -> ReductionStep:
    """
    Re-runs the construction named by ``kind`` from recorded witnesses.

    Raises
    ------
    ReductionNotApplicable
        The witnesses no longer hold on ``g`` or lead to another step
    """
    step = BUILDERS[kind.family](g, dict(witnesses))
    if step.kind is not kind or step.witnesses != dict(witnesses):
        raise ReductionNotApplicable(
            f"witnesses reproduce {step.kind.value} {step.witnesses}, not {kind.value}"
        )
    return step


def apply_reduction(g: Graph, step: ReductionStep) -> List[Graph]:
    """
    Child graphs of ``step`` on ``g``, after re-validating its witnesses.

    Raises
    ------
    ReductionNotApplicable
    """
    checked = rebuild(g, step.kind, step.witnesses)
    log.debug("applied %s with %s -> %s", step.kind.value, step.witnesses, checked.child_sizes)
    return list(checked.children)
