import logging
from typing import Iterable, Iterator, Optional, Set, Tuple

from leafspan.cost import DegreeClasses, classify
from leafspan.exceptions import DisconnectedGraph, InputError, ReductionNotApplicable
from leafspan.graph import Graph, cutpoints, is_connected
from leafspan.reductions.apply import (
    Builder,
    Witnesses,
    build_r1,
    build_r2,
    build_r3,
    build_r4,
    build_r5,
    build_r6_1,
    build_r6_2,
)
from leafspan.reductions.steps import ReductionStep

log = logging.getLogger(__name__)

Candidate = Tuple[Builder, Witnesses]


def _first_valid(g: Graph, candidates: Iterable[Candidate]) -> Optional[ReductionStep]:
    for builder, witnesses in candidates:
        try:
            return builder(g, witnesses)
        except ReductionNotApplicable as exc:
            log.debug("skipping %s %s: %s", builder.__name__, witnesses, exc)
    return None


def _r1(g: Graph) -> Iterator[Candidate]:
    for a in g.vertices():
        if g.degree(a) == 2:
            yield build_r1, {"a": a, "b": min(g.neighbors(a))}
            return


def _r2(g: Graph, classes: DegreeClasses) -> Iterator[Candidate]:
    core = g.delete_vertices(classes.U)
    if core.v < 3:
        return
    for a in sorted(cutpoints(core)):
        yield build_r2, {"a": a}


def _r3(g: Graph) -> Iterator[Candidate]:
    for x, y in g.edges():
        if g.degree(x) >= 5 and g.degree(y) >= 5:
            yield build_r3, {"x": x, "y": y}


def _r4(g: Graph, classes: DegreeClasses) -> Iterator[Candidate]:
    seen: Set[Tuple[int, int]] = set()

    def candidate(a: int, b: int, condition: str) -> Iterator[Candidate]:
        if (a, b) not in seen:
            seen.add((a, b))
            yield build_r4, {"a": a, "b": b, "condition": condition}

    for w in sorted(classes.W):
        hanging = sorted(g.neighbors(w) & classes.U)
        if len(hanging) >= 2:
            yield from candidate(hanging[0], w, "3")
    for w in sorted(classes.W):
        for x in sorted(g.neighbors(w) - classes.U):
            if g.degree(x) == 3:
                yield from candidate(x, w, "2")
    near_w = sorted({x for w in classes.W for x in g.neighbors(w)} - classes.U)
    for x in near_w:
        light = len(g.neighbors(x) & classes.S)
        if g.degree(x) <= 6 and light <= 1:
            yield from candidate(x, min(g.neighbors(x) & classes.W), "4")
    for x in near_w:
        light = len(g.neighbors(x) & classes.S)
        if g.degree(x) == 4 and light <= 2:
            yield from candidate(x, min(g.neighbors(x) & classes.W), "5")

    # the remaining forms need b to be a cutpoint of G - a
    for condition, small_only in (("1", True), ("scan", False)):
        for a in g.vertices():
            if small_only and g.degree(a) > 3:
                continue
            around = sorted(g.neighbors(a))
            if all((a, b) in seen for b in around):
                continue
            separators = cutpoints(g.delete_vertices([a]))
            for b in around:
                if b in separators:
                    yield from candidate(a, b, condition)


def _r5(g: Graph, classes: DegreeClasses) -> Iterator[Candidate]:
    for x in sorted(classes.X):
        around = sorted(g.neighbors(x))
        for w in around:
            if w not in classes.W or g.degree(w) != 3:
                continue
            for w_prime in around:
                if w_prime == w or g.degree(w_prime) != 3:
                    continue
                if len(g.neighbors(w_prime) & classes.S) <= 1:
                    yield build_r5, {"x": x, "w": w, "w_prime": w_prime}


def _r6(g: Graph, classes: DegreeClasses) -> Iterator[Candidate]:
    light = sorted((g.degree(x), x) for x in classes.X if g.degree(x) <= 6)
    for dx, x in light:
        if dx > light[0][0]:
            log.warning(
                "no R6 witness at X vertex %d of minimal degree %d, trying %d of degree %d",
                light[0][1], light[0][0], x, dx,
            )
        ys = [
            y for y in sorted(g.neighbors(x))
            if g.degree(y) == 3 and y not in classes.W
        ]
        # neighbours whose other two neighbours both have degree 3 come first
        ys.sort(key=lambda y: (not all(g.degree(v) == 3 for v in g.neighbors(y) - {x}), y))
        for w in sorted(g.neighbors(x) & classes.W):
            variants = ("1", "2") if dx == 4 and g.degree(w) >= 4 else ("2", "1")
            for variant in variants:
                for y in ys:
                    others = sorted(g.neighbors(y) - {x})
                    if variant == "1":
                        for first in others:
                            yield build_r6_1, {"x": x, "w": w, "y": y, "first": first}
                        continue
                    for start in others:
                        if g.degree(start) != 3:
                            continue
                        for first in sorted(g.neighbors(start) - {y, x, w}):
                            yield build_r6_2, {
                                "x": x, "w": w, "y": y, "start": start, "first": first,
                            }


def find_reduction(g: Graph) -> Optional[ReductionStep]:
    """
    The first applicable reduction, in the order R1 to R6.

    Within a case witnesses are tried lowest id first and the first one
    whose construction validates is returned. Nothing is returned once
    the graph has no degree-2 vertex and no pendant vertex, or when every
    candidate fails validation.

    Raises
    ------
    DisconnectedGraph
    InputError
        The graph has two vertices or fewer
    """
    if not is_connected(g):
        raise DisconnectedGraph("reductions need a connected graph")
    if g.v <= 2:
        raise InputError("graphs on two vertices are solved directly")

    step = _first_valid(g, _r1(g))
    if step is not None:
        return step
    classes = classify(g)
    if not classes.U:
        return None
    for family in (
        _r2(g, classes),
        _r3(g),
        _r4(g, classes),
        _r5(g, classes),
        _r6(g, classes),
    ):
        step = _first_valid(g, family)
        if step is not None:
            log.debug("found %s at %s", step.kind.value, step.witnesses)
            return step
    return None
