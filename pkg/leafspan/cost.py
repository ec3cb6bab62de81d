import math
from fractions import Fraction
from typing import FrozenSet, Iterable

import attr

from leafspan.exceptions import DisconnectedGraph
from leafspan.graph import Graph, is_connected

THIRD = Fraction(1, 3)
QUARTER = Fraction(1, 4)
BASE_BONUS = Fraction(3, 2)


def degree_cost(d: int) -> Fraction:
    if d >= 4:
        return THIRD
    if d in (1, 3):
        return QUARTER
    return Fraction(0)


def vertex_cost(g: Graph, v: int) -> Fraction:
    """
    Cost of a single vertex: 1/3 at degree four or more,
    1/4 at degree one or three, nothing otherwise.

    Raises
    ------
    UnknownVertex
    """
    return degree_cost(g.degree(v))


def graph_cost(g: Graph) -> Fraction:
    t = s = 0
    for ns in g.adjacency.values():
        d = len(ns)
        if d >= 4:
            t += 1
        elif d in (1, 3):
            s += 1
    return t * THIRD + s * QUARTER


def subgraph_cost(g: Graph, vs: Iterable[int]) -> Fraction:
    """Sum of the costs of ``vs``, each evaluated in ``g`` itself."""
    return sum((vertex_cost(g, v) for v in vs), Fraction(0))


@attr.s(slots=True, frozen=True)
class DegreeClasses:
    S: FrozenSet[int] = attr.ib()
    T: FrozenSet[int] = attr.ib()
    two: FrozenSet[int] = attr.ib()
    U: FrozenSet[int] = attr.ib()
    W: FrozenSet[int] = attr.ib()
    X: FrozenSet[int] = attr.ib()
    Y: FrozenSet[int] = attr.ib()


def classify(g: Graph) -> DegreeClasses:
    S, T, two, U = set(), set(), set(), set()
    for v, ns in g.adjacency.items():
        d = len(ns)
        if d >= 4:
            T.add(v)
        elif d in (1, 3):
            S.add(v)
        elif d == 2:
            two.add(v)
        if d == 1:
            U.add(v)
    W = {w for u in U for w in g.adjacency[u]}
    X = {x for w in W for x in g.adjacency[w]} - U - W
    Y = {y for x in X for y in g.adjacency[x]} - W
    return DegreeClasses(
        S=frozenset(S),
        T=frozenset(T),
        two=frozenset(two),
        U=frozenset(U),
        W=frozenset(W),
        X=frozenset(X),
        Y=frozenset(Y),
    )


@attr.s(slots=True, frozen=True)
class BoundReport:
    s: int = attr.ib()
    t: int = attr.ib()
    cost: Fraction = attr.ib()
    bound: Fraction = attr.ib()
    min_leaves: int = attr.ib()


def bound_report(g: Graph) -> BoundReport:
    """
    The guaranteed leaf count t/3 + s/4 + 3/2 of a connected graph.

    Raises
    ------
    DisconnectedGraph
        The graph is disconnected or has a single vertex
    """
    if g.v < 2 or not is_connected(g):
        raise DisconnectedGraph(f"expected a connected graph on at least two vertices, got v={g.v}")
    classes = classify(g)
    s, t = len(classes.S), len(classes.T)
    cost = t * THIRD + s * QUARTER
    bound = cost + BASE_BONUS
    return BoundReport(s=s, t=t, cost=cost, bound=bound, min_leaves=math.ceil(bound))


def as_rational(value: Fraction) -> dict:
    """Exact {num, den} form used in traces and certificates."""
    value = Fraction(value)
    return {"num": value.numerator, "den": value.denominator}
