from fractions import Fraction
from typing import Dict, FrozenSet, Iterable, List, Optional

import attr

from leafspan.cost import THIRD, QUARTER, as_rational, degree_cost, subgraph_cost
from leafspan.exceptions import LedgerMismatch
from leafspan.graph import Edge, Graph, SpanningForest

FIVE_SIXTHS = Fraction(5, 6)
SIXTH = Fraction(1, 6)


def component_map(forest: SpanningForest) -> Dict[int, int]:
    """Maps each forest vertex to the smallest vertex of its component."""
    adjacency = forest.adjacency()
    label: Dict[int, int] = {}
    for root in sorted(adjacency):
        if root in label:
            continue
        label[root] = root
        stack = [root]
        while stack:
            v = stack.pop()
            for w in adjacency[v]:
                if w not in label:
                    label[w] = root
                    stack.append(w)
    return label


def dead_leaves(g: Graph, forest: SpanningForest) -> FrozenSet[int]:
    """Leaves of ``forest`` whose graph neighbours all lie in their own component."""
    label = component_map(forest)
    return frozenset(
        v
        for v in forest.leaf_set()
        if all(label.get(w) == label[v] for w in g.neighbors(v))
    )


def potential(g: Graph, forest: SpanningForest) -> Fraction:
    """5/6 u + 1/6 b - c_G(F) - 2(k - 1), computed from scratch."""
    u = forest.leaves
    b = len(dead_leaves(g, forest))
    k = len(set(component_map(forest).values()))
    return FIVE_SIXTHS * u + SIXTH * b - subgraph_cost(g, forest.vertices) - 2 * (k - 1)


@attr.s(slots=True, frozen=True)
class StepRecord:
    kind: str = attr.ib()
    witnesses: dict = attr.ib()
    du: int = attr.ib()
    db: int = attr.ib()
    dk: int = attr.ib()
    ds: int = attr.ib()
    dt: int = attr.ib()
    profit: Fraction = attr.ib()
    bound: Optional[Fraction] = attr.ib(default=None)

    def record(self) -> dict:
        return {
            "phase": "step",
            "kind": self.kind,
            "witnesses": dict(self.witnesses),
            "delta": {"u": self.du, "b": self.db, "k": self.dk, "s": self.ds, "t": self.dt},
            "profit": as_rational(self.profit),
            "bound": None if self.bound is None else as_rational(self.bound),
        }


@attr.s(slots=True, frozen=True)
class PotentialLedger:
    base_kind: str = attr.ib()
    base_alpha: Fraction = attr.ib()
    history: List[StepRecord] = attr.ib(factory=list)

    @property
    def alpha(self) -> Fraction:
        return self.base_alpha + sum((r.profit for r in self.history), Fraction(0))

    def appended(self, record: StepRecord) -> "PotentialLedger":
        return attr.evolve(self, history=self.history + [record])

    def records(self) -> List[dict]:
        base = {
            "phase": "base",
            "kind": self.base_kind,
            "alpha": as_rational(self.base_alpha),
        }
        return [base] + [r.record() for r in self.history]


@attr.s(slots=True, frozen=True)
class ForestState:
    """
    A forest growing inside ``graph`` together with its ledger.

    The dead set and the component labels are always recomputed from the
    forest, never carried over.
    """

    graph: Graph = attr.ib()
    forest: SpanningForest = attr.ib()
    ledger: PotentialLedger = attr.ib()
    dead: FrozenSet[int] = attr.ib()
    label: Dict[int, int] = attr.ib(repr=False)

    @classmethod
    def create(cls, g: Graph, forest: SpanningForest, base_kind: str) -> "ForestState":
        ledger = PotentialLedger(base_kind=base_kind, base_alpha=potential(g, forest))
        return cls(
            graph=g,
            forest=forest,
            ledger=ledger,
            dead=dead_leaves(g, forest),
            label=component_map(forest),
        )

    @property
    def in_forest(self) -> FrozenSet[int]:
        return self.forest.vertices

    @property
    def components(self) -> int:
        return len(set(self.label.values()))

    @property
    def alpha(self) -> Fraction:
        return self.ledger.alpha

    def outside(self) -> List[int]:
        """The vertices not yet in the forest, ascending."""
        return sorted(v for v in self.graph.adjacency if v not in self.forest.vertices)

    def attach_map(self, z: int) -> FrozenSet[int]:
        """P(z): the forest vertices adjacent to an outside vertex ``z``."""
        return self.graph.neighbors(z) & self.forest.vertices

    def outside_neighbors(self, v: int) -> List[int]:
        return sorted(self.graph.neighbors(v) - self.forest.vertices)

    def level1(self) -> List[int]:
        return [z for z in self.outside() if self.attach_map(z)]

    def check_ledger(self) -> None:
        """
        Raises
        ------
        LedgerMismatch
            The ledger disagrees with the potential recomputed from scratch
        """
        fresh = potential(self.graph, self.forest)
        if fresh != self.ledger.alpha:
            raise LedgerMismatch(f"ledger says {self.ledger.alpha}, forest gives {fresh}")

    def grown(self, edges: Iterable[Edge], record: StepRecord) -> "ForestState":
        forest = self.forest.with_edges(edges)
        return attr.evolve(
            self,
            forest=forest,
            ledger=self.ledger.appended(record),
            dead=dead_leaves(self.graph, forest),
            label=component_map(forest),
        )


def measure(
    g: Graph, before: SpanningForest, after: SpanningForest
) -> Dict[str, int]:
    """Changes in u, b, k and the counts of added S and T vertices."""
    added = after.vertices - before.vertices
    k_before = len(set(component_map(before).values()))
    k_after = len(set(component_map(after).values()))
    return {
        "du": after.leaves - before.leaves,
        "db": len(dead_leaves(g, after)) - len(dead_leaves(g, before)),
        "dk": k_before - k_after,
        "dt": sum(1 for v in added if degree_cost(g.degree(v)) == THIRD),
        "ds": sum(1 for v in added if degree_cost(g.degree(v)) == QUARTER),
    }


def profit(du: int, db: int, dk: int, ds: int, dt: int) -> Fraction:
    return FIVE_SIXTHS * du + SIXTH * db + 2 * dk - THIRD * dt - QUARTER * ds
