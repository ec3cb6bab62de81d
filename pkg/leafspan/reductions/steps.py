import enum
from fractions import Fraction
from typing import Any, Dict, Tuple

import attr

from leafspan.cost import as_rational
from leafspan.graph import Graph, SpanningForest


class ReductionKind(enum.Enum):
    R1_CONTRACT = "R1Contract"
    R1_DELETE_EDGE = "R1DeleteEdge"
    R2_SPLIT = "R2Split"
    R3_DELETE_EDGE = "R3DeleteEdge"
    R4_CUTPOINT_ATTACH = "R4CutpointAttach"
    R5_CONTRACT_SPLIT = "R5ContractSplit"
    R6_1_PATH_EARLY = "R6_1PathEarly"
    R6_1_PATH_FULL = "R6_1PathFull"
    R6_2_PATH_EARLY = "R6_2PathEarly"
    R6_2_PATH_FULL = "R6_2PathFull"

    @property
    def family(self) -> str:
        """Kinds built by the same construction share a family."""
        return self.name[:4] if self.name.startswith("R6") else self.name[:2]

    @property
    def leaf_gain(self) -> int:
        return _LEAF_GAIN[self]


_LEAF_GAIN = {
    ReductionKind.R1_CONTRACT: 0,
    ReductionKind.R1_DELETE_EDGE: 0,
    ReductionKind.R2_SPLIT: -2,
    ReductionKind.R3_DELETE_EDGE: 0,
    ReductionKind.R4_CUTPOINT_ATTACH: 1,
    ReductionKind.R5_CONTRACT_SPLIT: 1,
    ReductionKind.R6_1_PATH_EARLY: 2,
    ReductionKind.R6_1_PATH_FULL: 1,
    ReductionKind.R6_2_PATH_EARLY: 2,
    ReductionKind.R6_2_PATH_FULL: 1,
}


@attr.s(slots=True, frozen=True)
class ReductionStep:
    """
    One applied reduction.

    ``witnesses`` holds plain ints, lists and strings so the step can
    be written into a certificate. ``children`` and ``lift_data`` are
    derived from the witnesses and take no part in equality.
    """

    kind: ReductionKind = attr.ib()
    witnesses: Dict[str, Any] = attr.ib()
    parent_cost: Fraction = attr.ib()
    child_costs: Tuple[Fraction, ...] = attr.ib()
    children: Tuple[Graph, ...] = attr.ib(eq=False, repr=False)
    lift_data: Dict[str, Any] = attr.ib(eq=False, repr=False, factory=dict)

    @property
    def child_sizes(self) -> Tuple[Tuple[int, int], ...]:
        return tuple(child.size for child in self.children)

    def record(self) -> dict:
        return {
            "phase": "reduction",
            "kind": self.kind.value,
            "witnesses": dict(self.witnesses),
            "children": [list(size) for size in self.child_sizes],
            "cost": as_rational(self.parent_cost),
            "child_costs": [as_rational(c) for c in self.child_costs],
        }


@attr.s(slots=True, frozen=True)
class LiftedTree:
    tree: SpanningForest = attr.ib()
    leaf_gain: int = attr.ib()

    @property
    def leaves(self) -> int:
        return self.tree.leaves
