from fractions import Fraction

import networkx as nx
import pytest
from hypothesis import given

from leafspan.cost import classify, graph_cost
from leafspan.exceptions import (
    DisconnectedGraph,
    InputError,
    LiftError,
    ReductionNotApplicable,
)
from leafspan.graph import Graph, SpanningForest, check_tree, is_connected
from leafspan.reductions import (
    ReductionKind,
    apply_reduction,
    find_reduction,
    lift,
    rebuild,
)
from leafspan.reductions.apply import build_r5, build_r6_1, build_r6_2
from leafspan.reductions.detect import _r6
from tests.strategies import complete, connected_graphs, cycle, path, star


def bfs_tree(g: Graph, root: int) -> SpanningForest:
    nxg = nx.Graph(g.edges())
    nxg.add_nodes_from(g.vertices())
    return SpanningForest(vertices=g.adjacency, edges=nx.bfs_edges(nxg, root))


@pytest.fixture
def two_k4() -> Graph:
    """Two copies of K4 sharing vertex 0, with a pendant 7 on vertex 1."""
    first = [(u, v) for u in (0, 1, 2, 3) for v in (0, 1, 2, 3) if u < v]
    second = [(u, v) for u in (0, 4, 5, 6) for v in (0, 4, 5, 6) if u < v]
    return Graph.from_edges(first + second + [(1, 7)])


def test_r1_contracts_a_path_vertex():
    step = find_reduction(path(3))
    assert step.kind is ReductionKind.R1_CONTRACT
    assert step.witnesses == {"a": 1, "b": 0}
    (child,) = step.children
    assert child.size == (2, 1)
    assert step.child_costs == (step.parent_cost,)

    tree = SpanningForest(vertices=child.adjacency, edges=child.edges())
    lifted = lift(path(3), step, [tree])
    assert lifted.tree.edges == frozenset({(0, 1), (1, 2)})
    assert lifted.leaves == 2


def test_r1_deletes_an_edge_on_a_cycle():
    step = find_reduction(cycle(5))
    assert step.kind is ReductionKind.R1_DELETE_EDGE
    assert step.witnesses == {"a": 0, "b": 1}
    (child,) = step.children
    assert child.size == (5, 4)
    assert step.child_costs[0] >= step.parent_cost


def test_r2_splits_at_a_core_cutpoint(two_k4):
    step = find_reduction(two_k4)
    assert step.kind is ReductionKind.R2_SPLIT
    assert step.witnesses == {"a": 0}
    assert step.child_sizes == ((6, 8), (5, 7))
    assert step.parent_cost == Fraction(13, 6)
    assert step.child_costs == (Fraction(5, 3), Fraction(4, 3))
    assert step.lift_data["pendants"] == (8, 9)

    trees = [bfs_tree(child, 0) for child in step.children]
    assert [t.leaves for t in trees] == [4, 4]
    lifted = lift(two_k4, step, trees)
    assert lifted.leaves == 6
    assert check_tree(two_k4, lifted.tree) == (6, True)


def test_r3_deletes_an_edge_between_heavy_vertices():
    k6 = complete(6)
    step = rebuild(k6, ReductionKind.R3_DELETE_EDGE, {"x": 0, "y": 1})
    (child,) = apply_reduction(k6, step)
    assert child.size == (6, 14)
    assert graph_cost(child) == graph_cost(k6) == 2

    with pytest.raises(ReductionNotApplicable):
        rebuild(complete(5), ReductionKind.R3_DELETE_EDGE, {"x": 0, "y": 1})


def test_r4_peels_a_pendant_off_a_star():
    g = star(3)
    step = find_reduction(g)
    assert step.kind is ReductionKind.R4_CUTPOINT_ATTACH
    assert step.witnesses == {"a": 1, "b": 0, "condition": "3"}
    (child,) = step.children
    assert child.vertices() == [0, 2, 3]

    lifted = lift(g, step, [SpanningForest(vertices=child.adjacency, edges=child.edges())])
    assert lifted.leaves == 3
    assert lifted.leaf_gain == 1


def test_r4_on_the_gadget(gadget_graph):
    step = find_reduction(gadget_graph)
    assert step.kind is ReductionKind.R4_CUTPOINT_ATTACH
    assert step.witnesses == {"a": 0, "b": 3, "condition": "5"}
    assert step.child_sizes == ((8, 8),)
    assert step.child_costs == (Fraction(3, 2),)
    assert step.parent_cost - step.child_costs[0] == 1


def test_record_is_plain_data(two_k4):
    record = find_reduction(two_k4).record()
    assert record == {
        "phase": "reduction",
        "kind": "R2Split",
        "witnesses": {"a": 0},
        "children": [[6, 8], [5, 7]],
        "cost": {"num": 13, "den": 6},
        "child_costs": [{"num": 5, "den": 3}, {"num": 4, "den": 3}],
    }


def test_irreducible_graphs_give_nothing(k5, petersen_graph):
    assert find_reduction(k5) is None
    assert find_reduction(petersen_graph) is None


def test_find_reduction_rejects_bad_inputs():
    with pytest.raises(InputError):
        find_reduction(path(2))
    with pytest.raises(DisconnectedGraph):
        find_reduction(Graph.from_edges([(0, 1), (1, 2), (3, 4)]))


def test_rebuild_refuses_a_different_outcome():
    with pytest.raises(ReductionNotApplicable):
        rebuild(path(3), ReductionKind.R1_DELETE_EDGE, {"a": 1, "b": 0})
    with pytest.raises(ReductionNotApplicable):
        rebuild(path(3), ReductionKind.R1_CONTRACT, {"a": 7, "b": 0})


def test_lift_checks_its_inputs():
    g = star(3)
    step = find_reduction(g)
    with pytest.raises(LiftError):
        lift(g, step, [])
    broken = SpanningForest(vertices=[0, 2, 3], edges=[(0, 2)])
    with pytest.raises(LiftError):
        lift(g, step, [broken])


@given(connected_graphs(min_vertices=3))
def test_reductions_shrink_and_replay(g):
    step = find_reduction(g)
    if step is None:
        return
    for child in step.children:
        assert child.size < g.size
        assert is_connected(child)
    assert rebuild(g, step.kind, step.witnesses) == step
    assert [c.size for c in apply_reduction(g, step)] == list(step.child_sizes)

    if step.kind in (ReductionKind.R1_CONTRACT, ReductionKind.R3_DELETE_EDGE):
        assert step.child_costs == (step.parent_cost,)
    elif step.kind is ReductionKind.R1_DELETE_EDGE:
        assert step.child_costs[0] >= step.parent_cost
    elif step.kind is ReductionKind.R2_SPLIT:
        assert step.parent_cost <= sum(step.child_costs) - Fraction(1, 2)
    elif step.kind in (ReductionKind.R4_CUTPOINT_ATTACH, ReductionKind.R5_CONTRACT_SPLIT):
        assert step.child_costs[0] >= step.parent_cost - 1


def lift_bfs(g: Graph, step, root: int):
    (child,) = step.children
    tree = bfs_tree(child, root)
    lifted = lift(g, step, [tree])
    assert lifted.leaves >= tree.leaves + step.kind.leaf_gain
    assert check_tree(g, lifted.tree) == (lifted.leaves, True)
    assert lifted.leaves >= graph_cost(g) + Fraction(3, 2)
    return lifted


def test_r5_contracts_into_a_cutpoint():
    # x = 2 with supports 1 (pendant 0) and the degree-3 neighbour 4
    g = Graph.from_edges(
        [(0, 1), (1, 2), (1, 3), (2, 3), (2, 4), (2, 5), (3, 5), (3, 6), (4, 5), (4, 6), (5, 6)]
    )
    step = rebuild(g, ReductionKind.R5_CONTRACT_SPLIT, {"x": 2, "w": 1, "w_prime": 4})
    assert step == build_r5(g, {"x": 2, "w": 1, "w_prime": 4})
    (child,) = step.children
    assert child.vertices() == [0, 3, 5, 6, 7]
    assert child.size == (5, 6)
    assert step.parent_cost == 2
    assert step.child_costs == (Fraction(1),)
    assert step.lift_data["attach"] == [(4, 7)]
    assert step.lift_data["extra_edges"] == []
    assert step.lift_data["merged"] == (7, 2, 1)

    lifted = lift_bfs(g, step, 7)
    assert lifted.leaves == 4


def test_r6_1_path_runs_into_the_stop_set():
    g = Graph.from_edges(
        [(0, 1), (1, 2), (1, 6), (1, 7), (2, 3), (2, 4), (2, 5), (3, 4), (3, 8),
         (4, 9), (5, 6), (5, 7), (6, 8), (7, 9), (8, 9)]
    )
    step = build_r6_1(g, {"x": 2, "w": 1, "y": 3, "first": 4})
    assert step.kind is ReductionKind.R6_1_PATH_FULL
    assert step.witnesses == {"x": 2, "w": 1, "y": 3, "first": 4, "path": [3, 4]}
    assert rebuild(g, step.kind, step.witnesses) == step
    assert step.child_sizes == ((9, 10),)
    assert step.parent_cost - step.child_costs[0] == Fraction(2, 3)
    assert step.lift_data["attach"] == [(2, 1)]
    lift_bfs(g, step, 1)


def test_r6_1_path_stops_before_a_dangling_triangle():
    # 4, 12, 13 hang off 10 once x = 2 and the path edge (3, 10) are gone
    g = Graph.from_edges(
        [(0, 1), (1, 2), (1, 6), (1, 7), (2, 3), (2, 4), (2, 5), (3, 8), (3, 10),
         (4, 12), (4, 13), (5, 6), (5, 7), (6, 11), (7, 8), (8, 11), (10, 11),
         (10, 12), (12, 13)]
    )
    step = build_r6_1(g, {"x": 2, "w": 1, "y": 3, "first": 10})
    assert step.kind is ReductionKind.R6_1_PATH_EARLY
    assert step.witnesses["path"] == [3, 10]
    assert step.witnesses["pivot"] == [10, 3]
    assert step.child_sizes == ((11, 13),)
    assert step.parent_cost == Fraction(19, 6)
    assert step.child_costs == (Fraction(3, 2),)
    assert step.lift_data["attach"] == [(2, 1), (3, 10)]
    assert lift_bfs(g, step, 1).leaves == 7


def test_r6_2_contracts_then_walks_to_the_stop_set():
    g = Graph.from_edges(
        [(0, 1), (1, 2), (1, 6), (2, 3), (2, 7), (2, 8), (3, 4), (3, 5), (4, 5),
         (4, 9), (5, 10), (6, 9), (6, 10), (7, 9), (7, 10), (8, 9), (8, 10)]
    )
    step = build_r6_2(g, {"x": 2, "w": 1, "y": 3, "start": 4, "first": 5})
    assert step.kind is ReductionKind.R6_2_PATH_FULL
    assert step.witnesses == {
        "x": 2, "w": 1, "y": 3, "start": 4, "first": 5, "path": [4, 5], "target": 11,
    }
    assert rebuild(g, step.kind, step.witnesses) == step
    assert step.child_sizes == ((9, 12),)
    assert step.parent_cost == 3
    assert step.child_costs == (Fraction(5, 2),)
    assert step.lift_data["attach"] == [(3, 11)]
    assert step.lift_data["merged"] == (11, 2, 1)
    lift_bfs(g, step, 11)


def test_r6_2_stops_early_and_attaches_twice():
    g = Graph.from_edges(
        [(0, 1), (1, 2), (1, 6), (2, 3), (2, 7), (2, 8), (3, 4), (3, 5), (4, 9),
         (4, 10), (5, 12), (5, 13), (6, 9), (6, 11), (7, 9), (7, 11), (8, 9),
         (8, 11), (10, 11), (10, 12), (12, 13)]
    )
    step = build_r6_2(g, {"x": 2, "w": 1, "y": 3, "start": 4, "first": 10})
    assert step.kind is ReductionKind.R6_2_PATH_EARLY
    assert step.witnesses["pivot"] == [10, 4]
    assert step.witnesses["target"] == 14
    assert step.child_sizes == ((11, 15),)
    assert step.parent_cost - step.child_costs[0] == Fraction(4, 3)
    assert step.lift_data["attach"] == [(3, 14), (4, 10)]
    assert lift_bfs(g, step, 14).leaves == 8


def test_r6_search_warns_when_passing_the_lightest_x(caplog):
    # X = {2, 3}; the degree-4 vertex 2 has no degree-3 neighbour outside W
    g = Graph.from_edges(
        [(0, 1), (1, 2), (1, 3), (2, 4), (2, 5), (2, 6), (3, 4), (3, 5), (3, 6),
         (3, 7), (7, 8), (7, 9), (8, 9)]
    )
    candidates = list(_r6(g, classify(g)))
    assert [w["x"] for _, w in candidates] == [3, 3]
    assert [w["first"] for _, w in candidates] == [8, 9]
    assert "minimal degree 4" in caplog.text
