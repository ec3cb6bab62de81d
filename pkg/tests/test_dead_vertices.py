from fractions import Fraction

import attr
import pytest

from leafspan.cost import classify
from leafspan.dead import (
    STEP_BOUNDS,
    BaseStats,
    ForestState,
    PotentialLedger,
    StepPlan,
    apply_step,
    build_base,
    check_pendant_structure,
    find_step,
    grow_cubic,
    potential,
    run_to_spanning_tree,
)
from leafspan.dead.base import _bipartite_core, _component_tree, core_base
from leafspan.dead.cubic import leaf_margin, seed
from leafspan.dead.forest import dead_leaves, measure, profit
from leafspan.dead.steps import _s7, _s8
from leafspan.exceptions import (
    BaseInvariantError,
    ForestShapeError,
    LedgerMismatch,
    ProfitBelowBound,
)
from leafspan.graph import Graph, SpanningForest, check_tree, connected_components
from tests.strategies import complete, path


@pytest.fixture
def wheel() -> Graph:
    """Hub 0 joined to the rim cycle 1-2-3-4-5-6."""
    rim = [(i, i % 6 + 1) for i in range(1, 7)]
    return Graph.from_edges([(0, i) for i in range(1, 7)] + rim)


@pytest.fixture
def k5_partial(k5) -> ForestState:
    forest = SpanningForest(vertices=[0, 1, 2], edges=[(0, 1), (0, 2)])
    return ForestState.create(k5, forest, "test")


def test_potential_of_a_whole_path():
    g = path(3)
    forest = SpanningForest(vertices=g.adjacency, edges=g.edges())
    assert dead_leaves(g, forest) == frozenset({0, 2})
    assert potential(g, forest) == Fraction(3, 2)


def test_profit_formula():
    assert profit(du=1, db=0, dk=0, ds=0, dt=1) == Fraction(1, 2)
    assert profit(du=0, db=0, dk=1, ds=2, dt=0) == Fraction(3, 2)


def test_star_base_on_k5(k5):
    st = build_base(k5, classify(k5))
    assert st.ledger.base_kind == "B1"
    assert st.alpha == Fraction(7, 3)
    assert st.forest.leaves == 4
    assert find_step(k5, st) is None


def test_k5_runs_straight_to_a_tree(k5):
    tree, ledger = run_to_spanning_tree(k5)
    assert check_tree(k5, tree) == (4, True)
    assert ledger.records() == [{"phase": "base", "kind": "B1", "alpha": {"num": 7, "den": 3}}]


def test_wheel_grows_from_the_hub(wheel):
    tree, ledger = run_to_spanning_tree(wheel)
    assert check_tree(wheel, tree) == (6, True)
    assert [r.kind for r in ledger.history] == ["S2", "S2"]
    assert [r.witnesses for r in ledger.history] == [{"x": 0, "y": 5}, {"x": 0, "y": 6}]
    assert [r.profit for r in ledger.history] == [Fraction(3, 4), Fraction(13, 12)]
    assert ledger.alpha == Fraction(25, 6)


def test_base_refuses_reducible_and_cubic_graphs(petersen_graph):
    g = path(3)
    with pytest.raises(BaseInvariantError):
        build_base(g, classify(g))
    with pytest.raises(BaseInvariantError):
        build_base(petersen_graph, classify(petersen_graph))


def test_pendant_structure_on_the_gadget(gadget_graph):
    with pytest.raises(BaseInvariantError):
        check_pendant_structure(gadget_graph, classify(gadget_graph))


def test_base_stats_inequalities():
    stats = BaseStats(w2=3, w3=0, y3=0, y4=4, x=3, k=1, k2=0, pendants=3)
    stats.check()
    with pytest.raises(BaseInvariantError):
        attr.evolve(stats, pendants=2).check()
    with pytest.raises(BaseInvariantError):
        attr.evolve(stats, k=2).check()


def test_s2_step_books_its_profit(k5, k5_partial):
    plan = find_step(k5, k5_partial)
    assert plan == StepPlan("S2", [(0, 3)], {"x": 0, "y": 3})
    assert plan.bound == STEP_BOUNDS["S2"]
    grown = apply_step(k5, k5_partial, plan)
    (record,) = grown.ledger.history
    assert (record.du, record.db, record.dk, record.ds, record.dt) == (1, 0, 0, 0, 1)
    assert record.profit == Fraction(1, 2)
    assert grown.alpha == potential(k5, grown.forest)


def test_measure_matches_the_record(k5, k5_partial):
    after = k5_partial.forest.with_edges([(0, 3)])
    assert measure(k5, k5_partial.forest, after) == {"du": 1, "db": 0, "dk": 0, "dt": 1, "ds": 0}


def test_apply_step_rejects_bad_plans(k5, k5_partial):
    with pytest.raises(ProfitBelowBound):
        apply_step(k5, k5_partial, StepPlan("S2", [(1, 3)]))
    with pytest.raises(ForestShapeError):
        apply_step(k5, k5_partial, StepPlan("S1", [(1, 2)]))
    with pytest.raises(ForestShapeError):
        apply_step(k5, k5_partial, StepPlan("S1", [(0, 9)]))


def test_ledger_is_checked_against_the_forest(k5_partial):
    tampered = attr.evolve(k5_partial, ledger=PotentialLedger("test", Fraction(0)))
    with pytest.raises(LedgerMismatch):
        tampered.check_ledger()
    k5_partial.check_ledger()


def test_cubic_growth_on_k4():
    g = complete(4)
    st = grow_cubic(g)
    assert st.forest.leaves == 3
    assert leaf_margin(st) == 8


def test_cubic_growth_on_petersen(petersen_graph):
    st = grow_cubic(petersen_graph)
    assert check_tree(petersen_graph, st.forest)[1]
    assert 4 * st.forest.leaves >= petersen_graph.v + 6
    assert leaf_margin(st) >= 5


def test_cubic_seed_needs_a_cubic_graph(k5):
    with pytest.raises(BaseInvariantError):
        seed(k5)


STAR = [(0, 1), (0, 2), (0, 3)]
TWIN_STAR = [(10, 11), (10, 12), (10, 13)]


def grown_from(edges, *stars) -> ForestState:
    g = Graph.from_edges(edges)
    forest_edges = [e for s in stars for e in s]
    forest = SpanningForest(vertices={v for e in forest_edges for v in e}, edges=forest_edges)
    return ForestState.create(g, forest, "test")


@pytest.mark.parametrize(
    "edges, stars, plan, gained",
    [
        (
            [(0, 1), (1, 2), (2, 3)],
            [[(0, 1)], [(2, 3)]],
            StepPlan("S1", [(1, 2)], {"x": 1, "y": 2}),
            Fraction(1, 3),
        ),
        (
            [(0, 1), (1, 2), (2, 3), (3, 4)],
            [[(0, 1)], [(3, 4)]],
            StepPlan("S4", [(1, 2), (2, 3)], {"z": 2, "p": [1, 3]}),
            Fraction(1, 3),
        ),
        (
            STAR + [(1, 4), (4, 5), (4, 6), (4, 7)],
            [STAR],
            StepPlan("S6.1", [(1, 4), (4, 5), (4, 6), (4, 7)], {"z": 4, "p": 1, "y": [5, 6, 7]}),
            Fraction(13, 12),
        ),
        (
            STAR + [(1, 4), (2, 4), (4, 5), (4, 6)],
            [STAR],
            StepPlan("S6.2", [(1, 4), (4, 5), (4, 6)], {"z": 4, "p": 1, "y": [5, 6]}),
            Fraction(1, 2),
        ),
        (
            STAR + [(1, 4), (4, 5), (4, 6), (5, 6), (5, 7), (6, 7)],
            [STAR],
            StepPlan("S7.1", [(1, 4), (4, 5), (4, 6)], {"z": 4, "p": 1, "y": [5, 6]}),
            Fraction(1, 12),
        ),
        (
            STAR + [(1, 4), (4, 5), (4, 6), (5, 7), (5, 8), (5, 9), (6, 7), (6, 9)],
            [STAR],
            StepPlan(
                "S7.2.3",
                [(1, 4), (4, 5), (4, 6), (5, 7), (5, 8)],
                {"z": 4, "p": 1, "y": [5, 6], "w": [7, 8]},
            ),
            Fraction(11, 12),
        ),
        (
            STAR + [(0, 6), (1, 4), (2, 4), (4, 5), (3, 5), (5, 6)],
            [STAR + [(0, 6)]],
            StepPlan("S8.1.1", [(1, 4), (4, 5)], {"z": 4, "p": [1, 2], "y": 5}),
            Fraction(1, 6),
        ),
        (
            STAR + TWIN_STAR + [(1, 4), (2, 4), (4, 5), (5, 11), (5, 12)],
            [STAR, TWIN_STAR],
            StepPlan("S8.1.2", [(1, 4), (4, 5), (5, 11)], {"z": 4, "p": [1, 2], "y": 5, "q": 11}),
            Fraction(1, 6),
        ),
        (
            STAR + [(1, 4), (2, 4), (4, 5), (5, 6), (5, 7), (5, 8)],
            [STAR],
            StepPlan(
                "S8.2.1",
                [(1, 4), (4, 5), (5, 6), (5, 7), (5, 8)],
                {"z": 4, "p": [1, 2], "y": 5, "w": [6, 7, 8]},
            ),
            Fraction(1),
        ),
        (
            STAR + [(1, 4), (2, 4), (4, 5), (5, 6), (5, 7), (6, 7), (6, 8), (7, 8)],
            [STAR],
            StepPlan(
                "S8.2.2.1",
                [(1, 4), (4, 5), (5, 6), (5, 7)],
                {"z": 4, "p": [1, 2], "y": 5, "w": [6, 7]},
            ),
            Fraction(0),
        ),
        (
            STAR + [(1, 4), (2, 4), (4, 5), (5, 6), (5, 7), (6, 7), (6, 8), (6, 9), (7, 9)],
            [STAR],
            StepPlan(
                "S8.2.2.3",
                [(1, 4), (4, 5), (5, 6), (5, 7), (6, 8), (6, 9)],
                {"z": 4, "p": [1, 2], "y": 5, "w": [6, 7], "a": 6, "r": [8, 9]},
            ),
            Fraction(1),
        ),
    ],
    ids=lambda v: v.kind if isinstance(v, StepPlan) else None,
)
def test_each_step_books_at_least_its_bound(edges, stars, plan, gained):
    st = grown_from(edges, *stars)
    assert find_step(st.graph, st) == plan
    grown = apply_step(st.graph, st, plan)
    record = grown.ledger.history[-1]
    assert record.profit == gained >= STEP_BOUNDS[plan.kind]
    assert grown.alpha == potential(st.graph, grown.forest)


@pytest.mark.parametrize(
    "finder, edges, stars, plan, gained",
    [
        # S6 claims the heavy level-1 vertex 5 first when asked through find_step
        (
            _s7,
            STAR + [(1, 4), (4, 5), (4, 6), (2, 5), (5, 7), (5, 8), (6, 7), (6, 8)],
            [STAR],
            StepPlan("S7.2.1", [(1, 4), (4, 5), (4, 6)], {"z": 4, "p": 1, "y": [5, 6]}),
            Fraction(1, 6),
        ),
        (
            _s7,
            STAR + TWIN_STAR + [(1, 4), (4, 5), (4, 6), (5, 11), (5, 7), (5, 8), (6, 7), (6, 8)],
            [STAR, TWIN_STAR],
            StepPlan(
                "S7.2.2",
                [(1, 4), (4, 5), (4, 6), (5, 11)],
                {"z": 4, "p": 1, "y": [5, 6], "q": 11},
            ),
            Fraction(1, 3),
        ),
        (
            _s8,
            STAR + [(1, 4), (2, 4), (4, 5), (5, 6), (5, 7), (3, 6), (6, 7), (6, 8), (7, 8)],
            [STAR],
            StepPlan(
                "S8.2.2.2",
                [(1, 4), (4, 5), (5, 6), (5, 7)],
                {"z": 4, "p": [1, 2], "y": 5, "w": [6, 7], "a": 6},
            ),
            Fraction(1, 12),
        ),
        (
            _s8,
            STAR + TWIN_STAR
            + [(1, 4), (2, 4), (4, 5), (5, 6), (5, 7), (6, 7), (6, 11), (6, 8), (7, 8)],
            [STAR, TWIN_STAR],
            StepPlan(
                "S8.2.2.2.join",
                [(1, 4), (4, 5), (5, 6), (5, 7), (6, 11)],
                {"z": 4, "p": [1, 2], "y": 5, "w": [6, 7], "a": 6, "q": 11},
            ),
            Fraction(1, 4),
        ),
    ],
    ids=lambda v: v.kind if isinstance(v, StepPlan) else None,
)
def test_steps_shadowed_by_s6(finder, edges, stars, plan, gained):
    st = grown_from(edges, *stars)
    assert finder(st) == plan
    grown = apply_step(st.graph, st, plan)
    assert grown.ledger.history[-1].profit == gained >= STEP_BOUNDS[plan.kind]


def test_joining_a_second_tree_is_worth_a_sixth():
    assert STEP_BOUNDS["S8.2.2.2.join"] == Fraction(1, 6)
    assert STEP_BOUNDS["S8.2.2.2"] == 0


@pytest.fixture
def two_hubs() -> Graph:
    """
    X vertices 0 and 1 of degree 7 sharing the supports 2, 3, 4 of the
    pendants 5, 6, 7. Vertices 8..14 form Y, with 11 seen by both hubs.
    """
    supports = [(x, w) for x in (0, 1) for w in (2, 3, 4)] + [(2, 5), (3, 6), (4, 7)]
    hubs = [(0, y) for y in (8, 9, 10, 11)] + [(1, y) for y in (11, 12, 13, 14)]
    rim = [(8, 9), (9, 10), (10, 12), (12, 13), (13, 14), (8, 14)]
    return Graph.from_edges(supports + hubs + rim)


def test_core_base_on_two_hubs(two_hubs):
    classes = classify(two_hubs)
    assert classes.X == frozenset({0, 1})
    assert classes.Y == frozenset(range(8, 15))
    assert two_hubs.degree(0) == two_hubs.degree(1) == 7
    check_pendant_structure(two_hubs, classes)

    core = _bipartite_core(two_hubs, classes)
    assert core.e == 17
    (part,) = connected_components(core)
    tree, stats = _component_tree(core, part, classes)
    assert stats == BaseStats(w2=3, w3=0, y3=7, y4=0, x=2, k=1, k2=1, pendants=3)
    stats.check()
    assert check_tree(two_hubs, tree) == (10, True)

    st = core_base(two_hubs, classes)
    assert st.ledger.base_kind == "B2"
    assert st.alpha == Fraction(19, 3)
    assert st.dead == tree.leaf_set()
    assert find_step(two_hubs, st) is None
