from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from leafspan.cost import (
    as_rational,
    bound_report,
    classify,
    degree_cost,
    graph_cost,
    subgraph_cost,
    vertex_cost,
)
from leafspan.exceptions import DisconnectedGraph
from leafspan.graph import Graph
from tests.strategies import complete, connected_graphs, cycle, path, star


@pytest.mark.parametrize(
    "degree, cost",
    [(1, Fraction(1, 4)), (2, Fraction(0)), (3, Fraction(1, 4)), (4, Fraction(1, 3)), (9, Fraction(1, 3))],
)
def test_degree_cost(degree, cost):
    assert degree_cost(degree) == cost


def test_k5_bound():
    report = bound_report(complete(5))
    assert (report.s, report.t) == (0, 5)
    assert report.cost == Fraction(5, 3)
    assert report.bound == Fraction(19, 6)
    assert report.min_leaves == 4


def test_cycle_bound():
    report = bound_report(cycle(7))
    assert report.cost == 0
    assert report.bound == Fraction(3, 2)
    assert report.min_leaves == 2


def test_gadget_bound(gadget_graph):
    report = bound_report(gadget_graph)
    assert (report.s, report.t) == (6, 3)
    assert report.cost == Fraction(5, 2)
    assert report.bound == 4
    assert report.min_leaves == 4


def test_single_edge():
    report = bound_report(path(2))
    assert report.bound == 2
    assert report.min_leaves == 2


def test_bound_needs_a_connected_graph():
    with pytest.raises(DisconnectedGraph):
        bound_report(Graph.from_edges([(0, 1), (2, 3)]))
    with pytest.raises(DisconnectedGraph):
        bound_report(Graph.from_edges([], vertices=[0]))


def test_classify_pendant_layers():
    g = Graph.from_edges([(0, 1), (1, 2), (1, 5), (2, 3), (5, 3), (3, 4), (4, 2)])
    classes = classify(g)
    assert classes.U == frozenset({0})
    assert classes.W == frozenset({1})
    assert classes.X == frozenset({2, 5})
    assert classes.Y == frozenset({3, 4})


def test_classify_star():
    classes = classify(star(4))
    assert classes.T == frozenset({0})
    assert classes.U == classes.S == frozenset({1, 2, 3, 4})
    assert classes.W == frozenset({0})
    assert classes.X == frozenset()


def test_vertex_and_subgraph_cost():
    g = star(3)
    assert vertex_cost(g, 0) == Fraction(1, 4)
    assert subgraph_cost(g, [0, 1]) == Fraction(1, 2)


def test_as_rational():
    assert as_rational(Fraction(19, 6)) == {"num": 19, "den": 6}
    assert as_rational(4) == {"num": 4, "den": 1}


@given(connected_graphs())
def test_cost_is_the_degree_sum(g):
    report = bound_report(g)
    assert graph_cost(g) == report.cost == Fraction(report.t, 3) + Fraction(report.s, 4)
    assert report.bound == report.cost + Fraction(3, 2)
    assert report.min_leaves - 1 < report.bound <= report.min_leaves


DELETION_DROP = {1: Fraction(1, 4), 2: Fraction(-1, 4), 3: Fraction(1, 4), 4: Fraction(1, 12)}


@given(connected_graphs(max_vertices=10), st.data())
def test_edge_deletion_moves_only_the_endpoint_costs(g, data):
    a, b = data.draw(st.sampled_from(g.edges()))
    smaller = g.delete_edges([(a, b)])
    for v in g.vertices():
        drop = vertex_cost(g, v) - vertex_cost(smaller, v)
        if v in (a, b):
            assert drop == DELETION_DROP.get(g.degree(v), 0)
        else:
            assert drop == 0
    expected = DELETION_DROP.get(g.degree(a), 0) + DELETION_DROP.get(g.degree(b), 0)
    assert graph_cost(g) - graph_cost(smaller) == expected
