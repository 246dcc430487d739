import itertools

import pytest
from hypothesis import given, settings

from oblivcast.graphs import Graph, make_clique, make_cycle, make_hypercube, make_path, make_two_cycles
from oblivcast.oracle import (
    BudgetExceeded,
    ListSpace,
    SearchConfig,
    classic_broadcast_time,
    classic_broadcast_time_all,
    optimal_broadcast_tree,
    optimal_list_assignment,
    verify_proposition1,
)
from oblivcast.schemes import ListAssignment, lists_from_broadcast_tree, log2_ceil
from oblivcast.simulate import Model, max_broadcast_time_reference, simulate

from strategies import connected_graphs


def naive_broadcast_time(g: Graph, s: int) -> int:
    """Every informed node picks any neighbor or stays idle; no pruning at all."""
    layer = {frozenset([s])}
    t = 0
    while not any(len(x) == g.n for x in layer):
        nxt = set()
        for state in layer:
            choices = [list(g.adjacency[v]) + [None] for v in sorted(state)]
            for pick in itertools.product(*choices):
                nxt.add(state | {w for w in pick if w is not None})
        layer = nxt
        t += 1
    return t


@settings(max_examples=60, deadline=None)
@given(connected_graphs(max_nodes=6))
def test_oracle_matches_naive(g):
    for s in range(g.n):
        assert classic_broadcast_time(g, s) == naive_broadcast_time(g, s)


def test_c5():
    assert classic_broadcast_time_all(make_cycle(5)) == (3, [3] * 5)


def test_k4():
    assert classic_broadcast_time_all(make_clique(4)) == (2, [2] * 4)


def test_two_cycles():
    b, per = classic_broadcast_time_all(make_two_cycles(1))
    assert b == 3
    assert classic_broadcast_time(make_two_cycles(1), 0) == 3
    assert classic_broadcast_time_all(make_two_cycles(2))[0] == 5


def test_q3_and_k2():
    assert classic_broadcast_time_all(make_hypercube(3))[0] == 3
    assert classic_broadcast_time_all(make_clique(2))[0] == 1


def test_budget_and_connectivity():
    with pytest.raises(BudgetExceeded):
        classic_broadcast_time(make_path(15), 0)
    with pytest.raises(BudgetExceeded):
        classic_broadcast_time(make_path(6), 0, node_budget=5)
    with pytest.raises(ValueError):
        classic_broadcast_time(Graph.from_edges(3, [(0, 1)]), 0)


@settings(max_examples=40, deadline=None)
@given(connected_graphs(max_nodes=9))
def test_oracle_lower_bound_and_tree(g):
    for s in range(g.n):
        b, tree = optimal_broadcast_tree(g, s)
        assert b >= log2_ceil(g.n)
        tree.validate(g)
        assert tree.depth() <= b


def test_optimal_tree_replays_in_b_rounds():
    # from the root, the tree lists reproduce the schedule time
    for g in (make_hypercube(3), make_two_cycles(2), make_cycle(7)):
        b, tree = optimal_broadcast_tree(g, 0)
        lists = lists_from_broadcast_tree(g, tree)
        assert simulate(g, lists, 0).completion <= b


# --- lists derived from optimal broadcast trees ----------------------------


@pytest.mark.parametrize(
    "g,bound",
    [(make_two_cycles(1), 6), (make_hypercube(3), 6), (make_clique(2), 2)],
)
def test_verify_proposition1(g, bound):
    rep = verify_proposition1(g)
    assert rep.bound == bound
    assert rep.ok
    assert rep.measured == max_broadcast_time_reference(g, rep.lists, Model.FULLY_ADAPTIVE)[0]


def test_verify_proposition1_k2_is_one_round():
    assert verify_proposition1(make_clique(2)).measured == 1


# --- exhaustive list search --------------------------------------------------


def test_search_two_cycles_k1():
    res = optimal_list_assignment(make_two_cycles(1))
    assert res.space_size == 384 and res.exact
    assert res.value == 4
    assert res.value > classic_broadcast_time_all(make_two_cycles(1))[0]


def test_search_small_cases():
    assert optimal_list_assignment(make_clique(2)).value == 1
    res = optimal_list_assignment(make_path(3))
    assert res.space_size == 2
    assert res.value == 2


def test_witness_replay():
    for g in (make_two_cycles(1), make_cycle(5), make_path(4)):
        for model in Model:
            res = optimal_list_assignment(g, SearchConfig(model))
            assert max_broadcast_time_reference(g, res.witness, model)[0] == res.value


@settings(max_examples=25, deadline=None)
@given(connected_graphs(max_nodes=6))
def test_search_respects_classic_bound(g):
    b, _ = classic_broadcast_time_all(g)
    for model in Model:
        res = optimal_list_assignment(g, SearchConfig(model))
        assert res.exact
        assert res.value >= b


@settings(max_examples=20, deadline=None)
@given(connected_graphs(max_nodes=5))
def test_subsets_never_worse_than_permutations(g):
    perm = optimal_list_assignment(g, SearchConfig(list_space=ListSpace.FULL_PERMUTATIONS))
    sub = optimal_list_assignment(g, SearchConfig(list_space=ListSpace.ORDERED_SUBSETS))
    assert sub.value <= perm.value


def test_search_matches_plain_enumeration():
    # no early cut-offs: score every assignment with the reference engine
    g = make_cycle(5)
    opts = [list(itertools.permutations(g.adjacency[v])) for v in range(g.n)]
    plain = min(
        max_broadcast_time_reference(g, ListAssignment(c), Model.FULLY_ADAPTIVE)[0]
        for c in itertools.product(*opts)
    )
    assert optimal_list_assignment(g).value == plain


def test_search_budget():
    res = optimal_list_assignment(make_two_cycles(1), SearchConfig(assignment_budget=10))
    assert not res.exact and res.explored == 10
    with pytest.raises(BudgetExceeded):
        optimal_list_assignment(make_path(13))
    with pytest.raises(ValueError):
        SearchConfig(assignment_budget=0)
