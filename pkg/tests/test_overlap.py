import itertools
from math import factorial

import pytest

from ucycles.errors import BudgetExceeded, CyclicOrder, InvalidInput
from ucycles.greedy import greedy_ucycle
from ucycles.overlap import (
    ImpliedOrder,
    build_overlap_graph,
    cluster_by_signature,
    d3_keygroup_cycle_check,
    hamiltonian_cycle,
    heads,
    implied_order,
    is_hamiltonian_cycle,
    key_part,
    keys,
    linearize,
    overlaps,
    rotations,
    s4_switch,
)
from ucycles.verify import verify_multiperm_ucycle

import golden
from golden import digits


def perm_graph_index(g, p):
    return g.index((tuple(p),))


def brute_edge(x, y):
    n = len(x)
    return all((x[i] < x[j]) == (y[i - 1] < y[j - 1]) for i in range(1, n) for j in range(i + 1, n))


def test_p3_structure():
    g = build_overlap_graph(2, 3)
    assert len(g.vertices) == 6 and len(g.edges) == 18
    for p in [(1, 2, 3), (3, 2, 1)]:
        i = perm_graph_index(g, p)
        assert g.has_edge(i, i)
    loops = [g.vertices[t] for t, h, _ in g.edges if t == h]
    assert sorted(loops) == [((1, 2, 3),), ((3, 2, 1),)]


@pytest.mark.parametrize("n", range(1, 5))
def test_p_n_edges_match_definition(n):
    g = build_overlap_graph(2, n)
    got = {(g.vertices[t][0], g.vertices[h][0]) for t, h, _ in g.edges}
    perms = list(itertools.permutations(range(1, n + 1)))
    assert got == {(x, y) for x in perms for y in perms if brute_edge(x, y)}


@pytest.mark.parametrize("d, n", [(2, 1), (2, 2), (2, 3), (2, 4), (3, 2), (3, 3), (4, 2)])
def test_degrees(d, n):
    g = build_overlap_graph(d, n)
    assert len(g.vertices) == factorial(n) ** (d - 1)
    ins = g.in_degrees()
    for v in range(len(g.vertices)):
        assert g.out_degree(v) == ins[v] == n ** (d - 1)


def test_p33_edges_rowwise():
    g = build_overlap_graph(3, 3)
    for t, h, _ in g.edges:
        X, Y = g.vertices[t], g.vertices[h]
        assert all(brute_edge(a, b) for a, b in zip(X, Y))


def test_trivial_graph():
    g = build_overlap_graph(2, 1)
    assert len(g.vertices) == 1 and len(g.edges) == 1


def test_vertex_budget():
    with pytest.raises(BudgetExceeded):
        build_overlap_graph(2, 9)


def test_clusters():
    cl = cluster_by_signature(build_overlap_graph(2, 3))
    assert list(cl) == [((1, 2),), ((2, 1),)]
    assert all(len(v) == 3 for v in cl.values())
    assert len(cluster_by_signature(build_overlap_graph(2, 1))) == 1
    cl3 = cluster_by_signature(build_overlap_graph(3, 2))
    assert list(cl3.values()) == [[0, 1, 2, 3]]


def test_given_cycle_on_p3_is_valid():
    g = build_overlap_graph(2, 3)
    assert is_hamiltonian_cycle(g, [perm_graph_index(g, p) for p in golden.P3_CYCLE])


@pytest.mark.parametrize("d, n", [(2, 1), (2, 2), (2, 3), (2, 4), (3, 2), (3, 3), (2, 5), (4, 2)])
def test_hamiltonian_search(d, n):
    g = build_overlap_graph(d, n)
    res = hamiltonian_cycle(g)
    assert res.status == "found"
    assert is_hamiltonian_cycle(g, res.cycle)


def test_hamiltonian_budget_gives_unknown():
    res = hamiltonian_cycle(build_overlap_graph(2, 5), budget=3)
    assert res.status == "unknown" and res.cycle is None


def test_hamiltonian_none_when_exhausted():
    from ucycles.debruijn import TransitionGraph

    g = TransitionGraph(vertices=["a", "b", "c"])
    g.add_edge(0, 1)
    g.add_edge(1, 0)
    g.add_edge(1, 2)
    assert hamiltonian_cycle(g).status == "none"


def test_implied_order_on_p3_cycle():
    order = implied_order(golden.P3_CYCLE, 2, 3)
    assert order.is_acyclic
    assert order.named(order.cover_relations()) == golden.P3_COVER_RELATIONS
    assert linearize(order) == (golden.P3_LINEARIZED,)


def test_implied_order_trivial():
    order = implied_order([(1,)], 2, 1)
    assert order.relations == frozenset()
    assert linearize(order) == ((1,),)


def test_linearize_empty_order():
    assert linearize(ImpliedOrder(1, [frozenset()])) == ((1,),)


def test_linearize_refuses_cycles():
    order = ImpliedOrder(3, [frozenset({(0, 1), (1, 2), (2, 0)})])
    assert not order.is_acyclic
    with pytest.raises(CyclicOrder) as info:
        linearize(order)
    assert set(info.value.witness) >= {0, 1, 2}


@pytest.mark.parametrize("d, n", [(2, 2), (2, 3), (2, 4), (3, 2), (3, 3), (2, 5)])
def test_found_cycles_linearize_to_ucycles(d, n):
    g = build_overlap_graph(d, n)
    res = hamiltonian_cycle(g)
    order = implied_order([g.vertices[i] for i in res.cycle], d, n)
    assert order.is_acyclic
    values = linearize(order)
    assert verify_multiperm_ucycle(values, d, n).verdict


def test_implied_order_of_greedy_ucycle_windows():
    # reading the windows of an actual u-cycle always yields an acyclic order
    U = greedy_ucycle(3, 3)
    L = U.m
    cyc = []
    for i in range(L):
        cols = [(i + j) % L for j in range(3)]
        cyc.append(tuple(tuple(sorted(r[c] for c in cols).index(r[c]) + 1 for c in cols) for r in U.rows))
    order = implied_order(cyc, 3, 3)
    assert order.is_acyclic
    assert verify_multiperm_ucycle(linearize(order), 3, 3).verdict


def test_keys():
    assert keys(3) == [(1, 2, 3)]
    assert keys(4) == [(1, 2, 3, 4), (1, 3, 2, 4)]
    k5 = keys(5)
    assert len(k5) == 6 and all(k[0] == 1 and k[-1] == 5 for k in k5)


@pytest.mark.parametrize("n", range(3, 8))
def test_keys_and_heads_reach_every_permutation_once(n):
    ks = keys(n)
    assert len(ks) == factorial(n - 2)
    reached = [r for k in ks for h in heads(k) for r in rotations(h)]
    assert sorted(reached) == list(itertools.permutations(range(1, n + 1)))


def test_heads():
    assert heads(digits("1234")) == [digits("1234"), digits("1243"), digits("1342")]
    assert heads(digits("1324")) == [digits("1324"), digits("1423"), digits("1432")]
    assert heads(digits("123")) == [digits("123"), digits("132")]
    with pytest.raises(InvalidInput):
        heads(digits("213"))


def test_heads_share_prefix_pattern():
    for k in keys(5):
        for h in heads(k):
            assert h[0] == 1
            assert [sorted(h[:-1]).index(x) for x in h[:-1]] == [sorted(k[:-1]).index(x) for x in k[:-1]]


def test_rotations():
    assert rotations(digits("1234")) == [digits(s) for s in ("1234", "2341", "3412", "4123")]
    assert rotations((1,)) == [(1,)]
    assert rotations(digits("132")) == [digits(s) for s in ("132", "321", "213")]


def test_s3_list():
    assert key_part(digits("123")) == [digits(s) for s in ("123", "231", "312", "132", "321", "213")]


def test_s4_list_and_parts():
    cols = [key_part(k) for k in keys(4)]
    flat = [p for part in cols for p in part]
    expected = [digits(s) for col in golden.S4_LIST for s in col]
    assert flat == expected
    for part in cols:
        assert len(part) == 12
        assert all(overlaps(x, y) for x, y in zip(part, part[1:] + part[:1]))


def test_s4_switch():
    cycle = s4_switch()
    assert sorted(cycle) == list(itertools.permutations(range(1, 5)))
    g = build_overlap_graph(2, 4)
    assert is_hamiltonian_cycle(g, [perm_graph_index(g, p) for p in cycle])
    assert g.has_edge(perm_graph_index(g, digits("4213")), perm_graph_index(g, digits("2143")))
    assert g.has_edge(perm_graph_index(g, digits("3214")), perm_graph_index(g, digits("2134")))


def test_keygroup_checks():
    yes = d3_keygroup_cycle_check(digits("123"), digits("132"))
    assert yes.ok and yes.elements == golden.KEYGROUP_SMALL_CYCLE
    assert d3_keygroup_cycle_check(digits("123"), digits("123")).ok
    no = d3_keygroup_cycle_check(digits("123"), digits("231"))
    assert not no.ok and no.elements == golden.KEYGROUP_NO_CYCLE
    assert no.failing is not None and not overlaps(*no.failing)


def test_keygroup_rejects_bad_input():
    with pytest.raises(InvalidInput):
        d3_keygroup_cycle_check(digits("213"), digits("123"))
    with pytest.raises(InvalidInput):
        d3_keygroup_cycle_check(digits("123"), digits("124"))


def test_dot_export():
    dot = build_overlap_graph(2, 3).to_dot(name="P3")
    assert dot.count("->") == 18
    assert '"123" -> "123";' in dot
