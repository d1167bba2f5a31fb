import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from kvdp.errors import InvalidInputError, NotFoundError
from kvdp.oracle import oracle_pareto_paths
from kvdp.pareto import (
    ParetoSet,
    WeightedDigraph,
    dominated,
    label_rounds,
    minimal_set,
    path_weight,
    reconstruct_witness,
    run_labels,
    strictly_dominated,
    vector_shortest_paths,
)


def random_weighted(rng, max_vertices=8, max_k=3, density=0.35):
    V = rng.randint(2, max_vertices)
    k = rng.randint(1, max_k)
    weights = {}
    for u in range(V):
        for v in range(V):
            if u != v and rng.random() < density:
                w = [0] * k
                for _ in range(rng.randint(0, 4)):
                    w[rng.randrange(k)] += 1
                weights[(u, v)] = tuple(w)
    return WeightedDigraph(V, 0, V - 1, k, weights)


# -- order and antichains -----------------------------------------------------

def test_dominance_examples():
    assert dominated((1, 2), (1, 2))
    assert not strictly_dominated((1, 2), (1, 2))
    assert not dominated((1, 3), (2, 2)) and not dominated((2, 2), (1, 3))
    assert dominated((0, 0), (4, 7))
    assert strictly_dominated((1, 2), (1, 3))


def test_dominance_arity_mismatch():
    with pytest.raises(InvalidInputError):
        dominated((1,), (1, 2))


def test_minimal_set_examples():
    assert minimal_set({(1, 3), (2, 2), (3, 1), (2, 3)}) == {(1, 3), (2, 2), (3, 1)}
    assert minimal_set(set()) == set()
    assert minimal_set({(5,), (3,), (4,)}) == {(3,)}


def test_minimal_set_mixed_arity():
    with pytest.raises(InvalidInputError):
        minimal_set({(1,), (1, 2)})


@given(st.sets(st.tuples(st.integers(0, 5), st.integers(0, 5), st.integers(0, 5)), max_size=25))
def test_minimal_set_is_antichain_and_covers(vs):
    keep = minimal_set(vs)
    for a in keep:
        assert not any(strictly_dominated(b, a) for b in keep)
    for v in vs:
        assert keep.covers(v)
    assert set(keep) <= vs


def test_pareto_set_basics():
    p = ParetoSet([(2, 1), (1, 2)])
    assert list(p) == [(1, 2), (2, 1)]
    assert (1, 2) in p and len(p) == 2
    assert p.covers((1, 5)) and not p.covers((0, 5))
    assert p == ParetoSet([(1, 2), (2, 1)]) and hash(p) == hash(ParetoSet([(1, 2), (2, 1)]))


# -- vector shortest paths ----------------------------------------------------

def test_no_route_gives_empty():
    G = WeightedDigraph(3, 0, 2, 2, {(0, 1): (1, 0)})
    assert vector_shortest_paths(G, 10) == set()


def test_parallel_routes():
    w = {(0, 1): (3, 1), (1, 3): (0, 0), (0, 2): (1, 3), (2, 3): (0, 0)}
    G = WeightedDigraph(5, 0, 3, 2, dict(w))
    assert vector_shortest_paths(G, 10) == {(3, 1), (1, 3)}
    w.update({(0, 4): (3, 2), (4, 3): (0, 0)})
    G = WeightedDigraph(5, 0, 3, 2, w)
    assert vector_shortest_paths(G, 10) == {(3, 1), (1, 3)}


def test_single_zero_edge():
    G = WeightedDigraph(2, 0, 1, 3, {(0, 1): (0, 0, 0)})
    assert vector_shortest_paths(G, 0) == {(0, 0, 0)}
    assert oracle_pareto_paths(G, n=0) == {(0, 0, 0)}


def test_sums_outside_K_n_are_discarded():
    G = WeightedDigraph(3, 0, 2, 2, {(0, 1): (2, 1), (1, 2): (1, 1)})
    assert vector_shortest_paths(G, 5) == {(3, 2)}
    assert vector_shortest_paths(G, 4) == set()


def test_weights_outside_K_n_rejected():
    G = WeightedDigraph(2, 0, 1, 2, {(0, 1): (3, 3)})
    with pytest.raises(InvalidInputError):
        vector_shortest_paths(G, 5)
    G = WeightedDigraph(2, 0, 1, 2, {(0, 1): (1,)})
    with pytest.raises(InvalidInputError):
        vector_shortest_paths(G, 5)


@pytest.mark.parametrize("seed", range(60))
def test_matches_oracle(seed):
    G = random_weighted(random.Random(seed))
    assert vector_shortest_paths(G, 10) == oracle_pareto_paths(G, n=10)


@pytest.mark.parametrize("seed", range(30))
def test_label_rounds(seed):
    G = random_weighted(random.Random(1000 + seed))
    rounds = list(label_rounds(G, 10))
    assert len(rounds) <= G.vertex_count + 1
    for prev, cur in zip(rounds, rounds[1:]):
        for v in range(G.vertex_count):
            down = ParetoSet(cur[v])
            assert all(down.covers(x) for x in prev[v])
    for Q in rounds:
        for labels in Q:
            assert minimal_set(labels) == ParetoSet(labels)
            assert all(sum(x) <= 10 for x in labels)
    # labels settle once every simple path has been seen
    assert rounds[-1] == rounds[min(len(rounds) - 1, G.vertex_count - 1)]


# -- witnesses ----------------------------------------------------------------

def test_direct_route_witness():
    G = WeightedDigraph(3, 0, 2, 1, {(0, 1): (2,), (1, 2): (0,)})
    assert reconstruct_witness(G, (2,), 5) == [0, 1, 2]


def test_witness_missing_target():
    G = WeightedDigraph(3, 0, 2, 1, {(0, 1): (2,), (1, 2): (0,)})
    with pytest.raises(NotFoundError):
        reconstruct_witness(G, (3,), 5)


@pytest.mark.parametrize("seed", range(40))
def test_witness_for_every_output(seed):
    G = random_weighted(random.Random(2000 + seed))
    search = run_labels(G, 10)
    for x in vector_shortest_paths(G, 10):
        P = reconstruct_witness(G, x, search=search)
        assert P[0] == G.source and P[-1] == G.sink
        assert len(set(P)) == len(P)
        assert path_weight(G, P) == x


@settings(max_examples=40, deadline=None)
@given(st.integers(0, 2**32 - 1))
def test_matches_oracle_property(seed):
    G = random_weighted(random.Random(seed), max_vertices=6)
    assert vector_shortest_paths(G, 10) == oracle_pareto_paths(G, n=10)
