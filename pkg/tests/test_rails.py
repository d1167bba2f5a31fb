import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from kvdp.digraph import Digraph
from kvdp.errors import InvalidInputError, ParseError, PreconditionError
from kvdp.generate import random_instance, random_tournament
from kvdp.oracle import oracle_a_b, oracle_rail_arrow, oracle_rails
from kvdp.rails import (
    ProblemInstance,
    Rail,
    compute_A,
    compute_B,
    confusion,
    enumerate_rails,
    format_instance,
    parse_instance,
    path_union_ok,
    rail_arrow,
    rail_count_bound,
    validate_linkage,
)

from .conftest import tournaments


def _mask(vs):
    m = 0
    for v in vs:
        m |= 1 << v
    return m


def _triple(r):
    return (r.paths, r.X, r.Y)


@pytest.fixture
def single_edge():
    return ProblemInstance(Digraph(2, [(0, 1)]), ((0, 1),))


@pytest.fixture
def four_vertices():
    return ProblemInstance(Digraph(4, [(0, 1), (2, 3)]), ((0, 1), (2, 3)))


# -- instances and linkages ---------------------------------------------------

def test_shared_terminals_rejected():
    G = Digraph(4, [(0, 1), (1, 2), (2, 3)])
    with pytest.raises(PreconditionError):
        ProblemInstance(G, ((0, 1), (1, 2)))


def test_terminal_out_of_range():
    with pytest.raises(PreconditionError):
        ProblemInstance(Digraph(2, [(0, 1)]), ((0, 5),))


def test_same_source_and_sink_allowed():
    inst = ProblemInstance(Digraph(2, []), ((0, 0), (1, 1)))
    assert validate_linkage(inst, [(0,), (1,)], for_instance=True)


def test_disjoint_single_edges_are_a_linkage(four_vertices):
    assert validate_linkage(four_vertices, [(0, 1), (2, 3)])
    assert validate_linkage(four_vertices, [(0, 1), (2, 3)], for_instance=True)


def test_shared_vertex_is_not_a_linkage():
    G = Digraph(3, [(0, 1), (1, 2)])
    inst = ProblemInstance(G, ((0, 0), (2, 2)))
    assert not validate_linkage(inst, [(0, 1), (1, 2)])


def test_wrong_endpoint_fails_for_instance(four_vertices):
    G = Digraph(4, [(0, 3), (2, 1)])
    inst = ProblemInstance(G, four_vertices.terminals)
    assert validate_linkage(inst, [(0, 3), (2, 1)])
    assert not validate_linkage(inst, [(0, 3), (2, 1)], for_instance=True)


# -- A, B and confusion -------------------------------------------------------

def test_A_empty_when_every_member_ends_at_its_sink(four_vertices):
    assert compute_A(four_vertices, [(0, 1), (2, 3)]) == frozenset()


def test_A_from_lone_source_is_everything_else():
    G = Digraph(4, [(0, 1), (1, 2), (2, 3), (3, 0)])
    inst = ProblemInstance(G, ((0, 3),))
    assert compute_A(inst, [(0,)]) == frozenset({1, 2, 3})


def test_A_on_fixed_tournament_matches_oracle():
    G = random_tournament(5, random.Random(11))
    inst = ProblemInstance(G, ((0, 4),))
    mid = next(P for P in G.simple_paths(2) if len(P) == 2 and not {0, 4} & set(P))
    A, B = oracle_a_b(inst, [mid])
    assert compute_A(inst, [mid]) == A
    assert compute_B(inst, [mid]) == B


def test_confusion_zero_for_complete_linkage(four_vertices):
    assert confusion(four_vertices, [(0, 1), (2, 3)]) == 0


def test_confusion_zero_when_linkage_covers_graph():
    G = Digraph(3, [(0, 1), (1, 2)])
    inst = ProblemInstance(G, ((0, 2),))
    assert confusion(inst, [(1, 2)]) == 0


def test_compute_A_rejects_non_linkage(single_edge):
    with pytest.raises(InvalidInputError):
        compute_A(single_edge, [(1, 0)])


@settings(max_examples=60, deadline=None)
@given(tournaments(min_n=3, max_n=6), st.randoms(use_true_random=False))
def test_A_B_match_oracle_on_random_tournaments(G, rnd):
    inst = ProblemInstance(G, ((0, G.n - 1),))
    paths = G.simple_paths(3)
    P = paths[rnd.randrange(len(paths))]
    A, B = oracle_a_b(inst, [P])
    assert compute_A(inst, [P]) == A
    assert compute_B(inst, [P]) == B
    assert confusion(inst, [P]) == len(A & B)


# -- rail enumeration ---------------------------------------------------------

def test_single_edge_rails_exact(single_edge):
    rails = enumerate_rails(single_edge, 1, 0)
    assert [(r.id, r.paths, r.X, r.Y) for r in rails] == [
        (0, ((0,),), frozenset({1}), frozenset()),
        (1, ((0, 1),), frozenset(), frozenset()),
        (2, ((1,),), frozenset(), frozenset({0})),
    ]
    assert {_triple(r) for r in rails} == oracle_rails(single_edge, 1, 0)


def _small_instances(count, seed):
    rng = random.Random(seed)
    for _ in range(count):
        n = rng.randint(2, 5)
        k = rng.randint(1, min(2, n // 2))
        yield random_instance(random_tournament(n, rng), k, rng), rng.randint(1, 2), rng.randint(0, 2)


@pytest.mark.parametrize("inst,m,c", list(_small_instances(20, 7)))
def test_enumeration_matches_oracle(inst, m, c):
    rails = enumerate_rails(inst, m, c)
    triples = [_triple(r) for r in rails]
    assert len(set(triples)) == len(triples)
    assert set(triples) == oracle_rails(inst, m, c)
    assert [r.id for r in rails] == list(range(len(rails)))
    assert len(rails) <= rail_count_bound(inst.n, inst.k, m, c)


@pytest.mark.parametrize("inst,m,c", list(_small_instances(20, 8)))
def test_rail_invariants(inst, m, c):
    for r in enumerate_rails(inst, m, c):
        assert validate_linkage(inst, r.paths)
        A, B = oracle_a_b(inst, r.paths)
        assert len(A & B) <= c
        assert not r.x_mask & r.y_mask
        assert r.X | r.Y == A | B
        assert A - B <= r.X <= A
        assert B - A <= r.Y <= B
        for P, (s, t) in zip(r.paths, inst.terminals):
            assert len(P) == 2 * m or P[0] == s or P[-1] == t


def test_enumeration_rejects_bad_parameters(single_edge):
    with pytest.raises(InvalidInputError):
        enumerate_rails(single_edge, 0, 0)
    with pytest.raises(InvalidInputError):
        enumerate_rails(single_edge, 1, -1)


# -- the arrow relation -------------------------------------------------------

def test_path_union():
    assert path_union_ok((0, 1, 2), (1, 2, 3))
    assert path_union_ok((0, 1), (1,))
    assert not path_union_ok((0, 1), (2, 3))
    assert not path_union_ok((0, 1, 2), (0, 1, 3))


def test_arrow_irreflexive(single_edge):
    for r in enumerate_rails(single_edge, 1, 0):
        assert not rail_arrow(single_edge, r, r)


@pytest.fixture
def line4():
    return ProblemInstance(Digraph(4, [(0, 1), (1, 2), (2, 3)]), ((0, 3),))


@pytest.mark.parametrize("X,Y,expected", [
    ({3}, {0}, True),
    ({0, 3}, set(), True),
    ({0}, {3}, False),
    (set(), {0, 3}, False),
])
def test_hand_built_arrow(line4, X, Y, expected):
    # M = 1-2 sees A = B = {0, 3}; M' = 2-3 takes 3 forward and leaves 1 behind
    assert compute_A(line4, [(1, 2)]) == {0, 3} == compute_B(line4, [(1, 2)])
    r1 = Rail(((1, 2),), _mask(X), _mask(Y))
    r2 = Rail(((2, 3),), 0, _mask({0, 1}))
    assert rail_arrow(line4, r1, r2) is expected
    t1 = (r1.paths, frozenset(X), frozenset(Y))
    t2 = (r2.paths, frozenset(), frozenset({0, 1}))
    assert oracle_rail_arrow(t1, t2) is expected


def test_arrow_needs_X_to_shrink(line4):
    r1 = Rail(((1, 2),), _mask({3}), _mask({0}))
    r2 = Rail(((2, 3),), _mask({0}), _mask({1}))
    assert not rail_arrow(line4, r1, r2)


@pytest.mark.parametrize("inst,m,c", list(_small_instances(12, 9)))
def test_arrow_matches_oracle(inst, m, c):
    rails = enumerate_rails(inst, m, c)
    for r1 in rails:
        for r2 in rails:
            assert rail_arrow(inst, r1, r2) == oracle_rail_arrow(_triple(r1), _triple(r2))


def test_arrow_rejects_foreign_rail(single_edge, line4):
    r = enumerate_rails(single_edge, 1, 0)[0]
    other = enumerate_rails(line4, 1, 0)[0]
    with pytest.raises(InvalidInputError):
        rail_arrow(line4, r, other)


# -- instance text format -----------------------------------------------------

def test_instance_round_trip():
    G = random_tournament(6, random.Random(3))
    inst = ProblemInstance(G, ((0, 1), (2, 3)))
    text = format_instance(inst, (3, 4))
    assert parse_instance(text, G) == (inst, (3, 4))
    assert parse_instance(format_instance(inst), G) == (inst, None)


def test_instance_with_comments():
    G = Digraph(3, [(0, 1)])
    inst, bounds = parse_instance("# demo\n1 1\n\n  # pair\n0 1\n", G)
    assert inst.terminals == ((0, 1),) and bounds is None


@pytest.mark.parametrize("text,line,column", [
    ("", 1, 1),
    ("1\n", 1, 1),
    ("1 0\n0 1\n", 1, 3),
    ("2 1\n0 1\n", 3, 1),
    ("1 1\n0 x\n", 2, 3),
    ("1 1\n0 9\n", 2, 3),
    ("1 1\n0 1\nbounds 0\n", 3, 8),
    ("1 1\n0 1\nlimits 2\n", 3, 1),
])
def test_instance_parse_errors(text, line, column):
    G = Digraph(3, [(0, 1)])
    with pytest.raises(ParseError) as info:
        parse_instance(text, G, source="x.inst")
    assert (info.value.line, info.value.column) == (line, column)


def test_instance_shared_terminal_is_precondition_error():
    with pytest.raises(PreconditionError):
        parse_instance("2 1\n0 1\n1 2\n", Digraph(3, []))
