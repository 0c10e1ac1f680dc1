from itertools import combinations

import networkx as nx
import numpy as np
import pytest

from umod.apps import (
    BijoinWitness,
    CircularOrder,
    ExtensionSequence,
    ExtensionStep,
    bijoin_witness,
    circular_order,
    extension_sequence,
    feedback_vertex_set,
    is_diamond,
    is_diamond_free,
    is_locally_transitive,
    is_totally_decomposable,
    isomorphic_decomposable,
    replay,
    round_order,
)
from umod.errors import PreconditionError
from umod.generators import (
    circulant_tournament,
    in_diamond,
    out_diamond,
    random_decomposable_graph,
    random_graph,
    random_locally_transitive,
    random_permutation,
    random_tournament,
    transitive_tournament,
)
from umod.relation import GroundSet, Tournament, UndirectedGraph, build_standard_relation, is_umodule
from umod.relation.oracle import all_subsets


def all_tournaments(n):
    pairs = list(combinations(range(n), 2))
    for mask in range(1 << len(pairs)):
        yield Tournament.from_arcs(n, [(u, v) if mask >> i & 1 else (v, u) for i, (u, v) in enumerate(pairs)])


def is_acyclic(T, keep):
    sub = T.induced(sorted(keep))
    return nx.is_directed_acyclic_graph(nx.from_numpy_array(sub.beats.astype(int), create_using=nx.DiGraph))


def smallest_fvs(T):
    for k in range(T.n + 1):
        for dropped in combinations(range(T.n), k):
            if is_acyclic(T, set(range(T.n)) - set(dropped)):
                return k


def networkx_isomorphic(first, second):
    return nx.is_isomorphic(
        nx.from_numpy_array(first.beats.astype(int), create_using=nx.DiGraph),
        nx.from_numpy_array(second.beats.astype(int), create_using=nx.DiGraph),
    )


# C5, bull, gem, co-gem
GEM = UndirectedGraph.from_edges(5, [(0, 1), (1, 2), (2, 3), (4, 0), (4, 1), (4, 2), (4, 3)])
FORBIDDEN = [
    UndirectedGraph.from_edges(5, [(i, (i + 1) % 5) for i in range(5)]),
    UndirectedGraph.from_edges(5, [(0, 1), (0, 2), (1, 2), (1, 3), (2, 4)]),
    GEM,
    UndirectedGraph(GroundSet(5), ~GEM.adjacency & ~np.eye(5, dtype=bool)),
]


def has_forbidden_subgraph(G):
    graphs = [nx.from_numpy_array(F.adjacency.astype(int)) for F in FORBIDDEN]
    for five in combinations(range(G.n), 5):
        sub = nx.from_numpy_array(G.induced(list(five)).adjacency.astype(int))
        if any(nx.is_isomorphic(sub, F) for F in graphs):
            return True
    return False


# bijoins

def test_bijoin_witness_on_path(p4):
    witness = bijoin_witness(p4, [0, 3])
    assert witness.C == [1]
    assert witness.D == [2]
    assert witness.side == {0: "C", 3: "D"}
    assert witness.is_valid_for(p4)
    assert bijoin_witness(p4, [0, 2]) is None


def test_bijoin_witness_on_three_cycle(cycle3):
    witness = bijoin_witness(cycle3, [0, 1])
    assert witness.C == []
    assert witness.D == [2]
    assert witness.side == {0: "C", 1: "D"}
    assert witness.is_valid_for(cycle3)


def test_tampered_witness_is_invalid(p4):
    witness = BijoinWitness(umodule=[0, 3], C=[2], D=[1], side={0: "C", 3: "D"})
    assert not witness.is_valid_for(p4)


@pytest.mark.parametrize("seed", range(6))
def test_bijoins_are_exactly_the_umodules(seed):
    n = 4 + seed % 3
    for structure in (random_graph(n, seed=seed), random_tournament(n, seed=seed)):
        H = build_standard_relation(structure)
        for U in all_subsets(n):
            witness = bijoin_witness(structure, U)
            assert (witness is not None) == is_umodule(H, U)
            if witness is not None:
                assert witness.is_valid_for(structure)


# diamonds and local transitivity

def test_diamonds():
    assert is_diamond_free(out_diamond()) == (False, (0, 1, 2, 3))
    assert not is_diamond_free(in_diamond())[0]
    assert is_diamond(out_diamond(), (0, 1, 2, 3))
    assert is_diamond(in_diamond(), (3, 2, 1, 0))
    assert not is_diamond(transitive_tournament(4), (0, 1, 2, 3))


def test_named_locally_transitive_tournaments(cycle3):
    for T in (transitive_tournament(6), circulant_tournament(5, [1, 2]),
              circulant_tournament(7, [1, 2, 3]), cycle3):
        assert is_diamond_free(T) == (True, None)
        assert is_locally_transitive(T)
        assert is_totally_decomposable(T)
        assert extension_sequence(T) is not None
    assert not is_locally_transitive(out_diamond())
    assert not is_totally_decomposable(out_diamond())


@pytest.mark.parametrize("n", [3, 4, 5])
def test_characterizations_agree_on_every_small_tournament(n):
    for T in all_tournaments(n):
        answer = is_diamond_free(T)[0]
        assert is_locally_transitive(T) == answer
        assert is_totally_decomposable(T) == answer
        assert (extension_sequence(T) is not None) == answer


def test_four_vertex_diamond_recognizer_matches_scores():
    for T in all_tournaments(4):
        assert is_diamond(T, (0, 1, 2, 3)) == (not is_diamond_free(T)[0])


@pytest.mark.slow
@pytest.mark.parametrize("n", [6, 7])
def test_characterizations_agree_on_six_and_seven_vertices(n):
    rng = np.random.default_rng(n)
    samples = [random_tournament(n, seed=rng) for _ in range(600)]
    samples += [random_locally_transitive(n, seed=rng) for _ in range(100)]
    decomposable = 0
    for T in samples:
        answer = is_diamond_free(T)[0]
        assert is_locally_transitive(T) == answer
        assert is_totally_decomposable(T) == answer
        assert (extension_sequence(T) is not None) == answer
        decomposable += answer
    assert decomposable >= 100


# graphs

def test_graph_extension_sequences(p4, bull, c5):
    sequence = extension_sequence(p4)
    assert sequence.structure == "graph"
    assert replay(sequence) == p4
    assert extension_sequence(bull) is None
    assert extension_sequence(c5) is None
    assert not is_totally_decomposable(bull)
    assert is_totally_decomposable(p4)


@pytest.mark.parametrize("seed", range(40))
def test_graph_decomposability_matches_forbidden_subgraphs(seed):
    n = 5 + seed % 2
    G = random_graph(n, seed=seed)
    answer = not has_forbidden_subgraph(G)
    assert is_totally_decomposable(G) == answer
    assert (extension_sequence(G) is not None) == answer


@pytest.mark.slow
def test_every_five_vertex_graph_matches_forbidden_subgraphs():
    pairs = list(combinations(range(5), 2))
    for mask in range(1 << len(pairs)):
        G = UndirectedGraph.from_edges(5, [p for i, p in enumerate(pairs) if mask >> i & 1])
        assert is_totally_decomposable(G) == (not has_forbidden_subgraph(G))


@pytest.mark.slow
@pytest.mark.parametrize("n", [6, 7])
def test_larger_graphs_match_forbidden_subgraphs(n):
    rng = np.random.default_rng(n)
    samples = [random_graph(n, p=float(rng.uniform(0.2, 0.8)), seed=rng) for _ in range(300)]
    samples += [random_decomposable_graph(n, seed=rng) for _ in range(50)]
    for G in samples:
        answer = not has_forbidden_subgraph(G)
        assert is_totally_decomposable(G) == answer
        assert (extension_sequence(G) is not None) == answer


@pytest.mark.parametrize("seed", range(10))
def test_generated_decomposable_graphs(seed):
    G = random_decomposable_graph(8, seed=seed)
    assert is_totally_decomposable(G)
    assert replay(extension_sequence(G)) == G


# extension sequences

def test_single_vertex_sequence():
    sequence = extension_sequence(Tournament.from_arcs(1, []))
    assert sequence.steps == []
    assert sequence.size == 1


def test_replay_rebuilds_three_cycle(cycle3):
    assert replay(extension_sequence(cycle3)) == cycle3


def test_replay_rejects_bad_ids():
    bad = ExtensionSequence(structure="tournament", start=0,
                            steps=[ExtensionStep(kind="twin", anchor=2, new=1, joined=True)])
    with pytest.raises(PreconditionError):
        replay(bad)


def test_out_diamond_has_no_sequence():
    assert extension_sequence(out_diamond()) is None


@pytest.mark.parametrize("seed", range(15))
def test_random_locally_transitive_round_trip(seed):
    T = random_locally_transitive(9, seed=seed)
    assert is_locally_transitive(T)
    assert replay(extension_sequence(T)) == T


# circular orders

def test_circular_orders(cycle3):
    assert circular_order(transitive_tournament(5)).order == [0, 1, 2, 3, 4]
    assert circular_order(circulant_tournament(5, [1, 2])).order == [0, 2, 4, 1, 3]
    assert circular_order(circulant_tournament(7, [1, 2, 3])).order == [0, 3, 6, 2, 5, 1, 4]
    assert circular_order(cycle3).order == [0, 1, 2]
    with pytest.raises(PreconditionError):
        circular_order(out_diamond())


def test_round_orders(cycle3):
    T = circulant_tournament(5, [1, 2])
    order = round_order(T)
    assert order.order == [0, 1, 2, 3, 4]
    assert order.follows_out_neighbours(T)
    assert round_order(cycle3).order == [0, 1, 2]
    with pytest.raises(PreconditionError):
        round_order(out_diamond())


def test_round_order_is_not_the_circular_order():
    T = circulant_tournament(5, [1, 2])
    assert not circular_order(T).follows_out_neighbours(T)
    assert not round_order(T).neighbours_are_paired(T)


def test_interval_check():
    order = CircularOrder(order=[0, 1, 2, 3, 4])
    assert order.is_interval([4, 0])
    assert order.is_interval([1, 2, 3])
    assert not order.is_interval([0, 2])


@pytest.mark.parametrize("seed", range(20))
def test_umodules_are_arcs_of_the_circular_order(seed):
    T = random_locally_transitive(4 + seed % 4, seed=seed)
    order = circular_order(T)
    assert sorted(order.order) == list(range(T.n))
    assert order.neighbours_are_paired(T)
    assert round_order(T).follows_out_neighbours(T)
    H = build_standard_relation(T)
    for U in all_subsets(T.n):
        if is_umodule(H, U):
            assert order.is_interval(U)


# isomorphism

def test_isomorphism_examples():
    assert not isomorphic_decomposable(transitive_tournament(5), circulant_tournament(5, [1, 2]))
    assert not isomorphic_decomposable(transitive_tournament(5), transitive_tournament(4))
    with pytest.raises(PreconditionError):
        isomorphic_decomposable(out_diamond(), out_diamond())


@pytest.mark.parametrize("seed", range(12))
def test_isomorphism_matches_networkx(seed):
    rng = np.random.default_rng(seed)
    first = random_locally_transitive(7, seed=rng)
    second = random_locally_transitive(7, seed=rng) if seed % 2 else first.permuted(random_permutation(7, seed=seed))
    assert isomorphic_decomposable(first, second) == networkx_isomorphic(first, second)


# feedback vertex sets

def test_feedback_vertex_set_examples(cycle3):
    assert feedback_vertex_set(transitive_tournament(5)) == []
    assert feedback_vertex_set(cycle3) == [2]
    assert feedback_vertex_set(circulant_tournament(5, [1, 2])) == [3, 4]
    with pytest.raises(PreconditionError):
        feedback_vertex_set(out_diamond())


@pytest.mark.parametrize("seed", range(12))
def test_feedback_vertex_set_is_minimum(seed):
    T = random_locally_transitive(3 + seed % 6, seed=seed)
    dropped = feedback_vertex_set(T)
    assert is_acyclic(T, set(range(T.n)) - set(dropped))
    assert len(dropped) == smallest_fvs(T)


@pytest.mark.slow
def test_feedback_vertex_set_is_minimum_on_many_tournaments():
    rng = np.random.default_rng(200)
    for _ in range(200):
        T = random_locally_transitive(int(rng.integers(3, 10)), seed=rng)
        dropped = feedback_vertex_set(T)
        assert is_acyclic(T, set(range(T.n)) - set(dropped))
        assert len(dropped) == smallest_fvs(T)


@pytest.mark.slow
def test_relabelled_tournaments_are_isomorphic():
    rng = np.random.default_rng(100)
    for _ in range(100):
        n = int(rng.integers(4, 9))
        T = random_locally_transitive(n, seed=rng)
        assert isomorphic_decomposable(T, T.permuted(random_permutation(n, seed=rng)))


@pytest.mark.slow
def test_isomorphism_matches_networkx_on_many_pairs():
    rng = np.random.default_rng(101)
    different = 0
    for _ in range(300):
        first = random_locally_transitive(8, seed=rng)
        second = random_locally_transitive(8, seed=rng)
        expected = networkx_isomorphic(first, second)
        assert isomorphic_decomposable(first, second) == expected
        different += not expected
    assert different >= 100
