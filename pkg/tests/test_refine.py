import numpy as np
import pytest

from umod.errors import PreconditionError
from umod.generators import random_graph, random_relation, random_tournament
from umod.refine import Partition, group_rows, mu, mu_hopcroft, mu_naive, refine, signature
from umod.relation import brute_force_umodules, build_standard_relation, is_umodule


def set_partitions(items):
    if not items:
        yield []
        return
    first, rest = items[0], items[1:]
    for smaller in set_partitions(rest):
        yield [[first]] + smaller
        for i in range(len(smaller)):
            yield smaller[:i] + [[first] + smaller[i]] + smaller[i + 1:]


def coarsest_by_search(H, S):
    """Fewest-part partition thinner than {S, X \\ S} with umodule parts."""
    inside = sorted(S)
    outside = [x for x in range(H.n) if x not in S]
    parts = []
    for side in (inside, outside):
        valid = [p for p in set_partitions(side) if all(is_umodule(H, q) for q in p)]
        parts += min(valid, key=len)
    return {frozenset(p) for p in parts}


@pytest.fixture
def H4(p4):
    return build_standard_relation(p4)


def test_signature_tells_path_members_apart(H4):
    assert signature(H4, [0, 2], 0).tolist() == [0, 1]
    assert signature(H4, [0, 2], 2).tolist() == [0, 0]


def test_signature_with_one_outside_element_is_constant(H4):
    assert signature(H4, [0, 1, 2], 0).tolist() == signature(H4, [0, 1, 2], 2).tolist() == [0]


def test_signature_rejects_non_member(H4):
    with pytest.raises(PreconditionError):
        signature(H4, [0, 2], 1)


def test_group_rows_orders_groups_by_smallest_element():
    elements = np.array([4, 1, 7, 2])
    rows = np.array([[1, 0], [0, 0], [1, 0], [0, 0]])
    groups = group_rows(elements, rows)
    assert [g.tolist() for g in groups] == [[1, 2], [4, 7]]


def test_refine_splits_a_non_umodule_part(H4):
    P = Partition.of([[0, 2], [1, 3]])
    refined = refine(H4, P, [0, 2])
    assert refined.parts == ((0,), (2,), (1, 3))
    assert refined.marks == (False, False, False)


def test_refine_keeps_umodule_part(H4):
    P = Partition.of([[0, 3], [1, 2]])
    assert refine(H4, P, [0, 3]) == P


def test_refine_requires_a_part(H4):
    with pytest.raises(PreconditionError):
        refine(H4, Partition.of([[0, 3], [1, 2]]), [0, 1])


def test_partition_rejects_overlap():
    with pytest.raises(PreconditionError):
        Partition.of([[0, 1], [1, 2]])


@pytest.mark.parametrize("method", ["hopcroft", "naive"])
def test_mu_on_path(H4, method):
    assert mu(H4, [0, 3], method=method).parts == ((0, 3), (1, 2))
    assert mu(H4, [0], method=method).parts == ((0,), (1, 2, 3))
    assert mu(H4, [0, 2], method=method).parts == ((0,), (1,), (2,), (3,))


def test_mu_parts_are_marked(H4):
    assert all(mu(H4, [0, 3]).marks)


def test_mu_rejects_trivial_cut(H4):
    with pytest.raises(PreconditionError):
        mu(H4, [])
    with pytest.raises(PreconditionError):
        mu(H4, [0, 1, 2, 3])
    with pytest.raises(PreconditionError):
        mu(H4, [0], method="quadratic")


def relations(seed, n):
    return [
        build_standard_relation(random_graph(n, seed=seed)),
        build_standard_relation(random_tournament(n, seed=seed)),
        random_relation(n, k=3, seed=seed),
        random_relation(n, k=2, seed=seed),
    ]


@pytest.mark.parametrize("seed", range(15))
def test_mu_matches_search_over_partitions(seed):
    rng = np.random.default_rng(seed)
    n = int(rng.integers(3, 8))
    for H in relations(seed, n):
        S = {int(x) for x in rng.choice(n, size=int(rng.integers(1, n)), replace=False)}
        got = mu(H, S)
        assert got.as_sets() == coarsest_by_search(H, S)
        assert got.is_thinner_than(Partition.of([sorted(S), [x for x in range(n) if x not in S]]))


@pytest.mark.parametrize("seed", range(20))
def test_hopcroft_and_naive_agree(seed):
    rng = np.random.default_rng(100 + seed)
    n = int(rng.integers(2, 41))
    for H in relations(seed, n):
        S = rng.choice(n, size=int(rng.integers(1, n)), replace=False).tolist()
        assert mu_hopcroft(H, S) == mu_naive(H, S)


@pytest.mark.slow
@pytest.mark.parametrize("seed", range(5))
def test_mu_on_large_relations_yields_umodules(seed):
    H = random_relation(300, k=2, seed=seed)
    partition = mu(H, range(150))
    for part in partition.parts:
        assert is_umodule(H, part)


@pytest.mark.parametrize("seed", range(10))
def test_mu_of_a_cut_and_of_its_complement_agree(seed):
    rng = np.random.default_rng(200 + seed)
    n = int(rng.integers(2, 12))
    for H in relations(seed, n):
        S = {int(x) for x in rng.choice(n, size=int(rng.integers(1, n)), replace=False)}
        rest = set(range(n)) - S
        assert mu(H, S) == mu(H, rest)
        assert mu_naive(H, S) == mu_naive(H, rest)


@pytest.mark.parametrize("seed", range(10))
def test_refining_never_cuts_a_umodule_lying_in_a_part(seed):
    rng = np.random.default_rng(300 + seed)
    n = 6
    for H in relations(seed, n):
        umodules = [U for U in brute_force_umodules(H) if U]
        S = rng.choice(n, size=int(rng.integers(1, n)), replace=False).tolist()
        P = Partition.of([S, [x for x in range(n) if x not in S]])
        changed = True
        while changed:
            changed = False
            for C in P.parts:
                refined = refine(H, P, C)
                assert (refined == P) == is_umodule(H, C)
                for U in umodules:
                    if any(U <= set(p) for p in P.parts):
                        assert any(U <= set(p) for p in refined.parts)
                if refined != P:
                    P, changed = refined, True
                    break
        assert P.as_sets() == mu(H, S).as_sets()


@pytest.mark.slow
def test_mu_matches_search_on_many_cuts():
    rng = np.random.default_rng(500)
    for _ in range(130):
        n = int(rng.integers(3, 10))
        for H in relations(int(rng.integers(1 << 30)), n):
            S = {int(x) for x in rng.choice(n, size=int(rng.integers(1, n)), replace=False)}
            got = mu(H, S)
            assert got.as_sets() == coarsest_by_search(H, S)
            assert mu_naive(H, S) == got
            assert all(is_umodule(H, p) for p in got.parts)
