"""Random and named structures for tests and benchmarks"""

from typing import Iterable, Union

import numpy as np

from .apps.extension import ExtensionSequence, ExtensionStep, replay
from .errors import PreconditionError
from .relation.relation import HomogeneousRelation
from .relation.structures import GroundSet, Tournament, UndirectedGraph

Seed = Union[int, np.random.Generator, None]


def random_graph(n: int, p: float = 0.5, seed: Seed = None) -> UndirectedGraph:
    rng = np.random.default_rng(seed)
    upper = np.triu(rng.random((n, n)) < p, 1)
    return UndirectedGraph(GroundSet(n), upper | upper.T)


def random_tournament(n: int, seed: Seed = None) -> Tournament:
    rng = np.random.default_rng(seed)
    upper = np.triu(rng.random((n, n)) < 0.5, 1)
    lower = np.triu(~upper, 1).T
    return Tournament(GroundSet(n), upper | lower)


def random_relation(n: int, k: int = 3, seed: Seed = None) -> HomogeneousRelation:
    """Each x sorts the others into at most k classes uniformly at random."""
    if k < 1:
        raise PreconditionError("a relation needs at least one class per row")
    rng = np.random.default_rng(seed)
    return HomogeneousRelation.from_matrix(rng.integers(0, k, size=(n, n)))


def transitive_tournament(n: int) -> Tournament:
    """i beats j exactly when i < j."""
    return Tournament(GroundSet(n), np.triu(np.ones((n, n), dtype=bool), 1))


def circulant_tournament(n: int, steps: Iterable[int]) -> Tournament:
    """i beats i + s (mod n) for every s in steps."""
    beats = np.zeros((n, n), dtype=bool)
    for i in range(n):
        for s in steps:
            beats[i, (i + s) % n] = True
    return Tournament(GroundSet(n), beats)


def out_diamond() -> Tournament:
    """Vertex 0 beats the 3-cycle 1 -> 2 -> 3 -> 1."""
    return Tournament.from_arcs(4, [(0, 1), (0, 2), (0, 3), (1, 2), (2, 3), (3, 1)])


def in_diamond() -> Tournament:
    """The 3-cycle 1 -> 2 -> 3 -> 1 beats vertex 0."""
    return Tournament.from_arcs(4, [(1, 0), (2, 0), (3, 0), (1, 2), (2, 3), (3, 1)])


def random_extension_sequence(n: int, structure: str = "tournament",
                              seed: Seed = None) -> ExtensionSequence:
    """Vertices 1..n-1 join one at a time as twin or antitwin of a random earlier vertex."""
    rng = np.random.default_rng(seed)
    steps = []
    for w in range(1, n):
        steps.append(ExtensionStep(
            kind="twin" if rng.random() < 0.5 else "antitwin",
            anchor=int(rng.integers(0, w)),
            new=w,
            joined=bool(rng.random() < 0.5),
        ))
    return ExtensionSequence(structure=structure, start=0, steps=steps)


def random_locally_transitive(n: int, seed: Seed = None, shuffle: bool = True) -> Tournament:
    rng = np.random.default_rng(seed)
    T = replay(random_extension_sequence(n, "tournament", rng))
    if shuffle:
        T = T.permuted(rng.permutation(n))
    return T


def random_decomposable_graph(n: int, seed: Seed = None) -> UndirectedGraph:
    """Graphs built by twin and antitwin extensions from one vertex."""
    rng = np.random.default_rng(seed)
    G = replay(random_extension_sequence(n, "graph", rng))
    return G.permuted(rng.permutation(n))


def random_permutation(n: int, seed: Seed = None) -> np.ndarray:
    return np.random.default_rng(seed).permutation(n)