"""Brute-force oracles over all subsets, for small ground sets only"""

from itertools import combinations
from typing import FrozenSet, Iterable, Optional, Set

import numpy as np

from ..config import get_logger, oracle_bound
from ..errors import OracleBoundError
from .predicates import is_module, is_umodule
from .relation import HomogeneousRelation, build_standard_relation
from .structures import GroundSet, UndirectedGraph

logger = get_logger(__name__)

Family = Set[FrozenSet[int]]


def _guard(n: int, bound: Optional[int]) -> None:
    limit = oracle_bound() if bound is None else bound
    if n > limit:
        raise OracleBoundError(n, limit)


def all_subsets(n: int):
    for k in range(n + 1):
        for combo in combinations(range(n), k):
            yield frozenset(combo)


def brute_force_umodules(H: HomogeneousRelation, bound: Optional[int] = None) -> Family:
    """Every subset of X (empty set and X included) passing is_umodule."""
    _guard(H.n, bound)
    return {s for s in all_subsets(H.n) if is_umodule(H, s)}


def brute_force_modules(H: HomogeneousRelation, bound: Optional[int] = None) -> Family:
    _guard(H.n, bound)
    return {s for s in all_subsets(H.n) if is_module(H, s)}


def overlaps(a: FrozenSet[int], b: FrozenSet[int]) -> bool:
    """Intersection and both differences are non-empty."""
    return bool(a & b) and bool(a - b) and bool(b - a)


def is_trivial(s: FrozenSet[int], n: int) -> bool:
    return len(s) <= 1 or len(s) >= n - 1


def strong_members(family: Iterable[FrozenSet[int]], n: int) -> Family:
    """Non-trivial members overlapping no other non-trivial member."""
    nontrivial = [s for s in family if not is_trivial(s, n)]
    return {s for s in nontrivial if not any(overlaps(s, t) for t in nontrivial)}


def strong_modules(family: Iterable[FrozenSet[int]]) -> Family:
    """Members of a module family overlapping no other member (the classical notion)."""
    members = [s for s in family if s]
    return {s for s in members if not any(overlaps(s, t) for t in members)}


def is_self_complemented(family: Family, n: int) -> bool:
    ground = frozenset(range(n))
    return all(ground - s in family for s in family)


def module_not_umodule_relation() -> HomogeneousRelation:
    """
    Four elements a, b, c, d = 0, 1, 2, 3 where {a, b} is a module (c and d
    both put a and b together) but not a umodule (a merges c and d, b
    separates them).
    """
    raw = np.array([
        [-1, 0, 1, 1],   # a: {b} {c, d}
        [0, -1, 0, 1],   # b: {a, c} {d}
        [0, 0, -1, 1],   # c: {a, b} {d}
        [0, 0, 1, -1],   # d: {a, b} {c}
    ])
    return HomogeneousRelation.from_matrix(raw, labels=("a", "b", "c", "d"))


def is_threshold_graph(G: UndirectedGraph) -> bool:
    """Peel isolated or dominating vertices until one vertex is left."""
    alive = list(range(G.n))
    adj = G.adjacency
    while len(alive) > 1:
        sub = adj[np.ix_(alive, alive)]
        degrees = sub.sum(axis=1)
        peel = np.flatnonzero((degrees == 0) | (degrees == len(alive) - 1))
        if peel.size == 0:
            return False
        alive.pop(int(peel[0]))
    return True


def check_threshold_umodule_property(G: UndirectedGraph, bound: Optional[int] = None) -> bool:
    """
    True iff in every induced subgraph each umodule is a module or the
    complement of a module. Logs a warning if the peeling recognizer
    disagrees.
    """
    _guard(G.n, bound)
    result = True
    for subset in all_subsets(G.n):
        if len(subset) < 4:
            continue
        elements = sorted(subset)
        H = build_standard_relation(G.induced(elements))
        ground = frozenset(range(H.n))
        for U in brute_force_umodules(H, bound=H.n):
            if not (is_module(H, U) or is_module(H, ground - U)):
                result = False
                break
        if not result:
            break

    if result != is_threshold_graph(G):
        logger.warning("[THRESHOLD] umodule property and peeling recognizer disagree")
    return result
