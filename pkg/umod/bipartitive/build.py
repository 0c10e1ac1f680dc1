"""Generic construction of the umodular decomposition tree from MU({0, y})"""

from typing import Dict, List, Optional

import numpy as np

from ..config import get_logger, oracle_bound
from ..errors import DecompositionError, PreconditionError
from ..relation.oracle import brute_force_umodules, is_self_complemented
from ..relation.predicates import check_four_elements, is_umodule
from ..relation.relation import HomogeneousRelation, as_relation
from ..relation.structures import Tournament, UndirectedGraph
from ..strong.laminar import (
    PairParts,
    pair_partitions,
    strong_from_candidates,
    threshold_candidates,
)
from .tree import CIRCULAR, COMPLETE, PRIME, Component, NodeSpec, UDecompTree, node_components

logger = get_logger(__name__)


def check_bipartitive(source, bound: Optional[int] = None) -> None:
    """
    Raise PreconditionError unless the umodules are closed under
    complement. Graphs and tournaments always satisfy the four elements
    condition and pass unchecked. Otherwise the four elements condition is
    tried first; the brute-force family settles the rest when n is under
    the oracle bound.
    """
    if isinstance(source, (UndirectedGraph, Tournament)):
        return
    H = as_relation(source)
    ok, witness = check_four_elements(H)
    if ok:
        return
    limit = oracle_bound() if bound is None else bound
    if H.n <= limit and is_self_complemented(brute_force_umodules(H, bound=limit), H.n):
        logger.debug("[TREE] four elements fails at %s but the family is self-complemented", witness)
        return
    raise PreconditionError(
        f"umodule family is not known to be self-complemented (four elements violated at {witness})"
    )


def strong_sides(H: HomogeneousRelation, workers: Optional[int] = None) -> List[Component]:
    """
    The 0-avoiding sides of the strong bipartitions. Two bipartitions cross
    exactly when their 0-avoiding sides overlap, so only MU({0, y}) is
    needed: a 0-avoiding umodule V overlapping M sits in the part of
    MU({0, a}) holding it, for a in M \\ V, and that part overlaps M too.
    """
    n = H.n
    if n <= 3:
        return []
    pairs = [(0, y) for y in range(1, n)]
    table = PairParts(n)
    for pair, partition in zip(pairs, pair_partitions(H, pairs, workers)):
        table.add(pair, partition)

    candidates = set()
    for m in range(1, n):
        candidates |= threshold_candidates(table, 0, m)
    avoiding = {p for p in table.parts if not p & 1}
    sides = strong_from_candidates(H, (c for c in candidates if not c & 1), avoiding)
    logger.debug("[TREE] n=%d candidates=%d strong sides=%d", n, len(candidates), len(sides))
    return sides


def _cycle(joined: np.ndarray) -> Optional[List[int]]:
    """The vertex order of `joined` if it is one cycle through every vertex."""
    k = joined.shape[0]
    if not (joined.sum(axis=1) == 2).all():
        return None
    order = [0]
    previous = -1
    while True:
        current = order[-1]
        step = next(int(j) for j in np.flatnonzero(joined[current]) if j != previous)
        if step == 0:
            break
        order.append(step)
        previous = current
        if len(order) > k:
            return None
    return order if len(order) == k else None


def type_node(H: HomogeneousRelation, components: List[Component]) -> NodeSpec:
    """
    Which pairs of incident components unite into a umodule decides the
    type: none for prime, all for complete, a Hamiltonian cycle for
    circular.
    """
    k = len(components)
    if k == 3:
        return NodeSpec.make(PRIME, components)
    joined = np.zeros((k, k), dtype=bool)
    for i in range(k):
        for j in range(i + 1, k):
            joined[i, j] = joined[j, i] = is_umodule(H, components[i] | components[j])
    pairs = int(joined.sum()) // 2
    if pairs == 0:
        return NodeSpec.make(PRIME, components)
    if pairs == k * (k - 1) // 2:
        return NodeSpec.make(COMPLETE, components)
    order = _cycle(joined)
    if order is None:
        raise DecompositionError(
            f"node with {k} components has {pairs} umodular pairs, matching no node type"
        )
    return NodeSpec.make(CIRCULAR, [components[i] for i in order])


def tree_from_sides(H: HomogeneousRelation, sides: List[Component]) -> UDecompTree:
    n = H.n
    if n <= 2:
        return UDecompTree.from_nodes(n, [], H.ground.labels)
    root = frozenset(range(1, n))
    around: Dict[Component, List[Component]] = node_components(n, list(sides) + [root])
    nodes = [type_node(H, comps) for comps in around.values()]
    return UDecompTree.from_nodes(n, nodes, H.ground.labels)


def build_umodular_tree(source, workers: Optional[int] = None,
                        check: bool = True) -> UDecompTree:
    """Unrooted tree of the strong bipartitions of a self-complemented umodule family."""
    H = as_relation(source)
    if check:
        check_bipartitive(source)
    sides = strong_sides(H, workers)
    tree = tree_from_sides(H, sides)
    logger.info("[TREE] generic n=%d internal=%d kinds=%s", H.n, len(tree.internal), tree.kinds())
    return tree


def strong_bipartitions(tree: UDecompTree) -> List[Component]:
    """0-avoiding sides of the non-trivial edges of a tree."""
    n = tree.size
    return sorted(
        (spec.side(n) for spec in tree.internal if len(spec.side(n)) <= n - 2),
        key=sorted,
    )
