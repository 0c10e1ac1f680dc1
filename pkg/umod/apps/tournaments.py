"""Locally transitive tournaments: recognition, circular order, isomorphism, FVS"""

from typing import List, Optional, Tuple, Union

import numpy as np
from pydantic import BaseModel

from ..bipartitive.tree import CIRCULAR, PRIME
from ..config import get_logger
from ..errors import PreconditionError
from ..relation.structures import Tournament, UndirectedGraph
from ..seidel.fast import fast_umodular_tree

logger = get_logger(__name__)

OUT_DIAMOND = (1, 1, 1, 3)
IN_DIAMOND = (0, 2, 2, 2)


class CircularOrder(BaseModel):
    """Vertices around the circle, lowest id first."""

    order: List[int]

    def position(self) -> List[int]:
        pos = [0] * len(self.order)
        for i, x in enumerate(self.order):
            pos[x] = i
        return pos

    def follows_out_neighbours(self, T: Tournament) -> bool:
        """Every N+(x) is the block right after x."""
        n = len(self.order)
        pos = self.position()
        degrees = T.out_degrees()
        for x in range(n):
            expected = {self.order[(pos[x] + j) % n] for j in range(1, int(degrees[x]) + 1)}
            if expected != {int(y) for y in T.out_neighbours(x)}:
                return False
        return True

    def neighbours_are_paired(self, T: Tournament) -> bool:
        """Every two vertices next to each other on the circle are twins or antitwins."""
        n = len(self.order)
        if n <= 3:
            return True
        return all(_paired(T.beats, self.order[i], self.order[(i + 1) % n]) for i in range(n))

    def is_interval(self, elements) -> bool:
        """True when the elements are consecutive around the circle."""
        members = set(elements)
        n = len(self.order)
        if not members or len(members) == n:
            return True
        inside = [self.order[i] in members for i in range(n)]
        starts = sum(1 for i in range(n) if inside[i] and not inside[i - 1])
        return starts == 1


def _paired(beats: np.ndarray, a: int, b: int) -> bool:
    rest = np.ones(beats.shape[0], dtype=bool)
    rest[[a, b]] = False
    ra, rb = beats[a, rest], beats[b, rest]
    return bool(np.array_equal(ra, rb) or np.all(ra != rb))


def _is_transitive(beats: np.ndarray, idx: np.ndarray) -> bool:
    """A tournament is acyclic iff its scores are pairwise distinct."""
    if idx.size <= 2:
        return True
    scores = beats[np.ix_(idx, idx)].sum(axis=1)
    return np.unique(scores).size == idx.size


def _three_cycle(beats: np.ndarray, idx: np.ndarray) -> Optional[Tuple[int, int, int]]:
    """
    Two vertices of equal score, u beating v, close a 3-cycle u -> v -> w
    -> u through some w.
    """
    if idx.size < 3:
        return None
    sub = beats[np.ix_(idx, idx)]
    scores = sub.sum(axis=1)
    order = np.argsort(scores, kind="stable")
    for i in range(len(order) - 1):
        a, b = int(order[i]), int(order[i + 1])
        if scores[a] != scores[b]:
            continue
        u, v = (a, b) if sub[a, b] else (b, a)
        closing = np.flatnonzero(sub[v] & sub[:, u])
        if closing.size:
            return int(idx[u]), int(idx[v]), int(idx[closing[0]])
    return None


def is_diamond_free(T: Tournament) -> Tuple[bool, Optional[Tuple[int, int, int, int]]]:
    """
    A diamond is a vertex beating a 3-cycle (out-diamond) or beaten by one
    (in-diamond), so it is enough to look for a 3-cycle inside every N+(x)
    and N-(x). The witness is the sorted 4-set.
    """
    beats = T.beats
    for x in range(T.n):
        for idx in (T.out_neighbours(x), T.in_neighbours(x)):
            cycle = _three_cycle(beats, idx)
            if cycle is not None:
                return False, tuple(sorted((x,) + cycle))
    return True, None


def is_diamond(T: Tournament, quad) -> bool:
    idx = np.asarray(sorted(quad), dtype=np.intp)
    scores = tuple(sorted(int(s) for s in T.beats[np.ix_(idx, idx)].sum(axis=1)))
    return scores in (OUT_DIAMOND, IN_DIAMOND)


def is_locally_transitive(T: Tournament) -> bool:
    beats = T.beats
    for x in range(T.n):
        if not _is_transitive(beats, T.out_neighbours(x)):
            return False
        if not _is_transitive(beats, T.in_neighbours(x)):
            return False
    return True


def is_totally_decomposable(structure: Union[Tournament, UndirectedGraph]) -> bool:
    """No prime node of degree four or more in the umodular tree."""
    if structure.n <= 3:
        return True
    tree = fast_umodular_tree(structure, check=False)
    return not tree.has_kind(PRIME, min_degree=4)


def _source(beats: np.ndarray, idx: np.ndarray) -> int:
    sub = beats[np.ix_(idx, idx)]
    return int(idx[int(np.argmax(sub.sum(axis=1)))])


def round_order(T: Tournament) -> CircularOrder:
    """
    Walk from vertex 0: the vertex after x is the source of N+(x), or of
    N-(x) when x is a sink. The walk must visit every vertex and every
    N+(x) must follow x.
    """
    n = T.n
    if n == 0:
        return CircularOrder(order=[])
    beats = T.beats
    order = [0]
    seen = {0}
    while len(order) < n:
        x = order[-1]
        out = T.out_neighbours(x)
        nxt = _source(beats, out if out.size else T.in_neighbours(x))
        if nxt in seen:
            break
        order.append(nxt)
        seen.add(nxt)
    result = CircularOrder(order=order)
    if len(order) != n or not result.follows_out_neighbours(T):
        raise PreconditionError("tournament is not locally transitive: it has no round order")
    return result


def circular_order(T: Tournament) -> CircularOrder:
    """
    Leaves around the single circular node of the umodular tree, so every
    umodule is an interval. Up to three vertices every order qualifies.
    """
    n = T.n
    if n <= 3:
        return CircularOrder(order=list(range(n)))
    nodes = fast_umodular_tree(T, check=False).internal
    if len(nodes) != 1 or nodes[0].kind != CIRCULAR:
        raise PreconditionError("tournament is not totally decomposable: it has no circular order")
    return CircularOrder(order=[min(c) for c in nodes[0].components])


def _rotations_match(a: List[int], b: List[int]) -> bool:
    if len(a) != len(b):
        return False
    if not a:
        return True
    doubled = a + a
    k = len(b)
    return any(doubled[i:i + k] == b for i in range(len(a)))


def isomorphic_decomposable(T1: Tournament, T2: Tournament) -> bool:
    """
    A locally transitive tournament is fixed by its round order and the
    out-degrees along it, so two are isomorphic iff the degree sequences
    along their round orders agree up to rotation.
    """
    if T1.n != T2.n:
        return False
    first = round_order(T1)
    second = round_order(T2)
    d1, d2 = T1.out_degrees(), T2.out_degrees()
    return _rotations_match([int(d1[x]) for x in first.order], [int(d2[x]) for x in second.order])


def feedback_vertex_set(T: Tournament) -> List[int]:
    """
    Keep a vertex of largest out-degree (lowest id on ties) and its
    out-neighbourhood, which is transitive; drop everything else.
    """
    round_order(T)
    best = int(np.argmax(T.out_degrees()))
    kept = {best} | {int(y) for y in T.out_neighbours(best)}
    dropped = [x for x in range(T.n) if x not in kept]
    logger.debug("[FVS] kept %d around vertex %d, dropped %d", len(kept), best, len(dropped))
    return dropped
