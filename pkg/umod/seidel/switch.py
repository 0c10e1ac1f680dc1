"""The Seidel switch of a relation, a graph and a tournament"""

from dataclasses import dataclass
from typing import Optional, Tuple

import numpy as np

from ..bipartitive.build import check_bipartitive
from ..config import get_logger, oracle_bound
from ..errors import OracleBoundError, PreconditionError
from ..relation.oracle import all_subsets
from ..relation.predicates import is_module, is_umodule
from ..relation.relation import HomogeneousRelation, as_relation, local_congruence
from ..relation.structures import Tournament, UndirectedGraph

logger = get_logger(__name__)


@dataclass(frozen=True)
class SwitchedRelation:
    """
    H(s) over X \\ {s}. New element i stands for old element elements[i].
    """

    relation: HomogeneousRelation
    pivot: int
    elements: Tuple[int, ...]

    @property
    def n(self) -> int:
        return self.relation.n

    def to_new(self, old: int) -> int:
        return self.elements.index(old)

    def to_old(self, new: int) -> int:
        return self.elements[new]


def _check_pivot(n: int, s: int) -> None:
    if n < 2:
        raise PreconditionError("switching needs at least two elements")
    if not 0 <= s < n:
        raise PreconditionError(f"pivot {s} is not an element of 0..{n - 1}")


def _other_class(row: np.ndarray) -> np.ndarray:
    """other[x, y]: y is outside the class of row s holding x."""
    return row[None, :] != row[:, None]


def seidel_switch(source, s: int) -> SwitchedRelation:
    """
    For x != s, with A the class of H_s not holding x, the classes of x
    become (H_x^1 xor A) and (H_x^2 xor A) on X \\ {s}. A row of s with a
    single class leaves every row unchanged.
    """
    H = as_relation(source)
    n = H.n
    _check_pivot(n, s)
    if local_congruence(H) > 2:
        raise PreconditionError("the Seidel switch needs local congruence at most 2")

    cls = H.classes.astype(np.int64)
    other = _other_class(cls[s])
    raw = cls ^ other.astype(np.int64)
    keep = [x for x in range(n) if x != s]
    idx = np.asarray(keep, dtype=np.intp)
    labels = H.ground.restrict(keep).labels
    switched = HomogeneousRelation.from_matrix(raw[np.ix_(idx, idx)], labels=labels)
    logger.debug("[SEIDEL] switched at %d, n=%d", s, n)
    return SwitchedRelation(switched, s, tuple(keep))


def switch_graph(G: UndirectedGraph, s: int) -> UndirectedGraph:
    """Complement the edges across the cut N(s) | X \\ N[s], then delete s."""
    _check_pivot(G.n, s)
    adj = G.adjacency
    cut = adj[s][None, :] != adj[s][:, None]
    flipped = adj ^ cut
    keep = [x for x in range(G.n) if x != s]
    idx = np.asarray(keep, dtype=np.intp)
    return UndirectedGraph(G.ground.restrict(keep), flipped[np.ix_(idx, idx)])


def switch_tournament(T: Tournament, s: int) -> Tournament:
    """Reverse the arcs between N+(s) and N-(s), then delete s."""
    _check_pivot(T.n, s)
    beats = T.beats
    cut = beats[s][None, :] != beats[s][:, None]
    flipped = beats ^ cut
    keep = [x for x in range(T.n) if x != s]
    idx = np.asarray(keep, dtype=np.intp)
    return Tournament(T.ground.restrict(keep), flipped[np.ix_(idx, idx)])


def verify_switch_correspondence(source, s: int, bound: Optional[int] = None,
                                 check: bool = True) -> bool:
    """
    Over every U holding s: U is a umodule of H iff X \\ U is a module of
    H(s). Exhaustive, so n is capped by the oracle bound.
    """
    H = as_relation(source)
    limit = oracle_bound() if bound is None else bound
    if H.n > limit:
        raise OracleBoundError(H.n, limit)
    if check:
        check_bipartitive(source, bound=limit)
    switched = seidel_switch(H, s)
    position = {old: new for new, old in enumerate(switched.elements)}
    ground = frozenset(range(H.n))

    for rest in all_subsets(H.n - 1):
        U = frozenset(switched.elements[i] for i in rest) | {s}
        M = [position[x] for x in ground - U]
        if is_umodule(H, U) != is_module(switched.relation, M):
            logger.warning("[SEIDEL] correspondence fails at pivot %d for U=%s", s, sorted(U))
            return False
    return True
