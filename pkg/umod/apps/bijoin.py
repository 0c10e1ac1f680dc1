"""Bijoins: umodules of graphs and tournaments with their outside split"""

from typing import Dict, Iterable, List, Optional, Union

import numpy as np
from pydantic import BaseModel

from ..relation.predicates import as_index, complement, is_umodule
from ..relation.relation import build_standard_relation
from ..relation.structures import Tournament, UndirectedGraph

GraphLike = Union[UndirectedGraph, Tournament]


class BijoinWitness(BaseModel):
    """
    The outside of U splits into C and D. side[u] is "C" when u is joined
    to all of C and none of D (for tournaments: u beats C, D beats u), "D"
    for the opposite.
    """

    umodule: List[int]
    C: List[int]
    D: List[int]
    side: Dict[int, str]

    def is_valid_for(self, structure: GraphLike) -> bool:
        joined = _joined(structure)
        outside = set(self.C) | set(self.D)
        if set(self.C) & set(self.D):
            return False
        if outside | set(self.umodule) != set(range(joined.shape[0])):
            return False
        if set(self.side) != set(self.umodule):
            return False
        for u in self.umodule:
            near = {int(x) for x in np.flatnonzero(joined[u]) if int(x) in outside}
            expected = set(self.C) if self.side[u] == "C" else set(self.D)
            if near != expected:
                return False
        return True


def _joined(structure: GraphLike) -> np.ndarray:
    """Adjacency for graphs, out-arcs for tournaments."""
    if isinstance(structure, Tournament):
        return structure.beats
    return structure.adjacency


def bijoin_witness(structure: GraphLike, U: Iterable[int]) -> Optional[BijoinWitness]:
    """The C/D split of the outside of U, or None when U is not a bijoin."""
    n = structure.n
    inside = as_index(U, n)
    H = build_standard_relation(structure)
    if not is_umodule(H, inside):
        return None

    joined = _joined(structure)
    outside = complement(inside, n)
    members = [int(u) for u in inside]
    if not members:
        return BijoinWitness(umodule=[], C=[], D=sorted(int(x) for x in outside), side={})
    first = joined[members[0], outside]
    C = [int(x) for x in outside[first]]
    D = [int(x) for x in outside[~first]]

    side = {}
    for u in members:
        side[u] = "C" if np.array_equal(joined[u, outside], first) else "D"
    return BijoinWitness(umodule=members, C=C, D=D, side=side)
