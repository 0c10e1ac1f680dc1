"""Twin and antitwin extension sequences for graphs and tournaments"""

from typing import List, Literal, Optional, Tuple, Union

import numpy as np
from pydantic import BaseModel

from ..config import get_logger
from ..errors import PreconditionError
from ..relation.structures import GroundSet, Tournament, UndirectedGraph

logger = get_logger(__name__)

GraphLike = Union[UndirectedGraph, Tournament]


class ExtensionStep(BaseModel):
    """
    `new` joins as a twin or an antitwin of `anchor`. `joined` is the
    anchor-new edge for graphs and "anchor beats new" for tournaments.
    """

    kind: Literal["twin", "antitwin"]
    anchor: int
    new: int
    joined: bool


class ExtensionSequence(BaseModel):
    structure: Literal["graph", "tournament"]
    start: int
    steps: List[ExtensionStep] = []

    @property
    def size(self) -> int:
        return len(self.steps) + 1


def _matrix(structure: GraphLike) -> Tuple[np.ndarray, str]:
    if isinstance(structure, Tournament):
        return structure.beats, "tournament"
    if isinstance(structure, UndirectedGraph):
        return structure.adjacency, "graph"
    raise PreconditionError("extension sequences need a graph or a tournament")


def _twin_pair(sub: np.ndarray) -> Optional[Tuple[int, int, str]]:
    """
    First pair (a, b) of rows that agree (twins) or disagree (antitwins) on
    every other column; positions are local to `sub`.
    """
    k = sub.shape[0]
    rows = sub.astype(np.int64)
    agree = rows @ rows.T + (1 - rows) @ (1 - rows).T
    d = np.diag(rows)
    # columns a and b themselves are not part of the comparison
    agree -= (d[:, None] == rows.T).astype(np.int64) + (rows == d[None, :]).astype(np.int64)
    upper = np.triu(np.ones((k, k), dtype=bool), 1)
    for kind, target in (("twin", k - 2), ("antitwin", 0)):
        hits = np.argwhere(upper & (agree == target))
        if hits.size:
            a, b = (int(v) for v in hits[0])
            return a, b, kind
    return None


def extension_sequence(structure: GraphLike) -> Optional[ExtensionSequence]:
    """
    Peel a twin or an antitwin until one vertex is left, then read the
    removals backwards. None when some stage has neither.
    """
    matrix, kind_name = _matrix(structure)
    alive = list(range(structure.n))
    removed: List[ExtensionStep] = []
    while len(alive) > 1:
        sub = matrix[np.ix_(alive, alive)]
        found = _twin_pair(sub)
        if found is None:
            logger.debug("[EXTEND] stuck with %d vertices left", len(alive))
            return None
        a, b, kind = found
        anchor, new = alive[a], alive[b]
        removed.append(ExtensionStep(kind=kind, anchor=anchor, new=new, joined=bool(matrix[anchor, new])))
        alive.pop(b)
    return ExtensionSequence(structure=kind_name, start=alive[0], steps=removed[::-1])


def replay(sequence: ExtensionSequence) -> GraphLike:
    """Rebuild the graph or tournament described by an extension sequence."""
    n = sequence.size
    ids = {sequence.start} | {step.new for step in sequence.steps}
    if ids != set(range(n)):
        raise PreconditionError("extension steps must introduce each vertex 0..n-1 once")
    tournament = sequence.structure == "tournament"
    m = np.zeros((n, n), dtype=bool)
    present = [sequence.start]
    for step in sequence.steps:
        a, w = step.anchor, step.new
        if a not in present or w in present:
            raise PreconditionError(f"step {a} -> {w} does not extend the current vertices")
        for z in present:
            if z == a:
                continue
            if tournament:
                if step.kind == "twin":
                    m[w, z], m[z, w] = m[a, z], m[z, a]
                else:
                    m[w, z], m[z, w] = m[z, a], m[a, z]
            else:
                value = m[a, z] if step.kind == "twin" else not m[a, z]
                m[w, z] = m[z, w] = value
        if tournament:
            m[a, w], m[w, a] = step.joined, not step.joined
        else:
            m[a, w] = m[w, a] = step.joined
        present.append(w)
    if tournament:
        return Tournament(GroundSet(n), m)
    return UndirectedGraph(GroundSet(n), m)
