"""Concrete input structures: ground sets, graphs, tournaments, 2-structures"""

from dataclasses import dataclass, field
from typing import Dict, Iterable, Optional, Sequence, Tuple

import numpy as np

from ..errors import PreconditionError


@dataclass(frozen=True)
class GroundSet:
    """Dense element ids 0..size-1, optionally with unique external labels."""

    size: int
    labels: Optional[Tuple[str, ...]] = None

    def __post_init__(self):
        if self.size < 1:
            raise PreconditionError("ground set must have at least one element")
        if self.labels is not None:
            if len(self.labels) != self.size:
                raise PreconditionError("one label per element is required")
            if len(set(self.labels)) != self.size:
                raise PreconditionError("labels must be unique")

    def label(self, x: int) -> str:
        return self.labels[x] if self.labels else str(x)

    def index(self) -> Dict[str, int]:
        return {self.label(x): x for x in range(self.size)}

    def restrict(self, elements: Sequence[int]) -> "GroundSet":
        labels = tuple(self.label(x) for x in elements) if self.labels else None
        return GroundSet(len(elements), labels)


def _square(matrix, n: int, name: str, dtype) -> np.ndarray:
    arr = np.array(matrix, dtype=dtype)
    if arr.shape != (n, n):
        raise PreconditionError(f"{name} must be a {n}x{n} matrix, got shape {arr.shape}")
    arr.setflags(write=False)
    return arr


@dataclass(frozen=True, eq=False)
class UndirectedGraph:
    ground: GroundSet
    adjacency: np.ndarray = field(repr=False)

    def __post_init__(self):
        adj = _square(self.adjacency, self.ground.size, "adjacency", bool)
        if adj.diagonal().any():
            raise PreconditionError("graph adjacency must have a false diagonal")
        if not (adj == adj.T).all():
            raise PreconditionError("graph adjacency must be symmetric")
        object.__setattr__(self, "adjacency", adj)

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[Tuple[int, int]],
                   labels: Optional[Tuple[str, ...]] = None) -> "UndirectedGraph":
        adj = np.zeros((n, n), dtype=bool)
        for u, v in edges:
            adj[u, v] = adj[v, u] = True
        return cls(GroundSet(n, labels), adj)

    @property
    def n(self) -> int:
        return self.ground.size

    def neighbours(self, x: int) -> np.ndarray:
        return np.flatnonzero(self.adjacency[x])

    def colors(self) -> np.ndarray:
        return self.adjacency.astype(np.int64)

    def induced(self, elements: Sequence[int]) -> "UndirectedGraph":
        idx = np.asarray(elements, dtype=np.intp)
        return UndirectedGraph(self.ground.restrict(list(elements)), self.adjacency[np.ix_(idx, idx)])

    def permuted(self, perm: Sequence[int]) -> "UndirectedGraph":
        """Relabel so that old vertex x becomes perm[x]."""
        inv = np.empty(self.n, dtype=np.intp)
        inv[np.asarray(perm)] = np.arange(self.n)
        return UndirectedGraph(GroundSet(self.n), self.adjacency[np.ix_(inv, inv)])

    def __eq__(self, other):
        return isinstance(other, UndirectedGraph) and np.array_equal(self.adjacency, other.adjacency)

    __hash__ = None


@dataclass(frozen=True, eq=False)
class Tournament:
    ground: GroundSet
    beats: np.ndarray = field(repr=False)

    def __post_init__(self):
        beats = _square(self.beats, self.ground.size, "beats", bool)
        if beats.diagonal().any():
            raise PreconditionError("tournament diagonal must be 0")
        off = ~np.eye(self.ground.size, dtype=bool)
        if ((beats ^ beats.T) != off).any():
            raise PreconditionError("tournament needs exactly one arc per pair")
        object.__setattr__(self, "beats", beats)

    @classmethod
    def from_arcs(cls, n: int, arcs: Iterable[Tuple[int, int]],
                  labels: Optional[Tuple[str, ...]] = None) -> "Tournament":
        beats = np.zeros((n, n), dtype=bool)
        for u, v in arcs:
            beats[u, v] = True
        return cls(GroundSet(n, labels), beats)

    @property
    def n(self) -> int:
        return self.ground.size

    def out_neighbours(self, x: int) -> np.ndarray:
        return np.flatnonzero(self.beats[x])

    def in_neighbours(self, x: int) -> np.ndarray:
        return np.flatnonzero(self.beats[:, x])

    def out_degrees(self) -> np.ndarray:
        return self.beats.sum(axis=1)

    def colors(self) -> np.ndarray:
        return self.beats.astype(np.int64)

    def induced(self, elements: Sequence[int]) -> "Tournament":
        idx = np.asarray(elements, dtype=np.intp)
        return Tournament(self.ground.restrict(list(elements)), self.beats[np.ix_(idx, idx)])

    def permuted(self, perm: Sequence[int]) -> "Tournament":
        """Relabel so that old vertex x becomes perm[x]."""
        n = self.n
        inv = np.empty(n, dtype=np.intp)
        inv[np.asarray(perm)] = np.arange(n)
        return Tournament(GroundSet(n), self.beats[np.ix_(inv, inv)])

    def __eq__(self, other):
        return isinstance(other, Tournament) and np.array_equal(self.beats, other.beats)

    __hash__ = None


@dataclass(frozen=True, eq=False)
class TwoStructure:
    """Edge colouration of X×X; the diagonal is ignored."""

    ground: GroundSet
    color: np.ndarray = field(repr=False)

    def __post_init__(self):
        color = _square(self.color, self.ground.size, "color", np.int64)
        if (color < 0).any():
            raise PreconditionError("colours must be non-negative integers")
        object.__setattr__(self, "color", color)

    @property
    def n(self) -> int:
        return self.ground.size

    def colors(self) -> np.ndarray:
        return self.color

    def __eq__(self, other):
        return isinstance(other, TwoStructure) and np.array_equal(self.color, other.color)

    __hash__ = None
