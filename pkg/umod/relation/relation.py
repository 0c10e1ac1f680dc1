"""Homogeneous relations stored as normalized class-id matrices"""

from dataclasses import dataclass, field
from typing import Optional, Sequence, Union

import numpy as np

from ..errors import PreconditionError
from .structures import GroundSet, Tournament, TwoStructure, UndirectedGraph

CLASS_DTYPE = np.int32
SENTINEL = np.iinfo(CLASS_DTYPE).max

Structure = Union[UndirectedGraph, Tournament, TwoStructure]


def normalize_rows(values: np.ndarray) -> np.ndarray:
    """
    Renumber every row of a 2-D integer array by order of first appearance.

    Row [7, 3, 7, 9] becomes [0, 1, 0, 2]. Works on all rows at once:
    each (row, value) pair is a key, keys are ranked by first occurrence
    and the rank is shifted to start at zero inside its row.
    """
    values = np.asarray(values)
    if values.ndim != 2:
        raise ValueError("normalize_rows expects a 2-D array")
    rows, cols = values.shape
    if rows == 0 or cols == 0:
        return np.zeros((rows, cols), dtype=CLASS_DTYPE)

    shifted = values.astype(np.int64) - values.min()
    span = int(shifted.max()) + 1
    keys = (np.arange(rows, dtype=np.int64)[:, None] * span + shifted).ravel()
    _, first, inverse = np.unique(keys, return_index=True, return_inverse=True)

    order = np.argsort(first, kind="stable")
    key_rows = first[order] // cols
    row_start = np.searchsorted(key_rows, key_rows, side="left")
    rank = np.empty(len(first), dtype=np.int64)
    rank[order] = np.arange(len(first)) - row_start
    return rank[inverse.ravel()].reshape(rows, cols).astype(CLASS_DTYPE)


def _normalize_matrix(raw: np.ndarray) -> np.ndarray:
    n = raw.shape[0]
    if n == 1:
        return np.full((1, 1), SENTINEL, dtype=CLASS_DTYPE)
    off = ~np.eye(n, dtype=bool)
    rows = normalize_rows(raw[off].reshape(n, n - 1))
    classes = np.full((n, n), SENTINEL, dtype=CLASS_DTYPE)
    classes[off] = rows.ravel()
    return classes


@dataclass(frozen=True, eq=False)
class HomogeneousRelation:
    """
    classes[x, y] is the class of y in H_x; row ids are normalized by first
    appearance with increasing y, the diagonal holds SENTINEL.
    """

    ground: GroundSet
    classes: np.ndarray = field(repr=False)

    def __post_init__(self):
        arr = np.asarray(self.classes)
        n = self.ground.size
        if arr.shape != (n, n):
            raise PreconditionError(f"class matrix must be {n}x{n}, got {arr.shape}")
        arr = arr.astype(CLASS_DTYPE, copy=True)
        arr.setflags(write=False)
        object.__setattr__(self, "classes", arr)

    @classmethod
    def from_matrix(cls, raw, labels=None) -> "HomogeneousRelation":
        """Normalize an arbitrary integer matrix; its diagonal is ignored."""
        raw = np.asarray(raw, dtype=np.int64)
        if raw.ndim != 2 or raw.shape[0] != raw.shape[1] or raw.shape[0] < 1:
            raise PreconditionError("relation matrix must be square and non-empty")
        return cls(GroundSet(raw.shape[0], labels), _normalize_matrix(raw))

    @property
    def n(self) -> int:
        return self.ground.size

    def row(self, x: int) -> np.ndarray:
        return self.classes[x]

    def congruence(self, x: int) -> int:
        if self.n == 1:
            return 0
        return int(np.delete(self.classes[x], x).max()) + 1

    def class_sets(self, x: int):
        """Equivalence classes of H_x as sorted tuples, in class-id order."""
        row = self.classes[x]
        return [tuple(int(y) for y in np.flatnonzero(row == c)) for c in range(self.congruence(x))]

    def restrict(self, elements: Sequence[int]) -> "HomogeneousRelation":
        """Induced relation on the given elements, re-indexed 0..k-1."""
        idx = np.asarray(elements, dtype=np.intp)
        raw = self.classes[np.ix_(idx, idx)]
        return HomogeneousRelation(self.ground.restrict(list(elements)), _normalize_matrix(raw))

    def permuted(self, perm: Sequence[int]) -> "HomogeneousRelation":
        """Relabel so that old element x becomes perm[x]."""
        inv = np.empty(self.n, dtype=np.intp)
        inv[np.asarray(perm, dtype=np.intp)] = np.arange(self.n)
        raw = self.classes[np.ix_(inv, inv)]
        return HomogeneousRelation(GroundSet(self.n), _normalize_matrix(raw))

    def is_normalized(self) -> bool:
        return np.array_equal(_normalize_matrix(self.classes), self.classes)

    def __eq__(self, other):
        return isinstance(other, HomogeneousRelation) and np.array_equal(self.classes, other.classes)

    __hash__ = None


def build_standard_relation(structure: Structure) -> HomogeneousRelation:
    """
    H(x|uv) iff C(x,u) = C(x,v) and C(u,x) = C(v,x).

    Each (C(x,y), C(y,x)) pair is folded into one integer key before the
    row normalization.
    """
    color = structure.colors().astype(np.int64)
    span = int(color.max()) + 1 if color.size else 1
    raw = color * span + color.T
    return HomogeneousRelation(structure.ground, _normalize_matrix(raw))


def holds(H: HomogeneousRelation, x: int, y: int, z: int) -> bool:
    """The predicate (x|yz)."""
    if not all(0 <= e < H.n for e in (x, y, z)):
        raise PreconditionError(f"element ids must lie in 0..{H.n - 1}")
    if x == y or x == z:
        raise PreconditionError(f"({x}|{y}{z}) is not a reflectless triple")
    return bool(H.classes[x, y] == H.classes[x, z])


def local_congruence(H: HomogeneousRelation) -> int:
    """Largest number of classes of any H_x; 1 for a single element by convention."""
    if H.n == 1:
        return 1
    off = H.classes.copy()
    np.fill_diagonal(off, -1)
    return int(off.max()) + 1


def as_relation(source: Union[HomogeneousRelation, Structure]) -> HomogeneousRelation:
    if isinstance(source, HomogeneousRelation):
        return source
    return build_standard_relation(source)
