"""R_C signatures, the Refine step and the MU(S) refinement loop"""

from collections import deque
from dataclasses import dataclass
from typing import Iterable, List, Optional, Sequence, Tuple

import numpy as np

from ..config import get_logger
from ..errors import PreconditionError
from ..relation.predicates import as_index, complement, outside_view
from ..relation.relation import HomogeneousRelation, normalize_rows

logger = get_logger(__name__)

METHODS = ("hopcroft", "naive")


@dataclass(frozen=True)
class Partition:
    """Disjoint non-empty parts covering 0..n-1, each with a mark."""

    parts: Tuple[Tuple[int, ...], ...]
    marks: Tuple[bool, ...]

    def __post_init__(self):
        if len(self.parts) != len(self.marks):
            raise PreconditionError("one mark per part is required")
        seen = [x for part in self.parts for x in part]
        if any(len(p) == 0 for p in self.parts):
            raise PreconditionError("partitions have no empty part")
        if len(seen) != len(set(seen)) or sorted(seen) != list(range(len(seen))):
            raise PreconditionError("parts must be disjoint and cover the ground set")

    @classmethod
    def of(cls, parts: Iterable[Iterable[int]], marked: bool = False) -> "Partition":
        tuples = tuple(tuple(sorted(int(x) for x in p)) for p in parts)
        return cls(tuples, (marked,) * len(tuples))

    @property
    def size(self) -> int:
        return sum(len(p) for p in self.parts)

    def canonical(self) -> "Partition":
        order = sorted(range(len(self.parts)), key=lambda i: self.parts[i][0])
        return Partition(tuple(self.parts[i] for i in order), tuple(self.marks[i] for i in order))

    def as_sets(self):
        return {frozenset(p) for p in self.parts}

    def part_of(self, x: int) -> Tuple[int, ...]:
        for part in self.parts:
            if x in part:
                return part
        raise KeyError(x)

    def is_thinner_than(self, other: "Partition") -> bool:
        return all(any(set(p) <= set(q) for q in other.parts) for p in self.parts)


def signature(H: HomogeneousRelation, C: Iterable[int], x: int) -> np.ndarray:
    """How x sees X \\ C: its class ids there, renumbered by first appearance."""
    inside = as_index(C, H.n)
    if x not in inside:
        raise PreconditionError(f"{x} is not a member of C")
    if inside.size == H.n:
        raise PreconditionError("C = X has no outside")
    return outside_view(H, np.array([x]), complement(inside, H.n))[0]


def group_rows(elements: np.ndarray, rows: np.ndarray) -> List[np.ndarray]:
    """
    Bucket elements with identical rows: a stable radix pass per column
    (lexsort), then one scan for boundaries. Groups come out sorted and
    ordered by smallest element.
    """
    if len(elements) <= 1 or rows.shape[1] == 0:
        return [np.sort(elements)]
    order = np.lexsort(rows.T[::-1])
    ordered = rows[order]
    cuts = np.flatnonzero((ordered[1:] != ordered[:-1]).any(axis=1)) + 1
    groups = [np.sort(elements[chunk]) for chunk in np.split(order, cuts)]
    groups.sort(key=lambda g: int(g[0]))
    return groups


def _split_full(H: HomogeneousRelation, part: np.ndarray) -> List[np.ndarray]:
    """R_C classes of a part, from whole outside views."""
    if part.size <= 1:
        return [part]
    view = outside_view(H, part, complement(part, H.n))
    return group_rows(part, view)


def _split_within_parent(H: HomogeneousRelation, part: np.ndarray, parent: np.ndarray) -> List[np.ndarray]:
    """
    R_C classes of a fragment whose members already agree on X \\ parent.

    The common partition of X \\ parent is described by one representative
    per class; each member then only needs its ids on the sibling elements
    parent \\ part, matched against the representatives.
    """
    if part.size <= 1:
        return [part]
    cls = H.classes
    common = complement(parent, H.n)
    siblings = np.setdiff1d(parent, part, assume_unique=True)

    reference = normalize_rows(cls[part[0], common][None, :])[0]
    _, first = np.unique(reference, return_index=True)
    reps = common[first]
    k = reps.size

    rep_ids = cls[np.ix_(part, reps)]
    sib_ids = cls[np.ix_(part, siblings)].astype(np.int64)
    matched = sib_ids[:, :, None] == rep_ids[:, None, :]
    hit = matched.any(axis=2)
    encoded = np.where(hit, matched.argmax(axis=2), k + sib_ids)

    prefix = np.broadcast_to(np.arange(k), (part.size, k))
    view = normalize_rows(np.hstack([prefix, encoded]))[:, k:]
    return group_rows(part, view)


def refine(H: HomogeneousRelation, P: Partition, C: Sequence[int]) -> Partition:
    """Replace part C of P by the classes of R_C; other parts stay in place."""
    key = tuple(sorted(int(x) for x in C))
    if key not in P.parts:
        raise PreconditionError("C must be a part of P")
    at = P.parts.index(key)
    groups = _split_full(H, np.array(key, dtype=np.intp))
    if len(groups) == 1:
        return P
    new_parts = tuple(tuple(int(x) for x in g) for g in groups)
    parts = P.parts[:at] + new_parts + P.parts[at + 1:]
    marks = P.marks[:at] + (False,) * len(new_parts) + P.marks[at + 1:]
    return Partition(parts, marks)


def _check_cut(H: HomogeneousRelation, S: Iterable[int]) -> Tuple[np.ndarray, np.ndarray]:
    inside = as_index(S, H.n)
    if inside.size == 0 or inside.size == H.n:
        raise PreconditionError("S must be a non-empty proper subset of X")
    return inside, complement(inside, H.n)


def mu_naive(H: HomogeneousRelation, S: Iterable[int]) -> Partition:
    """
    The refinement loop as stated: take an unmarked part, mark it if the
    partition is not refinable by it, otherwise refine. Every check
    recomputes full outside views.
    """
    inside, outside = _check_cut(H, S)
    queue = deque([inside, outside])
    done: List[np.ndarray] = []
    while queue:
        part = queue.popleft()
        groups = _split_full(H, part)
        if len(groups) == 1:
            done.append(part)
        else:
            queue.extend(groups)
    return Partition.of(done, marked=True).canonical()


def mu_hopcroft(H: HomogeneousRelation, S: Iterable[int]) -> Partition:
    """
    Same fixpoint, but a fragment is only re-examined against its former
    siblings: elements outside the parent are already known to agree. A
    pair of elements is compared as sibling-versus-fragment once, when the
    split separating them happens, so the largest fragment only explores
    the smaller remainder of its parent.
    """
    inside, outside = _check_cut(H, S)
    queue = deque([(inside, None), (outside, None)])
    done: List[np.ndarray] = []
    splits = 0
    while queue:
        part, parent = queue.popleft()
        if parent is None:
            groups = _split_full(H, part)
        else:
            groups = _split_within_parent(H, part, parent)
        if len(groups) == 1:
            done.append(part)
        else:
            splits += 1
            queue.extend((g, part) for g in groups)
    logger.debug("[MU] n=%d |S|=%d splits=%d parts=%d", H.n, inside.size, splits, len(done))
    return Partition.of(done, marked=True).canonical()


def mu(H: HomogeneousRelation, S: Iterable[int], method: str = "hopcroft") -> Partition:
    """Coarsest umodule partition thinner than {S, X \\ S}."""
    if method == "hopcroft":
        return mu_hopcroft(H, S)
    if method == "naive":
        return mu_naive(H, S)
    raise PreconditionError(f"unknown MU method {method!r}; expected one of {METHODS}")
