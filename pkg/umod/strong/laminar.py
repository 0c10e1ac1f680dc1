"""Strong umodules, their inclusion tree and the primality test"""

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from itertools import combinations
from typing import FrozenSet, Iterable, List, Optional, Set, Tuple

from ..config import get_logger
from ..refine.partition import mu
from ..relation.predicates import is_umodule
from ..relation.relation import HomogeneousRelation

logger = get_logger(__name__)


def to_mask(elements: Iterable[int]) -> int:
    mask = 0
    for x in elements:
        mask |= 1 << int(x)
    return mask


def from_mask(mask: int) -> FrozenSet[int]:
    out = []
    x = 0
    while mask:
        if mask & 1:
            out.append(x)
        mask >>= 1
        x += 1
    return frozenset(out)


def masks_overlap(a: int, b: int) -> bool:
    return bool(a & b) and bool(a & ~b) and bool(b & ~a)


class PairParts:
    """owner(x, y, m): bitmask of the part of MU({x, y}) holding m."""

    def __init__(self, n: int):
        self.n = n
        self._owners = {}
        self.parts: Set[int] = set()

    def add(self, pair: Tuple[int, int], partition) -> None:
        owners = [0] * self.n
        for part in partition.parts:
            mask = to_mask(part)
            if 2 <= len(part) <= self.n - 2:
                self.parts.add(mask)
            for m in part:
                owners[m] = mask
        self._owners[tuple(sorted(pair))] = owners

    def owner(self, x: int, y: int, m: int) -> int:
        return self._owners[(x, y) if x < y else (y, x)][m]


def threshold_candidates(table: PairParts, x: int, m: int) -> Set[int]:
    """
    Fix x outside a strong umodule M holding m. The parts A_y of MU({x, y})
    holding m are supersets of M when y is outside M and proper subsets of
    M otherwise, so M is the intersection of all A_y above some size.
    Every such prefix intersection is returned.
    """
    found = set()
    sized = sorted(
        ((table.owner(x, y, m) for y in range(table.n) if y != x and y != m)),
        key=lambda a: -bin(a).count("1"),
    )
    running = -1
    previous = None
    for a in sized:
        size = bin(a).count("1")
        if previous is not None and size != previous:
            found.add(running)
        running &= a
        previous = size
    if previous is not None:
        found.add(running)
    return found


def strong_from_candidates(H: HomogeneousRelation, candidates: Iterable[int],
                           collected: Set[int]) -> List[FrozenSet[int]]:
    """Keep non-trivial umodule candidates that no collected part overlaps."""
    n = H.n
    strong = []
    for c in set(candidates):
        members = from_mask(c)
        if not 2 <= len(members) <= n - 2:
            continue
        if any(masks_overlap(c, p) for p in collected):
            continue
        if is_umodule(H, members):
            strong.append(members)
    return strong


@dataclass(frozen=True)
class LaminarTree:
    """Inclusion tree: node 0 is X, leaves are singletons, parent[0] is None."""

    size: int
    nodes: Tuple[FrozenSet[int], ...]
    parent: Tuple[Optional[int], ...]

    def children(self, i: int) -> List[int]:
        return [j for j, p in enumerate(self.parent) if p == i]

    def internal(self) -> List[FrozenSet[int]]:
        """The non-trivial strong umodules, i.e. every node but the root and leaves."""
        return [s for s in self.nodes[1:] if len(s) > 1]

    def is_star(self) -> bool:
        return not self.internal()

    def to_dict(self) -> dict:
        return {
            "size": self.size,
            "nodes": [
                {"id": i, "elements": sorted(s), "parent": p}
                for i, (s, p) in enumerate(zip(self.nodes, self.parent))
            ],
        }


def laminar_tree(size: int, sets: Iterable[FrozenSet[int]]) -> LaminarTree:
    """Order X, the given sets and all singletons into their inclusion tree."""
    ground = frozenset(range(size))
    pool = {ground} | {frozenset([x]) for x in range(size)} | set(sets)
    ordered = sorted(pool, key=lambda s: (-len(s), sorted(s)))
    parent: List[Optional[int]] = [None]
    for i in range(1, len(ordered)):
        holder = None
        for j in range(i - 1, -1, -1):
            if ordered[i] < ordered[j]:
                holder = j
                break
        parent.append(holder)
    return LaminarTree(size, tuple(ordered), tuple(parent))


def pair_partitions(H: HomogeneousRelation, pairs, workers: Optional[int] = None):
    """MU({x, y}) for each pair; threads only change the wall clock."""
    pairs = list(pairs)
    if workers and workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            return list(pool.map(lambda p: mu(H, p), pairs))
    return [mu(H, p) for p in pairs]


def strong_umodules(H: HomogeneousRelation, workers: Optional[int] = None) -> LaminarTree:
    """
    For every pair {x, y} compute MU({x, y}). A non-trivial strong umodule
    M is the intersection of the parts of MU({x, y}) holding it over pairs
    outside M, so candidates are the threshold intersections for every
    (x, m). A candidate is kept when it is a umodule and no collected part
    overlaps it: a umodule V overlapping it would sit inside an
    overlapping part of MU({a, z}) for a in M \\ V, z outside V.
    """
    n = H.n
    if n <= 3:
        return laminar_tree(n, [])

    pairs = list(combinations(range(n), 2))
    table = PairParts(n)
    for pair, partition in zip(pairs, pair_partitions(H, pairs, workers)):
        table.add(pair, partition)

    candidates: Set[int] = set()
    for x in range(n):
        for m in range(n):
            if m != x:
                candidates |= threshold_candidates(table, x, m)
    strong = strong_from_candidates(H, candidates, table.parts)

    logger.debug("[STRONG] n=%d parts=%d candidates=%d strong=%d",
                 n, len(table.parts), len(candidates), len(strong))
    return laminar_tree(n, strong)


def is_umodular_prime(H: HomogeneousRelation, workers: Optional[int] = None) -> bool:
    return strong_umodules(H, workers).is_star()


def check_crossing_family(family: Iterable[Iterable[int]], X: Iterable[int]) -> bool:
    """A & B and A | B belong to the family whenever A, B meet and do not cover X."""
    members = {frozenset(s) for s in family}
    ground = frozenset(X)
    listed = list(members)
    for a, b in combinations(listed, 2):
        if a & b and (a | b) != ground:
            if (a & b) not in members or (a | b) not in members:
                return False
    return True
