"""Strong modules of a homogeneous relation by pivot refinement and forcing"""

from dataclasses import dataclass
from typing import Dict, FrozenSet, Iterator, List, Optional, Tuple

import networkx as nx
import numpy as np

from ..config import get_logger
from ..refine.partition import group_rows
from ..relation.relation import HomogeneousRelation, as_relation

logger = get_logger(__name__)

PRIME = "prime"
COMPLETE = "complete"
LINEAR = "linear"
LEAF = "leaf"


@dataclass(frozen=True)
class ModularNode:
    """A strong module; linear nodes keep their children in order."""

    kind: str
    elements: FrozenSet[int]
    children: Tuple["ModularNode", ...] = ()

    @property
    def rep(self) -> int:
        return min(self.elements)

    def walk(self) -> Iterator["ModularNode"]:
        yield self
        for child in self.children:
            yield from child.walk()

    def to_dict(self) -> dict:
        if self.kind == LEAF:
            return {"type": LEAF, "element": self.rep}
        return {
            "type": self.kind,
            "elements": sorted(self.elements),
            "children": [c.to_dict() for c in self.children],
        }


@dataclass(frozen=True)
class ModularTree:
    size: int
    root: ModularNode

    def nodes(self) -> List[ModularNode]:
        return list(self.root.walk())

    def internal(self) -> List[ModularNode]:
        return [node for node in self.root.walk() if node.kind != LEAF]

    def strong_modules(self) -> List[FrozenSet[int]]:
        return sorted((node.elements for node in self.root.walk()), key=lambda s: (len(s), sorted(s)))

    def to_dict(self) -> dict:
        return {"size": self.size, "root": self.root.to_dict()}


def _row_class_counts(quotient: np.ndarray) -> np.ndarray:
    """Distinct off-diagonal class ids per row."""
    k = quotient.shape[0]
    q = quotient.astype(np.int64)
    np.fill_diagonal(q, -1)
    ordered = np.sort(q, axis=1)[:, 1:]
    if k <= 2:
        return np.full(k, k - 1)
    return 1 + (np.diff(ordered, axis=1) != 0).sum(axis=1)


def linear_order(quotient: np.ndarray) -> Optional[List[int]]:
    """
    Positions 0..k-1 such that every row splits the others into those
    before and those after it, two distinct classes. None if no such order.
    """
    k = quotient.shape[0]
    if k < 3:
        return None
    off = ~np.eye(k, dtype=bool)
    single = np.flatnonzero(_row_class_counts(quotient) == 1)
    if single.size != 2:
        return None
    end = int(single[0])
    pos = ((quotient == quotient[:, [end]]) & off).sum(axis=1)
    pos[end] = 0
    if np.unique(pos).size != k or pos.max() != k - 1:
        return None
    order = [int(x) for x in np.argsort(pos)]
    q = quotient[np.ix_(order, order)]
    below = np.tril(np.ones((k, k), dtype=bool), -1)
    above = np.triu(np.ones((k, k), dtype=bool), 1)
    if (below & (q != q[:, [0]])).any() or (above & (q != q[:, [k - 1]])).any():
        return None
    if (q[1:k - 1, 0] == q[1:k - 1, k - 1]).any():
        return None
    return order


def quotient_kind(H: HomogeneousRelation, reps: List[int]) -> Tuple[str, Optional[List[int]]]:
    """Type of the quotient on one representative per child."""
    idx = np.asarray(reps, dtype=np.intp)
    quotient = H.classes[np.ix_(idx, idx)]
    if (_row_class_counts(quotient) == 1).all():
        return COMPLETE, None
    order = linear_order(quotient)
    if order is not None:
        return LINEAR, order
    return PRIME, None


def maximal_modules_avoiding(H: HomogeneousRelation, E: np.ndarray, v: int) -> List[np.ndarray]:
    """
    Partition E \\ {v} into the maximal modules of H[E] not containing v.
    A fragment only has to be re-split by its former siblings: everything
    outside its parent already sees it uniformly.
    """
    cls = H.classes
    rest = E[E != v]
    queue = [(rest, np.array([v], dtype=np.intp))]
    done: List[np.ndarray] = []
    while queue:
        part, outsiders = queue.pop()
        if part.size <= 1:
            done.append(part)
            continue
        rows = cls[np.ix_(outsiders, part)].T
        groups = group_rows(part, rows)
        if len(groups) == 1:
            done.append(part)
            continue
        for g in groups:
            queue.append((g, np.setdiff1d(part, g, assume_unique=True)))
    done.sort(key=lambda p: int(p[0]))
    return done


def _reachable(force: np.ndarray) -> List[int]:
    """Bitmask of the nodes reachable from each node (itself included)."""
    k = force.shape[0]
    graph = nx.DiGraph()
    graph.add_nodes_from(range(k))
    graph.add_edges_from((int(a), int(b)) for a, b in np.argwhere(force))
    dag = nx.condensation(graph)
    members = {c: dag.nodes[c]["members"] for c in dag.nodes}
    closure: Dict[int, int] = {}
    for c in reversed(list(nx.topological_sort(dag))):
        mask = 0
        for x in members[c]:
            mask |= 1 << x
        for d in dag.successors(c):
            mask |= closure[d]
        closure[c] = mask
    mapping = dag.graph["mapping"]
    return [closure[mapping[x]] for x in range(k)]


def _cross(a: int, b: int) -> bool:
    """Sets sharing the pivot overlap exactly when neither mask contains the other."""
    return bool(a & ~b) and bool(b & ~a)


def _expand(mask: int, parts: List[np.ndarray]) -> FrozenSet[int]:
    out = set()
    i = 0
    while mask:
        if mask & 1:
            out.update(int(x) for x in parts[i])
        mask >>= 1
        i += 1
    return frozenset(out)


def _pivot_chain(H: HomogeneousRelation, v: int, parts: List[np.ndarray]) -> List[int]:
    """
    Strong modules of H[E] holding v, as bitmasks over parts, smallest
    first and ending with all parts. A part r forces x when x tells r
    apart from v; the least module holding v and r is v plus everything
    reachable from r.
    """
    k = len(parts)
    reps = np.array([int(p[0]) for p in parts], dtype=np.intp)
    seen = H.classes[np.ix_(reps, reps)]
    toward_v = H.classes[reps, v]
    force = np.ascontiguousarray((seen != toward_v[:, None]).T)
    np.fill_diagonal(force, False)
    closures = set(_reachable(force))

    # a strong module is the union of pairwise crossing closures grown from any one of them
    merged = set(closures)
    pending = list(closures)
    for mask in pending:
        joined = mask
        grew = True
        while grew:
            grew = False
            for other in closures:
                if _cross(joined, other):
                    joined |= other
                    grew = True
        merged.add(joined)

    full = (1 << k) - 1
    chain = {m for m in merged if not any(_cross(m, c) for c in closures)}
    chain.add(full)
    return sorted(chain, key=lambda m: bin(m).count("1"))


def _merge_children(H: HomogeneousRelation, kind: Optional[str], children: List[ModularNode],
                    order: Optional[List[int]] = None) -> Tuple[str, List[ModularNode], Optional[List[int]]]:
    """
    Flatten degenerate children whose expansion keeps the parent's type,
    in one pass: a flattened child's own children are tried in its place.
    kind None stands for two children, which fit either degenerate type.
    `order` is the linear order of `children` when kind is LINEAR; the
    returned order indexes the returned children.
    """
    kept: List[ModularNode] = []
    pending = list(children)
    while pending:
        child = pending.pop(0)
        if child.kind in (COMPLETE, LINEAR):
            trial = kept + list(child.children) + pending
            got, got_order = quotient_kind(H, [c.rep for c in trial])
            if got == kind or (kind is None and got != PRIME):
                kind, order = got, got_order
                pending = list(child.children) + pending
                continue
        kept.append(child)
    return kind or COMPLETE, kept, order


def _node(H: HomogeneousRelation, elements: FrozenSet[int], children: List[ModularNode]) -> ModularNode:
    kind, order = quotient_kind(H, [c.rep for c in children])
    if kind != PRIME:
        kind, children, order = _merge_children(H, None if len(children) == 2 else kind, children, order)
    if kind == LINEAR:
        children = [children[i] for i in order]
    else:
        children = sorted(children, key=lambda c: c.rep)
    return ModularNode(kind, elements, tuple(children))


def decompose(H: HomogeneousRelation, E: np.ndarray) -> ModularNode:
    """Strong module tree of H[E], E a module of H."""
    if E.size == 1:
        return ModularNode(LEAF, frozenset([int(E[0])]))
    v = int(E.min())
    parts = maximal_modules_avoiding(H, E, v)
    chain = _pivot_chain(H, v, parts)

    below = ModularNode(LEAF, frozenset([v]))
    covered = 0
    for mask in chain:
        fresh = mask & ~covered
        children = [below]
        i = 0
        while fresh:
            if fresh & 1:
                children.append(decompose(H, parts[i]))
            fresh >>= 1
            i += 1
        elements = frozenset([v]) | _expand(mask, parts)
        below = _node(H, elements, children)
        covered = mask
    return below


def modular_strong_tree(source) -> ModularTree:
    """
    Strong modules of a relation whose modules see the outside uniformly
    (standard relations and their Seidel switches), as a rooted tree.
    """
    H = as_relation(source)
    root = decompose(H, np.arange(H.n, dtype=np.intp))
    tree = ModularTree(H.n, root)
    logger.debug("[MODULAR] n=%d internal=%d", H.n, len(tree.internal()))
    return tree
