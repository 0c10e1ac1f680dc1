"""The unrooted umodular decomposition tree and what can be read off it"""

from dataclasses import dataclass, field
from itertools import combinations
from typing import Dict, FrozenSet, Iterable, Iterator, List, Optional, Sequence, Tuple

import graphviz

from ..errors import DecompositionError

PRIME = "prime"
COMPLETE = "complete"
CIRCULAR = "circular"
LEAF = "leaf"
NODE_KINDS = (PRIME, COMPLETE, CIRCULAR)

Component = FrozenSet[int]


def canonical_cycle(components: Sequence[Component]) -> Tuple[Component, ...]:
    """Rotate to the component with the lowest element, then pick the smaller direction."""
    items = list(components)
    lows = [min(c) for c in items]
    start = lows.index(min(lows))
    forward = items[start:] + items[:start]
    backward = [forward[0]] + forward[1:][::-1]
    if [min(c) for c in backward] < [min(c) for c in forward]:
        forward = backward
    return tuple(forward)


@dataclass(frozen=True)
class NodeSpec:
    """
    An internal node, described by the leaf sets of the components of T - N.
    Circular nodes keep their components in cyclic order.
    """

    kind: str
    components: Tuple[Component, ...]

    @classmethod
    def make(cls, kind: str, components: Iterable[Iterable[int]]) -> "NodeSpec":
        comps = [frozenset(c) for c in components]
        if kind not in NODE_KINDS:
            raise DecompositionError(f"unknown node kind {kind!r}")
        if len(comps) < 3:
            raise DecompositionError("internal nodes have degree at least 3")
        if len(comps) == 3:
            kind = PRIME
        if kind == CIRCULAR:
            ordered = canonical_cycle(comps)
        else:
            ordered = tuple(sorted(comps, key=min))
        return cls(kind, ordered)

    @property
    def degree(self) -> int:
        return len(self.components)

    def side(self, size: int) -> Component:
        """Leaves not reached through the component holding element 0."""
        for c in self.components:
            if 0 in c:
                return frozenset(range(size)) - c
        raise DecompositionError("node components must cover element 0")


def node_components(size: int, sides: Iterable[Component]) -> Dict[Component, List[Component]]:
    """
    For a laminar family of 0-avoiding sides (X \\ {0} included), the
    components around each side's node: its maximal proper subsets among
    the sides and singletons, plus the outside.
    """
    ground = frozenset(range(size))
    family = {frozenset(s) for s in sides if len(s) >= 2}
    pool = family | {frozenset([x]) for x in range(1, size)}
    ordered = sorted(pool, key=len, reverse=True)
    result = {}
    for side in family:
        inner = [s for s in ordered if s < side]
        children: List[Component] = []
        covered: set = set()
        for s in inner:
            if not (s & covered):
                children.append(s)
                covered |= s
        result[side] = children + [ground - side]
    return result


@dataclass(frozen=True)
class UDecompTree:
    """
    Leaves are the elements 0..size-1; internal nodes get ids size, size+1,
    ... in the order of their sorted 0-avoiding side.
    """

    size: int
    internal: Tuple[NodeSpec, ...]
    labels: Optional[Tuple[str, ...]] = field(default=None, compare=False)

    @classmethod
    def from_nodes(cls, size: int, nodes: Iterable[NodeSpec],
                   labels: Optional[Sequence[str]] = None) -> "UDecompTree":
        specs = sorted(nodes, key=lambda s: sorted(s.side(size)))
        return cls(size, tuple(specs), tuple(labels) if labels else None)

    def label(self, x: int) -> str:
        return self.labels[x] if self.labels else str(x)

    def kinds(self) -> List[str]:
        return [spec.kind for spec in self.internal]

    def has_kind(self, kind: str, min_degree: int = 4) -> bool:
        return any(s.kind == kind and s.degree >= min_degree for s in self.internal)

    def _ids(self) -> Dict[Component, int]:
        return {spec.side(self.size): self.size + i for i, spec in enumerate(self.internal)}

    def neighbours(self) -> Dict[int, List[int]]:
        """Adjacency lists; circular nodes list neighbours in cyclic order."""
        n = self.size
        ground = frozenset(range(n))
        ids = self._ids()
        sides = sorted(ids, key=len)
        adjacency: Dict[int, List[int]] = {x: [] for x in range(n)}
        for spec in self.internal:
            me = ids[spec.side(n)]
            adjacency[me] = []
        for spec in self.internal:
            side = spec.side(n)
            me = ids[side]
            for comp in spec.components:
                if len(comp) == 1:
                    other = next(iter(comp))
                elif 0 not in comp:
                    other = ids[comp]
                else:
                    other = ids[next(s for s in sides if side < s)]
                adjacency[me].append(other)
                if other < n:
                    adjacency[other].append(me)
        if n == 2 and not self.internal:
            adjacency[0].append(1)
            adjacency[1].append(0)
        return adjacency

    def edges(self) -> List[Tuple[int, int]]:
        out = set()
        for a, nbrs in self.neighbours().items():
            for b in nbrs:
                out.add((min(a, b), max(a, b)))
        return sorted(out)

    def relabeled(self, perm: Sequence[int]) -> "UDecompTree":
        """Tree of the relation whose element x is renamed perm[x]."""
        nodes = [
            NodeSpec.make(spec.kind, [frozenset(perm[x] for x in c) for c in spec.components])
            for spec in self.internal
        ]
        return UDecompTree.from_nodes(self.size, nodes)

    def to_dict(self) -> dict:
        adjacency = self.neighbours()
        nodes = []
        for x in range(self.size):
            nodes.append({"id": x, "type": LEAF, "label": self.label(x), "neighbors": adjacency[x]})
        for i, spec in enumerate(self.internal):
            nid = self.size + i
            nbrs = adjacency[nid]
            if spec.kind != CIRCULAR:
                nbrs = sorted(nbrs)
            nodes.append({"id": nid, "type": spec.kind, "neighbors": nbrs})
        return {"size": self.size, "nodes": nodes}

    def to_dot(self) -> graphviz.Graph:
        dot = graphviz.Graph(comment="umodular decomposition tree")
        adjacency = self.neighbours()
        for x in range(self.size):
            dot.node(f"n{x}", self.label(x), shape="box")
        port_of = {}
        for i, spec in enumerate(self.internal):
            nid = self.size + i
            if spec.kind == CIRCULAR:
                ports = "|".join(f"<p{k}>" for k in range(spec.degree))
                dot.node(f"n{nid}", "{" + ports + "}", shape="record")
                for k, other in enumerate(adjacency[nid]):
                    port_of[(nid, other)] = f"n{nid}:p{k}"
            elif spec.kind == COMPLETE:
                dot.node(f"n{nid}", "K", shape="doublecircle")
            else:
                dot.node(f"n{nid}", "P", shape="circle")
        for a, b in self.edges():
            dot.edge(port_of.get((a, b), f"n{a}"), port_of.get((b, a), f"n{b}"))
        return dot


def enumerate_umodules(tree: UDecompTree) -> Iterator[FrozenSet[int]]:
    """
    Every umodule described by the tree, once each: both sides of every
    edge, unions of incident components at complete nodes, cyclic intervals
    at circular nodes. The empty set and X are left out.
    """
    n = tree.size
    ground = frozenset(range(n))
    seen = set()

    def fresh(s):
        if s and s != ground and s not in seen:
            seen.add(s)
            return True
        return False

    if n == 2:
        for s in (frozenset([0]), frozenset([1])):
            if fresh(s):
                yield s
    for spec in tree.internal:
        comps = spec.components
        k = spec.degree
        for c in comps:
            for s in (c, ground - c):
                if fresh(s):
                    yield s
        if spec.kind == COMPLETE:
            for r in range(2, k - 1):
                for chosen in combinations(comps, r):
                    s = frozenset().union(*chosen)
                    if fresh(s):
                        yield s
        elif spec.kind == CIRCULAR:
            for length in range(2, k - 1):
                for start in range(k):
                    s = frozenset().union(*(comps[(start + j) % k] for j in range(length)))
                    if fresh(s):
                        yield s


def count_umodules(tree: UDecompTree) -> int:
    """Same count as enumerate_umodules without building any set."""
    n = tree.size
    if n <= 1:
        return 0
    total = 2 * (n + len(tree.internal) - 1)
    for spec in tree.internal:
        k = spec.degree
        if spec.kind == COMPLETE:
            total += 2 ** k - 2 - 2 * k
        elif spec.kind == CIRCULAR:
            total += k * (k - 3)
    return total
