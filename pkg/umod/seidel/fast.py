"""Umodular decomposition tree read off the modular tree of a Seidel switch"""

from typing import List, Optional

from ..bipartitive.build import check_bipartitive
from ..bipartitive.tree import CIRCULAR, COMPLETE, PRIME, NodeSpec, UDecompTree
from ..config import get_logger, get_settings
from ..relation.relation import as_relation
from .modular import LINEAR, ModularNode, modular_strong_tree
from .switch import seidel_switch

logger = get_logger(__name__)

KIND_OF = {PRIME: PRIME, COMPLETE: COMPLETE, LINEAR: CIRCULAR}


def fast_umodular_tree(source, pivot: Optional[int] = None, check: bool = True) -> UDecompTree:
    """
    U holding s is a umodule of H iff X \\ U is a module of H(s), so the
    strong modules of H(s) are the s-avoiding sides of the strong
    bipartitions. Each modular node becomes a tree node whose components
    are its children plus everything outside it; linear nodes close their
    order into a cycle through the outside.
    """
    H = as_relation(source)
    n = H.n
    if check:
        check_bipartitive(source)
    if n <= 2:
        return UDecompTree.from_nodes(n, [], H.ground.labels)

    s = min(get_settings().pivot, n - 1) if pivot is None else pivot
    switched = seidel_switch(H, s)
    modular = modular_strong_tree(switched.relation)
    ground = frozenset(range(n))

    def lift(node: ModularNode) -> frozenset:
        return frozenset(switched.to_old(x) for x in node.elements)

    nodes: List[NodeSpec] = []
    for node in modular.internal():
        inside = lift(node)
        children = [lift(c) for c in node.children]
        outside = ground - inside
        kind = KIND_OF[node.kind]
        nodes.append(NodeSpec.make(kind, [outside] + children))

    tree = UDecompTree.from_nodes(n, nodes, H.ground.labels)
    logger.info("[TREE] fast n=%d pivot=%d internal=%d kinds=%s",
                n, s, len(tree.internal), tree.kinds())
    return tree