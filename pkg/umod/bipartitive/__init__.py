"""The unrooted umodular decomposition tree: construction, typing, enumeration"""
from .tree import (
    CIRCULAR,
    COMPLETE,
    LEAF,
    PRIME,
    NodeSpec,
    UDecompTree,
    canonical_cycle,
    count_umodules,
    enumerate_umodules,
    node_components,
)
from .build import build_umodular_tree, check_bipartitive, strong_bipartitions, strong_sides, type_node
