"""Seidel switch, modular decomposition and the fast umodular tree"""
from .switch import (
    SwitchedRelation,
    seidel_switch,
    switch_graph,
    switch_tournament,
    verify_switch_correspondence,
)
from .modular import (
    COMPLETE,
    LEAF,
    LINEAR,
    PRIME,
    ModularNode,
    ModularTree,
    maximal_modules_avoiding,
    modular_strong_tree,
    quotient_kind,
)
from .fast import fast_umodular_tree
