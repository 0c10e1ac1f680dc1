"""Umodules of homogeneous relations and their decomposition trees"""
from dotenv import load_dotenv
load_dotenv()

from .errors import DecompositionError, InputParseError, OracleBoundError, PreconditionError, UmodError
from .relation import (
    GroundSet,
    HomogeneousRelation,
    Tournament,
    TwoStructure,
    UndirectedGraph,
    build_standard_relation,
    check_four_elements,
    is_module,
    is_umodule,
    local_congruence,
)
from .refine import Partition, mu
from .strong import is_umodular_prime, strong_umodules
from .bipartitive import UDecompTree, build_umodular_tree, count_umodules, enumerate_umodules
from .seidel import fast_umodular_tree, modular_strong_tree, seidel_switch
