"""Homogeneous relations, standard relations and the elementary predicates"""
from .structures import GroundSet, Tournament, TwoStructure, UndirectedGraph
from .relation import (
    SENTINEL,
    HomogeneousRelation,
    as_relation,
    build_standard_relation,
    holds,
    local_congruence,
    normalize_rows,
)
from .predicates import check_four_elements, is_module, is_umodule
from .oracle import (
    brute_force_modules,
    brute_force_umodules,
    check_threshold_umodule_property,
    module_not_umodule_relation,
    is_self_complemented,
    is_threshold_graph,
    overlaps,
    strong_members,
    strong_modules,
)
