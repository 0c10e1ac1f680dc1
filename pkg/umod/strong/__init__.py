"""Strong umodules ordered into their inclusion tree"""
from .laminar import (
    LaminarTree,
    PairParts,
    check_crossing_family,
    from_mask,
    is_umodular_prime,
    laminar_tree,
    masks_overlap,
    strong_from_candidates,
    strong_umodules,
    threshold_candidates,
    to_mask,
)
