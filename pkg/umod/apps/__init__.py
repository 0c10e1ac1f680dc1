"""Bijoins, total decomposability and the tournament applications"""
from .bijoin import BijoinWitness, bijoin_witness
from .extension import ExtensionSequence, ExtensionStep, extension_sequence, replay
from .tournaments import (
    CircularOrder,
    circular_order,
    feedback_vertex_set,
    is_diamond,
    is_diamond_free,
    is_locally_transitive,
    is_totally_decomposable,
    isomorphic_decomposable,
    round_order,
)
