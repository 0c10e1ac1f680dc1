"""Partition refinement computing the maximal umodules on each side of a cut"""
from .partition import METHODS, Partition, group_rows, mu, mu_hopcroft, mu_naive, refine, signature
