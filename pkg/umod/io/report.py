"""Canonical JSON and plain-text renderings of results"""

import dataclasses
import json
from typing import Any, Iterable, List

import numpy as np
from pydantic import BaseModel

from ..bipartitive.tree import UDecompTree
from ..refine.partition import Partition
from ..seidel.modular import ModularTree


def to_jsonable(value: Any) -> Any:
    """Plain JSON values; sets become sorted lists, numpy scalars become ints."""
    if isinstance(value, BaseModel):
        return to_jsonable(value.model_dump())
    if hasattr(value, "to_dict"):
        return to_jsonable(value.to_dict())
    if dataclasses.is_dataclass(value) and not isinstance(value, type):
        return to_jsonable(dataclasses.asdict(value))
    if isinstance(value, dict):
        return {str(k): to_jsonable(v) for k, v in value.items()}
    if isinstance(value, (set, frozenset)):
        return sorted(to_jsonable(v) for v in value)
    if isinstance(value, (list, tuple)):
        return [to_jsonable(v) for v in value]
    if isinstance(value, np.ndarray):
        return to_jsonable(value.tolist())
    if isinstance(value, np.bool_):
        return bool(value)
    if isinstance(value, np.integer):
        return int(value)
    return value


def dumps(value: Any) -> str:
    """Same input, byte-identical output."""
    return json.dumps(to_jsonable(value), sort_keys=True, indent=2)


def partition_payload(partition: Partition) -> dict:
    return {"parts": [list(p) for p in partition.parts]}


def partition_text(partition: Partition) -> str:
    return "\n".join(" ".join(str(x) for x in part) for part in partition.parts)


def sets_text(sets: Iterable[Iterable[int]]) -> str:
    return "\n".join(" ".join(str(x) for x in sorted(s)) for s in sets)


def tree_text(tree: UDecompTree) -> str:
    """One line per internal node: id, type, then neighbours."""
    lines: List[str] = [f"size {tree.size}"]
    for node in tree.to_dict()["nodes"]:
        if node["type"] == "leaf":
            continue
        neighbours = " ".join(str(x) for x in node["neighbors"])
        lines.append(f"{node['id']} {node['type']}: {neighbours}")
    return "\n".join(lines)


def modular_text(tree: ModularTree) -> str:
    lines: List[str] = []

    def visit(node, depth):
        members = " ".join(str(x) for x in sorted(node.elements))
        lines.append(f"{'  ' * depth}{node.kind} [{members}]")
        for child in node.children:
            visit(child, depth + 1)

    visit(tree.root, 0)
    return "\n".join(lines)


def error_payload(exc) -> str:
    return json.dumps(to_jsonable(exc.to_dict()), sort_keys=True)
