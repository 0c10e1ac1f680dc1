"""Reading input documents and rendering reports"""
from .parser import KINDS, InputDocument, parse_input, parse_text
from .report import (
    dumps,
    error_payload,
    modular_text,
    partition_payload,
    partition_text,
    sets_text,
    to_jsonable,
    tree_text,
)
