"""Module, umodule and four-elements predicates"""

from typing import Iterable, Optional, Tuple

import numpy as np

from ..errors import PreconditionError
from .relation import HomogeneousRelation, normalize_rows


def as_index(elements: Iterable[int], n: int) -> np.ndarray:
    idx = np.unique(np.fromiter((int(e) for e in elements), dtype=np.intp))
    if idx.size and (idx[0] < 0 or idx[-1] >= n):
        raise PreconditionError(f"element ids must lie in 0..{n - 1}")
    return idx


def complement(idx: np.ndarray, n: int) -> np.ndarray:
    mask = np.ones(n, dtype=bool)
    mask[idx] = False
    return np.flatnonzero(mask)


def outside_view(H: HomogeneousRelation, inside: np.ndarray, outside: np.ndarray) -> np.ndarray:
    """Row i: how inside[i] partitions `outside`, as normalized class ids."""
    return normalize_rows(H.classes[np.ix_(inside, outside)])


def is_module(H: HomogeneousRelation, M: Iterable[int]) -> bool:
    inside = as_index(M, H.n)
    if inside.size <= 1 or inside.size == H.n:
        return True
    outside = complement(inside, H.n)
    seen = H.classes[np.ix_(outside, inside)]
    return bool((seen == seen[:, :1]).all())


def is_umodule(H: HomogeneousRelation, U: Iterable[int]) -> bool:
    inside = as_index(U, H.n)
    if inside.size <= 1 or inside.size >= H.n - 1:
        return True
    view = outside_view(H, inside, complement(inside, H.n))
    return bool((view == view[:1]).all())


def check_four_elements(H: HomogeneousRelation) -> Tuple[bool, Optional[Tuple[int, int, int, int]]]:
    """
    Scan ordered quadruples (m, m', x, x') of distinct elements for

        H(m|xx') & H(m'|xx') & H(x|mm')    =>  H(x'|mm')
        ~H(m|xx') & ~H(m'|xx') & ~H(x|mm') =>  ~H(x'|mm')

    Returns (True, None) or (False, first violating quadruple). One n^3
    slab per m keeps memory cubic.
    """
    n = H.n
    if n < 4:
        return True, None
    cls = H.classes
    # same[a, b, c] = H(a|bc), meaningful when a, b, c are distinct
    same = cls[:, :, None] == cls[:, None, :]
    eye = np.eye(n, dtype=bool)
    distinct = ~(eye[:, :, None] | eye[:, None, :] | eye[None, :, :])

    for m in range(n):
        a = same[m][None, :, :]                      # H(m|x x')   -> [m', x, x']
        b = same                                     # H(m'|x x')  -> [m', x, x']
        c = same[:, m, :].T[:, :, None]              # H(x|m m')   -> [m', x, .]
        d = same[:, m, :].T[:, None, :]              # H(x'|m m')  -> [m', ., x']
        bad = distinct & (((a & b & c) & ~d) | ((~a & ~b & ~c) & d))
        bad[m, :, :] = False
        bad[:, m, :] = False
        bad[:, :, m] = False
        if bad.any():
            mp, x, xp = (int(v) for v in np.argwhere(bad)[0])
            return False, (m, mp, x, xp)
    return True, None
