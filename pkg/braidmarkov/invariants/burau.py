from __future__ import annotations

from functools import lru_cache
from typing import List

from ..braid.word import BraidWord
from ..errors import TooFewStrands
from .laurent import ONE, ZERO, LaurentMatrix, LaurentPoly

_T = LaurentPoly.t()
_T_INV = LaurentPoly.monomial(1, -1)


@lru_cache(maxsize=256)
def generator_matrix(strands: int, index: int, sign: int) -> LaurentMatrix:
    """Reduced Burau image of s_index^sign in B_strands.

    Only column index-1 differs from the identity: for s_i it holds
    (t, -t, 1) on rows i-2, i-1, i; for s_i^-1 it holds (1, -t^-1, t^-1).
    Rows outside 0..strands-2 are dropped.
    """
    if strands < 2:
        raise TooFewStrands(f"reduced Burau needs at least 2 strands, got {strands}")
    size = strands - 1
    rows: List[List[LaurentPoly]] = [[ONE if i == j else ZERO for j in range(size)] for i in range(size)]
    c = index - 1
    if sign > 0:
        above, diag, below = _T, -_T, ONE
    else:
        above, diag, below = ONE, -_T_INV, _T_INV
    rows[c][c] = diag
    if c - 1 >= 0:
        rows[c - 1][c] = above
    if c + 1 < size:
        rows[c + 1][c] = below
    return LaurentMatrix.from_rows(rows)


def burau_reduced(a: BraidWord) -> LaurentMatrix:
    if a.strands < 2:
        raise TooFewStrands(f"reduced Burau needs at least 2 strands, got {a.strands}")
    out = LaurentMatrix.identity(a.strands - 1)
    for g in a.letters:
        out = out @ generator_matrix(a.strands, g.index, g.sign)
    return out
