"""Pure-Python reference kernels.

Same signatures and semantics as the compiled ``_ckernels`` module; used when
the extension is not built, and as the baseline in the benchmark.
"""
from __future__ import annotations

from typing import Sequence

from fermat_adjoint.errors import OverflowDetected

INT64_MAX = 2**63 - 1


def residue_counts(weights: Sequence[int], p: int, d: int) -> list[int]:
    """Number of degree-``d`` monomials in ``len(weights)`` variables per weight residue mod ``p``."""
    table = [[0] * p for _ in range(d + 1)]
    table[0][0] = 1
    for w in weights:
        w %= p
        for deg in range(1, d + 1):
            row, prev = table[deg], table[deg - 1]
            for r in range(p):
                row[r] += prev[(r - w) % p]
    return table[d]


def _rotl(mask: int, shift: int, p: int, full: int) -> int:
    if shift == 0:
        return mask
    return ((mask << shift) | (mask >> (p - shift))) & full


def reachable_residues(weights: Sequence[int], p: int, d: int) -> int:
    """Bitmask of residues ``r`` such that some degree-``d`` monomial has weight ``r``."""
    full = (1 << p) - 1
    rows = [0] * (d + 1)
    rows[0] = 1
    for w in weights:
        w %= p
        for deg in range(1, d + 1):
            rows[deg] |= _rotl(rows[deg - 1], w, p, full)
    return rows[d]


def bareiss_rank(rows: Sequence[Sequence[int]], ncols: int) -> int:
    """Rank over Q by fraction-free elimination with int64 overflow checks."""
    m = [list(r) for r in rows]
    nrows = len(m)
    for row in m:
        if len(row) != ncols:
            raise ValueError("ragged matrix")
        for x in row:
            if not -INT64_MAX <= x <= INT64_MAX:
                raise OverflowDetected(f"entry {x} does not fit in 64 bits")
    prev = 1
    rank = 0
    for col in range(ncols):
        if rank == nrows:
            break
        piv = next((i for i in range(rank, nrows) if m[i][col] != 0), None)
        if piv is None:
            continue
        m[rank], m[piv] = m[piv], m[rank]
        top = m[rank]
        pv = top[col]
        for i in range(rank + 1, nrows):
            row = m[i]
            f = row[col]
            for j in range(col + 1, ncols):
                num = pv * row[j] - f * top[j]
                if not -INT64_MAX <= num <= INT64_MAX:
                    raise OverflowDetected("elimination intermediate exceeds 64 bits")
                q, rem = divmod(num, prev)
                if rem:
                    raise ArithmeticError("inexact Bareiss division")
                row[j] = q
            row[col] = 0
        prev = pv
        rank += 1
    return rank
