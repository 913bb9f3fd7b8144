# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled kernels; see ``_pykernels`` for the reference semantics."""

from libc.stdlib cimport malloc, calloc, free
from libc.stdint cimport uint64_t
from libc.limits cimport LLONG_MIN

from fermat_adjoint.errors import OverflowDetected

cdef extern from *:
    """
    static inline int fa_add_u64(unsigned long long a, unsigned long long b,
                                 unsigned long long *r) {
        return __builtin_add_overflow(a, b, r);
    }
    static inline int fa_mul_i64(long long a, long long b, long long *r) {
        return __builtin_mul_overflow(a, b, r);
    }
    static inline int fa_sub_i64(long long a, long long b, long long *r) {
        return __builtin_sub_overflow(a, b, r);
    }
    """
    int fa_add_u64(unsigned long long a, unsigned long long b, unsigned long long *r) nogil
    int fa_mul_i64(long long a, long long b, long long *r) nogil
    int fa_sub_i64(long long a, long long b, long long *r) nogil


def residue_counts(weights, int p, int d):
    """Per-residue monomial counts; raises ``OverflowError`` past 2**64."""
    cdef Py_ssize_t nv = len(weights)
    cdef int *ws = <int *> malloc(max(nv, 1) * sizeof(int))
    cdef unsigned long long *table = <unsigned long long *> calloc((d + 1) * p, sizeof(unsigned long long))
    cdef Py_ssize_t v
    cdef int w, deg, r, src, ovf = 0
    cdef unsigned long long *row
    cdef unsigned long long *prev
    if ws == NULL or table == NULL:
        free(ws)
        free(table)
        raise MemoryError()
    try:
        for v in range(nv):
            ws[v] = weights[v] % p
        table[0] = 1
        with nogil:
            for v in range(nv):
                w = ws[v]
                for deg in range(1, d + 1):
                    row = table + deg * p
                    prev = table + (deg - 1) * p
                    for r in range(p):
                        src = r - w
                        if src < 0:
                            src += p
                        if fa_add_u64(row[r], prev[src], &row[r]):
                            ovf = 1
                            break
                    if ovf:
                        break
                if ovf:
                    break
        if ovf:
            raise OverflowError("monomial count exceeds 64 bits")
        return [table[d * p + r] for r in range(p)]
    finally:
        free(ws)
        free(table)


def reachable_residues(weights, int p, int d):
    """Bitmask of residues reached by degree-``d`` monomials (p < 64)."""
    if p >= 64:
        raise OverflowError("bitmask kernel needs p < 64")
    cdef Py_ssize_t nv = len(weights)
    cdef uint64_t full = (<uint64_t> 1 << p) - 1
    cdef uint64_t *rows = <uint64_t *> calloc(d + 1, sizeof(uint64_t))
    cdef uint64_t m
    cdef int w, deg
    cdef Py_ssize_t v
    if rows == NULL:
        raise MemoryError()
    try:
        rows[0] = 1
        for v in range(nv):
            w = weights[v] % p
            for deg in range(1, d + 1):
                m = rows[deg - 1]
                if w:
                    m = ((m << w) | (m >> (p - w))) & full
                rows[deg] |= m
        return int(rows[d])
    finally:
        free(rows)


def bareiss_rank(rows, int ncols):
    """Fraction-free rank with checked int64 arithmetic."""
    cdef Py_ssize_t nrows = len(rows)
    cdef long long *m = <long long *> malloc(max(nrows * ncols, 1) * sizeof(long long))
    cdef long long prev = 1, pv, f, a, b, num
    cdef Py_ssize_t i, j, col, piv, rank = 0
    cdef int bad = 0
    if m == NULL:
        raise MemoryError()
    try:
        for i in range(nrows):
            row = rows[i]
            if len(row) != ncols:
                raise ValueError("ragged matrix")
            for j in range(ncols):
                x = row[j]
                if not -9223372036854775807 <= x <= 9223372036854775807:
                    raise OverflowDetected(f"entry {x} does not fit in 64 bits")
                m[i * ncols + j] = x
        with nogil:
            for col in range(ncols):
                if rank == nrows:
                    break
                piv = -1
                for i in range(rank, nrows):
                    if m[i * ncols + col] != 0:
                        piv = i
                        break
                if piv < 0:
                    continue
                if piv != rank:
                    for j in range(ncols):
                        a = m[piv * ncols + j]
                        m[piv * ncols + j] = m[rank * ncols + j]
                        m[rank * ncols + j] = a
                pv = m[rank * ncols + col]
                for i in range(rank + 1, nrows):
                    f = m[i * ncols + col]
                    for j in range(col + 1, ncols):
                        bad = fa_mul_i64(pv, m[i * ncols + j], &a)
                        bad |= fa_mul_i64(f, m[rank * ncols + j], &b)
                        bad |= fa_sub_i64(a, b, &num)
                        if bad or num == LLONG_MIN:
                            bad = 1
                            break
                        if num % prev != 0:
                            bad = 2
                            break
                        m[i * ncols + j] = num // prev
                    if bad:
                        break
                    m[i * ncols + col] = 0
                if bad:
                    break
                prev = pv
                rank += 1
        if bad == 1:
            raise OverflowDetected("elimination intermediate exceeds 64 bits")
        if bad == 2:
            raise ArithmeticError("inexact Bareiss division")
        return rank
    finally:
        free(m)
