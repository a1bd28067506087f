# cython: boundscheck=False, wraparound=False, cdivision=True
# cython: language_level=3
"""Compiled enumeration kernels.

Same contract as the pure module: base-p odometer over row-major matrix
entries, first entry most significant, survivors returned ascending.  The
scan loops run without the GIL so contiguous ranges can be dispatched to a
thread pool.
"""

from libc.stdlib cimport free, malloc, realloc

BACKEND = "native"


cdef long* _copy_longs(object seq, Py_ssize_t n) except NULL:
    cdef long* buf = <long*> malloc((n if n > 0 else 1) * sizeof(long))
    cdef Py_ssize_t t
    if buf == NULL:
        raise MemoryError()
    for t in range(n):
        buf[t] = seq[t]
    return buf


cdef long* _decode(long long index, long p, long n) except NULL:
    cdef long* digits = <long*> malloc((n if n > 0 else 1) * sizeof(long))
    cdef long t
    if digits == NULL:
        raise MemoryError()
    for t in range(n - 1, -1, -1):
        digits[t] = <long> (index % p)
        index //= p
    return digits


def scan_lie_morphisms(long p, dom_br, cod_br, long rows, long cols,
                       long long start, long long stop):
    """Indices of F with F[e_i, e_j] = [F e_i, F e_j] for all i < j."""
    cdef long n = rows * cols
    cdef long* dom = _copy_longs(dom_br, cols * cols * cols)
    cdef long* cod = NULL
    cdef long* digits = NULL
    cdef long long* hits = NULL
    cdef long long* grown = NULL
    cdef Py_ssize_t cap = 1024, count = 0, t
    cdef long long idx = start
    cdef long i, j, r, k, a, b, carry
    cdef long lhs, rhs
    cdef bint ok, oom = False
    try:
        cod = _copy_longs(cod_br, rows * rows * rows)
        digits = _decode(start, p, n)
        hits = <long long*> malloc(cap * sizeof(long long))
        if hits == NULL:
            raise MemoryError()
        with nogil:
            while idx < stop:
                ok = True
                for i in range(cols):
                    if not ok:
                        break
                    for j in range(i + 1, cols):
                        if not ok:
                            break
                        for r in range(rows):
                            lhs = 0
                            for k in range(cols):
                                lhs = lhs + digits[r * cols + k] * dom[(i * cols + j) * cols + k]
                            rhs = 0
                            for a in range(rows):
                                for b in range(rows):
                                    rhs = rhs + digits[a * cols + i] * digits[b * cols + j] * cod[(a * rows + b) * rows + r]
                            if (lhs - rhs) % p != 0:
                                ok = False
                                break
                if ok:
                    if count == cap:
                        cap = cap * 2
                        grown = <long long*> realloc(hits, cap * sizeof(long long))
                        if grown == NULL:
                            oom = True
                            break
                        hits = grown
                    hits[count] = idx
                    count += 1
                idx += 1
                carry = n - 1
                while carry >= 0:
                    digits[carry] += 1
                    if digits[carry] == p:
                        digits[carry] = 0
                        carry -= 1
                    else:
                        break
        if oom:
            raise MemoryError()
        return [hits[t] for t in range(count)]
    finally:
        free(dom)
        free(cod)
        free(digits)
        free(hits)


def scan_derivations(long p, dom_br, act, cod_br, long rows, long cols,
                     long long start, long long stop):
    """Indices of D obeying the derivation law on all pairs i < j."""
    cdef long n = rows * cols
    cdef long* dom = _copy_longs(dom_br, cols * cols * cols)
    cdef long* acts = NULL
    cdef long* cod = NULL
    cdef long* digits = NULL
    cdef long long* hits = NULL
    cdef long long* grown = NULL
    cdef Py_ssize_t cap = 1024, count = 0, t
    cdef long long idx = start
    cdef long i, j, r, k, a, b, carry
    cdef long lhs, rhs
    cdef bint ok, oom = False
    try:
        acts = _copy_longs(act, cols * rows * rows)
        cod = _copy_longs(cod_br, rows * rows * rows)
        digits = _decode(start, p, n)
        hits = <long long*> malloc(cap * sizeof(long long))
        if hits == NULL:
            raise MemoryError()
        with nogil:
            while idx < stop:
                ok = True
                for i in range(cols):
                    if not ok:
                        break
                    for j in range(i + 1, cols):
                        if not ok:
                            break
                        for r in range(rows):
                            lhs = 0
                            for k in range(cols):
                                lhs = lhs + digits[r * cols + k] * dom[(i * cols + j) * cols + k]
                            rhs = 0
                            for b in range(rows):
                                rhs = rhs + digits[b * cols + j] * acts[(i * rows + b) * rows + r]
                                rhs = rhs - digits[b * cols + i] * acts[(j * rows + b) * rows + r]
                            for a in range(rows):
                                for b in range(rows):
                                    rhs = rhs + digits[a * cols + i] * digits[b * cols + j] * cod[(a * rows + b) * rows + r]
                            if (lhs - rhs) % p != 0:
                                ok = False
                                break
                if ok:
                    if count == cap:
                        cap = cap * 2
                        grown = <long long*> realloc(hits, cap * sizeof(long long))
                        if grown == NULL:
                            oom = True
                            break
                        hits = grown
                    hits[count] = idx
                    count += 1
                idx += 1
                carry = n - 1
                while carry >= 0:
                    digits[carry] += 1
                    if digits[carry] == p:
                        digits[carry] = 0
                        carry -= 1
                    else:
                        break
        if oom:
            raise MemoryError()
        return [hits[t] for t in range(count)]
    finally:
        free(dom)
        free(acts)
        free(cod)
        free(digits)
        free(hits)
