# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled shortlex normal form.

Same algorithm as ``_rep.normal_form`` on int64 coordinates.  Any integer
overflow, or a float sign test whose error bound is not comfortably below the
value, raises OverflowError so the caller can redo the word exactly in Python.
"""

from libc.stdlib cimport malloc, free
from libc.math cimport fabs
from libc.limits cimport LLONG_MIN

cdef extern from *:
    """
    static inline int tl_mul(long long a, long long b, long long *r) { return __builtin_mul_overflow(a, b, r); }
    static inline int tl_add(long long a, long long b, long long *r) { return __builtin_add_overflow(a, b, r); }
    static inline int tl_sub(long long a, long long b, long long *r) { return __builtin_sub_overflow(a, b, r); }
    """
    int tl_mul(long long a, long long b, long long *r) nogil
    int tl_add(long long a, long long b, long long *r) nogil
    int tl_sub(long long a, long long b, long long *r) nogil


cdef int _rmul(long long *X, int s, int n, int d, const long long[::1] b,
               const long long[::1] T, long long *tmp) nogil:
    # X <- X * rho(s); returns 1 on overflow
    cdef int j, i, l, p, q
    cdef long long *cs = X + s * n * d
    cdef long long *cj
    cdef long long prod, acc
    cdef Py_ssize_t boff
    cdef bint nonzero
    for j in range(n):
        if j == s:
            continue
        boff = (s * n + j) * d
        nonzero = 0
        for l in range(d):
            if b[boff + l] != 0:
                nonzero = 1
                break
        if not nonzero:
            continue
        cj = X + j * n * d
        for i in range(n):
            if d == 1:
                if tl_mul(b[boff], cs[i], &prod):
                    return 1
                if tl_sub(cj[i], prod, &cj[i]):
                    return 1
                continue
            for l in range(d):
                tmp[l] = 0
            for p in range(d):
                if b[boff + p] == 0:
                    continue
                for q in range(d):
                    if cs[i * d + q] == 0:
                        continue
                    if tl_mul(b[boff + p], cs[i * d + q], &acc):
                        return 1
                    for l in range(d):
                        if T[(p * d + q) * d + l] == 0:
                            continue
                        if tl_mul(acc, T[(p * d + q) * d + l], &prod):
                            return 1
                        if tl_add(tmp[l], prod, &tmp[l]):
                            return 1
            for l in range(d):
                if tl_sub(cj[i * d + l], tmp[l], &cj[i * d + l]):
                    return 1
    for i in range(n * d):
        if cs[i] == LLONG_MIN:
            return 1
        cs[i] = -cs[i]
    return 0


cdef int _col_sign(long long *X, int s, int n, int d, const double[::1] cpow) nogil:
    # sign of the root in column s: -1, 1, or 2 when the float test is not conclusive
    cdef long long *col = X + s * n * d
    cdef int i, l
    cdef double v, err, best = 0.0, best_err = 0.0
    if d == 1:
        for i in range(n):
            if col[i] > 0:
                return 1
            if col[i] < 0:
                return -1
        return 2
    for i in range(n):
        v = 0.0
        err = 0.0
        for l in range(d):
            v += col[i * d + l] * cpow[l]
            err += fabs(col[i * d + l] * cpow[l])
        if fabs(v) > fabs(best):
            best = v
            best_err = err
    # positive roots have a coordinate >= 1/sqrt(n)
    if fabs(best) <= 1e-9 + best_err * 1e-12 * (d + 2):
        return 2
    return 1 if best > 0 else -1


def normal_form(bytes word, int n, int d, const long long[::1] b,
                const long long[::1] T, const double[::1] cpow):
    cdef Py_ssize_t size = n * n * d
    cdef long long *X = <long long *> malloc(size * sizeof(long long))
    cdef long long *tmp = <long long *> malloc((d + 1) * sizeof(long long))
    cdef unsigned char *w = word
    cdef Py_ssize_t k, length = len(word)
    cdef int s, sg, i, failed = 0
    cdef bytearray out = bytearray()
    if X == NULL or tmp == NULL:
        free(X)
        free(tmp)
        raise MemoryError()
    try:
        for k in range(size):
            X[k] = 0
        for i in range(n):
            X[(i * n + i) * d] = 1
        for k in range(length - 1, -1, -1):
            if _rmul(X, w[k], n, d, b, T, tmp):
                raise OverflowError("int64 overflow")
        while True:
            for s in range(n):
                sg = _col_sign(X, s, n, d, cpow)
                if sg == 2:
                    raise OverflowError("inconclusive float sign")
                if sg < 0:
                    break
            else:
                return bytes(out)
            out.append(s)
            if _rmul(X, s, n, d, b, T, tmp):
                raise OverflowError("int64 overflow")
    finally:
        free(X)
        free(tmp)
