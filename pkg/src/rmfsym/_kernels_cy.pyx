# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled transform kernel; mirrors _kernels.rmf_apply exactly."""

from cpython cimport array

import array


def rmf_apply(values, int p, int n, r1_flat):
    """Apply the basic p x p matrix along every axis of a p**n vector.

    Same contract as the pure-Python twin: new list, entries mod p.
    All intermediates are non-negative, so C division semantics are
    safe for the final reduction.
    """
    cdef array.array vbuf = array.array('q', values)
    cdef array.array rbuf = array.array('q', r1_flat)
    cdef array.array sbuf = array.array('q', bytes(8 * p))
    cdef long long[::1] v = vbuf
    cdef long long[::1] r1 = rbuf
    cdef long long[::1] sub = sbuf
    cdef Py_ssize_t size = v.shape[0]
    cdef Py_ssize_t stride, block, base, off, lo
    cdef int axis, j, r, c
    cdef long long acc, pp = p

    for axis in range(n):
        stride = 1
        for j in range(n - 1 - axis):
            stride *= p
        block = stride * p
        base = 0
        while base < size:
            for off in range(stride):
                lo = base + off
                for j in range(p):
                    sub[j] = v[lo + j * stride]
                for r in range(p):
                    acc = 0
                    for c in range(r + 1):
                        acc += r1[r * p + c] * sub[c]
                    v[lo + r * stride] = acc % pp
            base += block
    return list(vbuf)
