# cython: language_level=3, boundscheck=False, wraparound=False, initializedcheck=False
"""Compiled LFSR kernels. Same contract as ``_kernels_py``; loops run without the GIL."""

from libc.stdlib cimport malloc, free
from libc.string cimport memmove

IMPLEMENTATION = "cython"


cdef Py_ssize_t _tap_index(const unsigned char[::1] taps, Py_ssize_t d, Py_ssize_t* idx) noexcept nogil:
    cdef Py_ssize_t i, m = 0
    for i in range(d):
        if taps[i]:
            idx[m] = i
            m += 1
    return m


def div_lfsr(taps, bits):
    cdef const unsigned char[::1] tv = bytes(taps)
    cdef const unsigned char[::1] bv = bytes(bits)
    cdef Py_ssize_t d = tv.shape[0] - 1
    if d < 1 or not tv[d]:
        raise ValueError("divider needs a tap polynomial of degree >= 1")
    cdef Py_ssize_t n = bv.shape[0]
    out = bytearray(n)
    state = bytearray(d)
    cdef unsigned char[::1] ov = out
    cdef unsigned char[::1] sv = state
    cdef unsigned char* s = &sv[0]
    cdef unsigned char* o = NULL
    if n:
        o = &ov[0]
    cdef Py_ssize_t* idx = <Py_ssize_t*> malloc(d * sizeof(Py_ssize_t))
    if idx == NULL:
        raise MemoryError()
    cdef Py_ssize_t k, j, m
    cdef unsigned char top
    try:
        with nogil:
            m = _tap_index(tv, d, idx)
            for k in range(n):
                top = s[d - 1]
                memmove(s + 1, s, d - 1)
                s[0] = bv[k] & 1
                if top:
                    for j in range(m):
                        s[idx[j]] ^= 1
                o[k] = top
    finally:
        free(idx)
    return bytes(out), bytes(state)


def mul_lfsr(taps, bits):
    cdef const unsigned char[::1] tv = bytes(taps)
    cdef const unsigned char[::1] bv = bytes(bits)
    cdef Py_ssize_t d = tv.shape[0] - 1
    if d < 0 or not tv[d]:
        raise ValueError("multiplier needs a nonzero tap polynomial")
    cdef Py_ssize_t n = bv.shape[0]
    out = bytearray(n)
    if d == 0:
        return bytes(bits), b""
    state = bytearray(d)
    cdef unsigned char[::1] ov = out
    cdef unsigned char[::1] sv = state
    cdef unsigned char* s = &sv[0]
    cdef unsigned char* o = NULL
    if n:
        o = &ov[0]
    cdef Py_ssize_t* idx = <Py_ssize_t*> malloc(d * sizeof(Py_ssize_t))
    if idx == NULL:
        raise MemoryError()
    cdef Py_ssize_t k, j, m
    cdef unsigned char b
    try:
        with nogil:
            m = _tap_index(tv, d, idx)
            for k in range(n):
                b = bv[k] & 1
                o[k] = s[d - 1] ^ b
                memmove(s + 1, s, d - 1)
                s[0] = 0
                if b:
                    for j in range(m):
                        s[idx[j]] ^= 1
    finally:
        free(idx)
    return bytes(out), bytes(state)
