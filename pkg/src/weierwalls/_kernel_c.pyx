# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled kernel: exact polynomial evaluation and segment restriction.

Same contract as ``weierwalls._kernel_py`` (see its docstring for the
encoding).  Arithmetic stays on Python ints (arbitrary precision is required:
iterated contractions multiply denominators), but the term loops and
fraction-accumulator bookkeeping are compiled, which removes the interpreter
overhead that dominates the pure version on desk-scale inputs.
"""

from math import gcd

BACKEND = "c"


cdef _norm(n, d):
    if n == 0:
        return 0, 1
    if d < 0:
        n = -n
        d = -d
    g = gcd(n, d)
    return n // g, d // g


def eval_terms(tuple keys, tuple nums, tuple dens, vnums, vdens):
    cdef Py_ssize_t i, m, j, v
    cdef tuple key
    tot_n = 0
    tot_d = 1
    m = len(keys)
    for i in range(m):
        key = <tuple> keys[i]
        n = nums[i]
        d = dens[i]
        for j in range(len(key)):
            v = <Py_ssize_t> key[j]
            n = n * vnums[v]
            d = d * vdens[v]
        tot_n = tot_n * d + n * tot_d
        tot_d = tot_d * d
    return _norm(tot_n, tot_d)


def restrict_terms(tuple keys, tuple nums, tuple dens, unums, udens, wnums, wdens):
    cdef Py_ssize_t i, m, v, w
    cdef tuple key
    n0 = 0
    n1 = 0
    n2 = 0
    d0 = 1
    d1 = 1
    d2 = 1
    m = len(keys)
    for i in range(m):
        key = <tuple> keys[i]
        cn = nums[i]
        cd = dens[i]
        if len(key) == 0:
            n0 = n0 * cd + cn * d0
            d0 = d0 * cd
        elif len(key) == 1:
            v = <Py_ssize_t> key[0]
            an = cn * unums[v]
            bn = cn * wnums[v]
            ad = cd * udens[v]
            bd = cd * wdens[v]
            n0 = n0 * ad + an * d0
            d0 = d0 * ad
            n1 = n1 * bd + bn * d1
            d1 = d1 * bd
        else:
            v = <Py_ssize_t> key[0]
            w = <Py_ssize_t> key[1]
            c0n = cn * unums[v] * unums[w]
            c0d = cd * udens[v] * udens[w]
            c1n = cn * (unums[v] * wnums[w] * udens[w] * wdens[v]
                        + wnums[v] * unums[w] * wdens[w] * udens[v])
            c1d = cd * udens[v] * wdens[v] * udens[w] * wdens[w]
            c2n = cn * wnums[v] * wnums[w]
            c2d = cd * wdens[v] * wdens[w]
            n0 = n0 * c0d + c0n * d0
            d0 = d0 * c0d
            n1 = n1 * c1d + c1n * d1
            d1 = d1 * c1d
            n2 = n2 * c2d + c2n * d2
            d2 = d2 * c2d
    n0, d0 = _norm(n0, d0)
    n1, d1 = _norm(n1, d1)
    n2, d2 = _norm(n2, d2)
    return n0, d0, n1, d1, n2, d2
