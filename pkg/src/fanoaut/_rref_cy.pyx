# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled twin of ``_rref_py``: same algorithm, typed loops."""

from fractions import Fraction
from math import gcd, lcm


cdef list _integer_row(list row):
    cdef object den = 1
    cdef object x
    for x in row:
        if x.denominator != 1:
            den = lcm(den, x.denominator)
    return [int(x * den) for x in row]


def rref_rows(rows, Py_ssize_t ncols):
    cdef list work = []
    cdef list ints, prow, row, new
    cdef Py_ssize_t m, r, c, i, j, best, n
    cdef object g, p, a, s, t, v, size, best_size
    for raw in rows:
        ints = _integer_row(list(raw))
        g = gcd(*ints) if ints else 0
        if g:
            work.append([x // g for x in ints])
    cdef list pivots = []
    m = len(work)
    r = 0
    for c in range(ncols):
        if r == m:
            break
        best = -1
        best_size = 0
        for i in range(r, m):
            v = (<list>work[i])[c]
            if v:
                size = abs(v)
                if best < 0 or size < best_size:
                    best = i
                    best_size = size
        if best < 0:
            continue
        work[r], work[best] = work[best], work[r]
        prow = <list>work[r]
        p = prow[c]
        n = len(prow)
        for i in range(m):
            if i == r:
                continue
            row = <list>work[i]
            a = row[c]
            if not a:
                continue
            g = gcd(a, p)
            s = p // g
            t = a // g
            new = [None] * n
            for j in range(n):
                new[j] = s * row[j] - t * prow[j]
            g = gcd(*new)
            if g > 1:
                for j in range(n):
                    new[j] = new[j] // g
            work[i] = new
        pivots.append(c)
        r += 1
    cdef list out = []
    for i in range(len(pivots)):
        row = <list>work[i]
        p = row[<Py_ssize_t>pivots[i]]
        out.append([Fraction(x, p) if x else Fraction(0) for x in row])
    return out, pivots
