"""Fraction-free Gauss-Jordan elimination on integer rows (pure Python)."""

from fractions import Fraction
from math import gcd, lcm


def _integer_row(row):
    den = 1
    for x in row:
        if x.denominator != 1:
            den = lcm(den, x.denominator)
    return [int(x * den) for x in row]


def rref_rows(rows, ncols):
    """Return (reduced nonzero rows as Fractions, pivot columns)."""
    work = []
    for row in rows:
        ints = _integer_row(row)
        g = gcd(*ints) if ints else 0
        if g:
            work.append([x // g for x in ints])
    pivots = []
    r = 0
    m = len(work)
    for c in range(ncols):
        if r == m:
            break
        best = -1
        best_size = 0
        for i in range(r, m):
            v = work[i][c]
            if v:
                size = abs(v)
                if best < 0 or size < best_size:
                    best, best_size = i, size
        if best < 0:
            continue
        work[r], work[best] = work[best], work[r]
        prow = work[r]
        p = prow[c]
        for i in range(m):
            if i == r:
                continue
            row = work[i]
            a = row[c]
            if not a:
                continue
            g = gcd(a, p)
            s, t = p // g, a // g
            new = [s * x - t * y for x, y in zip(row, prow)]
            g = gcd(*new)
            if g > 1:
                new = [x // g for x in new]
            work[i] = new
        pivots.append(c)
        r += 1
    out = []
    for i, c in enumerate(pivots):
        row = work[i]
        p = row[c]
        out.append([Fraction(x, p) if x else Fraction(0) for x in row])
    return out, pivots
