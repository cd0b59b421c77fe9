"""Exact linear algebra over the rationals.

Everything here works on ``fractions.Fraction``; there is no floating
point anywhere in the package.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from . import _kernels

Rational = Fraction


class ShapeError(ValueError):
    pass


def as_rational(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, float):
        raise TypeError("floats are not accepted; pass an int, str or Fraction")
    return Fraction(x)


@dataclass(frozen=True)
class Matrix:
    nrows: int
    ncols: int
    entries: tuple  # row-major tuple of Fractions

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence]) -> "Matrix":
        rows = [list(r) for r in rows]
        nrows = len(rows)
        ncols = len(rows[0]) if rows else 0
        for r in rows:
            if len(r) != ncols:
                raise ShapeError("ragged rows")
        return cls(nrows, ncols, tuple(as_rational(x) for r in rows for x in r))

    @classmethod
    def zero(cls, nrows: int, ncols: int | None = None) -> "Matrix":
        ncols = nrows if ncols is None else ncols
        return cls(nrows, ncols, (Fraction(0),) * (nrows * ncols))

    @classmethod
    def identity(cls, n: int) -> "Matrix":
        e = [Fraction(0)] * (n * n)
        for i in range(n):
            e[i * n + i] = Fraction(1)
        return cls(n, n, tuple(e))

    @classmethod
    def diag(cls, values: Iterable) -> "Matrix":
        values = [as_rational(v) for v in values]
        n = len(values)
        e = [Fraction(0)] * (n * n)
        for i, v in enumerate(values):
            e[i * n + i] = v
        return cls(n, n, tuple(e))

    @classmethod
    def unit(cls, n: int, i: int, j: int) -> "Matrix":
        e = [Fraction(0)] * (n * n)
        e[i * n + j] = Fraction(1)
        return cls(n, n, tuple(e))

    def __getitem__(self, ij):
        i, j = ij
        return self.entries[i * self.ncols + j]

    def rows(self) -> list[list[Fraction]]:
        n = self.ncols
        return [list(self.entries[i * n:(i + 1) * n]) for i in range(self.nrows)]

    @property
    def is_square(self) -> bool:
        return self.nrows == self.ncols

    def transpose(self) -> "Matrix":
        return Matrix.from_rows([list(c) for c in zip(*self.rows())]) if self.nrows else Matrix(0, 0, ())

    def __add__(self, other: "Matrix") -> "Matrix":
        self._same_shape(other)
        return Matrix(self.nrows, self.ncols, tuple(a + b for a, b in zip(self.entries, other.entries)))

    def __sub__(self, other: "Matrix") -> "Matrix":
        self._same_shape(other)
        return Matrix(self.nrows, self.ncols, tuple(a - b for a, b in zip(self.entries, other.entries)))

    def __neg__(self) -> "Matrix":
        return Matrix(self.nrows, self.ncols, tuple(-a for a in self.entries))

    def scale(self, c) -> "Matrix":
        c = as_rational(c)
        return Matrix(self.nrows, self.ncols, tuple(c * a for a in self.entries))

    def __matmul__(self, other: "Matrix") -> "Matrix":
        if self.ncols != other.nrows:
            raise ShapeError(f"cannot multiply {self.nrows}x{self.ncols} by {other.nrows}x{other.ncols}")
        cols = other.transpose().rows() if other.nrows else [[] for _ in range(other.ncols)]
        out = []
        for row in self.rows():
            nz = [(k, a) for k, a in enumerate(row) if a]
            out.append([sum((a * col[k] for k, a in nz), Fraction(0)) for col in cols])
        return Matrix(self.nrows, other.ncols, tuple(x for r in out for x in r))

    def __pow__(self, k: int) -> "Matrix":
        self._need_square()
        result = Matrix.identity(self.nrows)
        base = self
        while k:
            if k & 1:
                result = result @ base
            base = base @ base
            k >>= 1
        return result

    def trace(self) -> Fraction:
        self._need_square()
        return sum((self[i, i] for i in range(self.nrows)), Fraction(0))

    def is_zero(self) -> bool:
        return not any(self.entries)

    def inverse(self) -> "Matrix":
        self._need_square()
        n = self.nrows
        aug = [r + [Fraction(int(i == j)) for j in range(n)] for i, r in enumerate(self.rows())]
        red, pivots = _kernels.rref_rows(aug, 2 * n)
        if pivots[:n] != list(range(n)) or len(pivots) < n:
            raise ZeroDivisionError("matrix is singular")
        return Matrix.from_rows([r[n:] for r in red[:n]])

    def commutator(self, other: "Matrix") -> "Matrix":
        return self @ other - other @ self

    def _same_shape(self, other: "Matrix") -> None:
        if (self.nrows, self.ncols) != (other.nrows, other.ncols):
            raise ShapeError("shape mismatch")

    def _need_square(self) -> None:
        if not self.is_square:
            raise ShapeError(f"expected a square matrix, got {self.nrows}x{self.ncols}")

    def __str__(self) -> str:
        return "[" + ", ".join("[" + ", ".join(str(x) for x in r) + "]" for r in self.rows()) + "]"


def block_diagonal(blocks: Sequence[Matrix]) -> Matrix:
    n = sum(b.nrows for b in blocks)
    e = [Fraction(0)] * (n * n)
    off = 0
    for b in blocks:
        for i in range(b.nrows):
            for j in range(b.ncols):
                e[(off + i) * n + off + j] = b[i, j]
        off += b.nrows
    return Matrix(n, n, tuple(e))


# --- row reduction --------------------------------------------------------

def _to_rows(M) -> tuple[list[list[Fraction]], int]:
    if isinstance(M, Matrix):
        return M.rows(), M.ncols
    rows = [[as_rational(x) for x in r] for r in M]
    ncols = len(rows[0]) if rows else 0
    if any(len(r) != ncols for r in rows):
        raise ShapeError("ragged rows")
    return rows, ncols


def rref(M) -> tuple[Matrix, int, list[int]]:
    """Reduced row echelon form, rank and pivot columns."""
    rows, ncols = _to_rows(M)
    red, pivots = _kernels.rref_rows(rows, ncols)
    nrows = len(rows)
    full = red + [[Fraction(0)] * ncols for _ in range(nrows - len(red))]
    out = Matrix(nrows, ncols, tuple(x for r in full for x in r))
    return out, len(pivots), list(pivots)


def rank(M) -> int:
    rows, ncols = _to_rows(M)
    return len(_kernels.rref_rows(rows, ncols)[1])


def normalize_first(v: Sequence[Fraction]) -> list[Fraction]:
    for x in v:
        if x:
            return [y / x for y in v]
    return list(v)


def kernel_basis(M) -> list[list[Fraction]]:
    """Basis of {v : M v = 0}; each vector scaled so its first nonzero entry is 1."""
    rows, ncols = _to_rows(M)
    red, pivots = _kernels.rref_rows(rows, ncols)
    pivset = set(pivots)
    basis = []
    for f in range(ncols):
        if f in pivset:
            continue
        v = [Fraction(0)] * ncols
        v[f] = Fraction(1)
        for r, p in enumerate(pivots):
            v[p] = -red[r][f]
        basis.append(normalize_first(v))
    return basis


def row_space(vectors: Sequence[Sequence[Fraction]], ncols: int) -> tuple[list[list[Fraction]], list[int]]:
    """Reduced basis of the span of ``vectors``."""
    return _kernels.rref_rows([list(v) for v in vectors], ncols)


def reduce_against(v: Sequence[Fraction], red: Sequence[Sequence[Fraction]], pivots: Sequence[int]) -> list[Fraction]:
    """Remainder of ``v`` after clearing the pivot columns of a reduced basis."""
    out = list(v)
    for row, p in zip(red, pivots):
        c = out[p]
        if c:
            out = [a - c * b for a, b in zip(out, row)]
    return out


def same_span(a: Sequence[Sequence[Fraction]], b: Sequence[Sequence[Fraction]], ncols: int) -> bool:
    ra, pa = row_space(a, ncols)
    rb, pb = row_space(b, ncols)
    return pa == pb and ra == rb


# --- univariate polynomials ----------------------------------------------

@dataclass(frozen=True)
class UniPoly:
    """Polynomial in one variable ``t``; coefficients from degree 0 upward."""

    coeffs: tuple

    @classmethod
    def of(cls, coeffs: Iterable) -> "UniPoly":
        c = [as_rational(x) for x in coeffs]
        while c and not c[-1]:
            c.pop()
        return cls(tuple(c))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def monic(self) -> "UniPoly":
        lead = self.coeffs[-1]
        return UniPoly.of(c / lead for c in self.coeffs)

    def __add__(self, other: "UniPoly") -> "UniPoly":
        n = max(len(self.coeffs), len(other.coeffs))
        a = self.coeffs + (Fraction(0),) * (n - len(self.coeffs))
        b = other.coeffs + (Fraction(0),) * (n - len(other.coeffs))
        return UniPoly.of(x + y for x, y in zip(a, b))

    def __sub__(self, other: "UniPoly") -> "UniPoly":
        return self + UniPoly.of(-c for c in other.coeffs)

    def __mul__(self, other: "UniPoly") -> "UniPoly":
        if self.is_zero() or other.is_zero():
            return UniPoly(())
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return UniPoly.of(out)

    def derivative(self) -> "UniPoly":
        return UniPoly.of(i * c for i, c in enumerate(self.coeffs) if i)

    def divmod(self, other: "UniPoly") -> tuple["UniPoly", "UniPoly"]:
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        q = [Fraction(0)] * max(len(rem) - len(other.coeffs) + 1, 1)
        lead = other.coeffs[-1]
        while len(rem) >= len(other.coeffs) and any(rem):
            shift = len(rem) - len(other.coeffs)
            c = rem[-1] / lead
            q[shift] = c
            for k, b in enumerate(other.coeffs):
                rem[shift + k] -= c * b
            rem.pop()
            while rem and not rem[-1]:
                rem.pop()
        return UniPoly.of(q), UniPoly.of(rem)

    def gcd(self, other: "UniPoly") -> "UniPoly":
        a, b = self, other
        while not b.is_zero():
            a, b = b, a.divmod(b)[1]
        return a.monic() if not a.is_zero() else a

    def __call__(self, M: Matrix) -> Matrix:
        """Evaluate at a square matrix (Horner)."""
        n = M.nrows
        out = Matrix.zero(n)
        ident = Matrix.identity(n)
        for c in reversed(self.coeffs):
            out = out @ M + ident.scale(c)
        return out

    def __str__(self) -> str:
        if self.is_zero():
            return "0"
        parts = []
        for i in range(self.degree, -1, -1):
            c = self.coeffs[i]
            if not c:
                continue
            mono = "" if i == 0 else ("t" if i == 1 else f"t^{i}")
            mag = abs(c)
            if mono and mag == 1:
                body = mono
            elif mono:
                body = f"{mag}*{mono}"
            else:
                body = str(mag)
            sign = "-" if c < 0 else "+"
            parts.append((sign, body))
        s = ("-" if parts[0][0] == "-" else "") + parts[0][1]
        for sign, body in parts[1:]:
            s += f" {sign} {body}"
        return s


def minimal_polynomial(M: Matrix) -> UniPoly:
    """Monic generator of {p : p(M) = 0}."""
    if not M.is_square:
        raise ShapeError(f"expected a square matrix, got {M.nrows}x{M.ncols}")
    n = M.nrows
    powers = [Matrix.identity(n)]
    while True:
        k = len(powers)
        nxt = powers[-1] @ M
        # columns: vec(M^0..M^{k-1}); solve for M^k
        cols = [p.entries for p in powers] + [nxt.entries]
        system = [list(r) for r in zip(*cols)]
        ker = kernel_basis(system)
        if ker:
            v = ker[0]
            lead = v[k]
            # the first dependency always involves M^k, otherwise it would have appeared earlier
            return UniPoly.of([c / lead for c in v])
        powers.append(nxt)


def is_nilpotent(M: Matrix) -> bool:
    return (M ** M.nrows).is_zero()


def squarefree_part(p: UniPoly) -> UniPoly:
    g = p.gcd(p.derivative())
    return p.divmod(g)[0].monic()


def jordan_type(M: Matrix) -> str:
    if not M.is_square:
        raise ShapeError(f"expected a square matrix, got {M.nrows}x{M.ncols}")
    if M.is_zero():
        return "zero"
    if is_nilpotent(M):
        return "nilpotent"
    p = minimal_polynomial(M)
    if p.gcd(p.derivative()).degree == 0:
        return "semisimple"
    return "mixed"


def semisimple_part(M: Matrix) -> Matrix:
    """Semisimple part of the additive Jordan decomposition.

    Newton iteration S <- S - p(S) p'(S)^{-1} with p the squarefree part of
    the minimal polynomial converges in finitely many steps.
    """
    if not M.is_square:
        raise ShapeError(f"expected a square matrix, got {M.nrows}x{M.ncols}")
    p = squarefree_part(minimal_polynomial(M))
    dp = p.derivative()
    S = M
    for _ in range(M.nrows.bit_length() + 2):
        val = p(S)
        if val.is_zero():
            return S
        S = S - val @ dp(S).inverse()
    if not p(S).is_zero():
        raise ArithmeticError("Newton iteration did not terminate")
    return S
