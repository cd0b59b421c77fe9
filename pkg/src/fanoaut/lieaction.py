"""The Lie algebra sl(n_1) + ... + sl(n_k) acting on multigraded polynomials.

A matrix X in block i acts on that block's variables by the derivation
x_a -> -sum_b X[a, b] x_b, extended to polynomials by the Leibniz rule.
This is the differential of f -> f(g^{-1} x), so it respects brackets.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .exactmath import Matrix, block_diagonal, jordan_type as _jordan_type
from .polyring import Polynomial, RingSpec


class LieError(ValueError):
    pass


@dataclass(frozen=True)
class AlgElement:
    blocks: tuple  # one square Matrix per ring block

    @classmethod
    def of(cls, *blocks) -> "AlgElement":
        return cls(tuple(b if isinstance(b, Matrix) else Matrix.from_rows(b) for b in blocks))

    def _check(self, other: "AlgElement") -> None:
        if [b.nrows for b in self.blocks] != [b.nrows for b in other.blocks]:
            raise LieError("elements of different algebras")

    def __add__(self, other: "AlgElement") -> "AlgElement":
        self._check(other)
        return AlgElement(tuple(a + b for a, b in zip(self.blocks, other.blocks)))

    def __sub__(self, other: "AlgElement") -> "AlgElement":
        self._check(other)
        return AlgElement(tuple(a - b for a, b in zip(self.blocks, other.blocks)))

    def __neg__(self) -> "AlgElement":
        return AlgElement(tuple(-a for a in self.blocks))

    def scale(self, c) -> "AlgElement":
        return AlgElement(tuple(a.scale(c) for a in self.blocks))

    def is_zero(self) -> bool:
        return all(b.is_zero() for b in self.blocks)

    def vector(self) -> list[Fraction]:
        return [x for b in self.blocks for x in b.entries]

    def matrix(self) -> Matrix:
        """Block-diagonal matrix in the defining representation."""
        return block_diagonal(self.blocks)

    def jordan_type(self) -> str:
        return _jordan_type(self.matrix())

    def conjugate(self, g: Sequence[Matrix]) -> "AlgElement":
        return AlgElement(tuple(gi @ b @ gi.inverse() for gi, b in zip(g, self.blocks)))

    def __str__(self) -> str:
        return " + ".join(str(b) for b in self.blocks)


def bracket(X: AlgElement, Y: AlgElement) -> AlgElement:
    X._check(Y)
    return AlgElement(tuple(a.commutator(b) for a, b in zip(X.blocks, Y.blocks)))


def _sl_basis(n: int) -> list[Matrix]:
    out = []
    for i in range(n):
        for j in range(n):
            if i != j:
                out.append(Matrix.unit(n, i, j))
    for i in range(n - 1):
        out.append(Matrix.unit(n, i, i) - Matrix.unit(n, i + 1, i + 1))
    return out


class AmbientAlgebra:
    """sl(n_1) + ... + sl(n_k) for a ring with blocks of sizes n_i."""

    def __init__(self, ring: RingSpec):
        self.ring = ring
        self.sizes = ring.block_sizes
        self._basis = None

    @property
    def dim(self) -> int:
        return sum(n * n - 1 for n in self.sizes)

    def zero(self) -> AlgElement:
        return AlgElement(tuple(Matrix.zero(n) for n in self.sizes))

    def embed(self, block: int, M: Matrix) -> AlgElement:
        blocks = [Matrix.zero(n) for n in self.sizes]
        blocks[block] = M
        return AlgElement(tuple(blocks))

    def basis(self) -> list[AlgElement]:
        """Off-diagonal units then consecutive diagonal differences, block by block."""
        if self._basis is None:
            self._basis = [self.embed(k, M) for k, n in enumerate(self.sizes) for M in _sl_basis(n)]
        return self._basis

    def contains(self, X: AlgElement) -> bool:
        return [b.nrows for b in X.blocks] == list(self.sizes) and all(b.trace() == 0 for b in X.blocks)


def act(X: AlgElement, f: Polynomial) -> Polynomial:
    """Derivation action of X on f."""
    ring = f.ring
    if tuple(b.nrows for b in X.blocks) != ring.block_sizes:
        raise LieError("algebra element does not match the ring's blocks")
    out: dict = {}
    for k, M in enumerate(X.blocks):
        off = ring.block_offsets[k]
        n = M.nrows
        nz = [(a, b, M[a, b]) for a in range(n) for b in range(n) if M[a, b]]
        if not nz:
            continue
        for e, c in f.terms.items():
            for a, b, m in nz:
                ia, ib = off + a, off + b
                ea = e[ia]
                if not ea:
                    continue
                # d/dx_a then multiply by x_b
                if ia == ib:
                    e2 = e
                else:
                    e2 = list(e)
                    e2[ia] -= 1
                    e2[ib] += 1
                    e2 = tuple(e2)
                out[e2] = out.get(e2, Fraction(0)) - c * ea * m
    return Polynomial(ring, out)


def act_elementary(ring: RingSpec, block: int, a: int, b: int, f: Polynomial) -> Polynomial:
    """act(E_ab in the given block, f) = -x_b * df/dx_a without building matrices."""
    off = ring.block_offsets[block]
    ia, ib = off + a, off + b
    out: dict = {}
    for e, c in f.terms.items():
        ea = e[ia]
        if not ea:
            continue
        if ia == ib:
            e2 = e
        else:
            e2 = list(e)
            e2[ia] -= 1
            e2[ib] += 1
            e2 = tuple(e2)
        out[e2] = out.get(e2, Fraction(0)) - c * ea
    return Polynomial(ring, out)


def sl2_in_sld(d: int) -> tuple[Matrix, Matrix, Matrix]:
    """The sl2 triple (E, F, H) on Sym^d of the standard representation.

    Coordinates x_i correspond to the monomials u^(d-i) v^i, so the derivations
    act(E), act(F), act(H) are -v d/du, -u d/dv and -(u d/du - v d/dv).  Hence
    the rational normal curve [u^d : ... : v^d] is preserved, H = diag(d, d-2, ..., -d),
    and d = 1 gives the standard triple.
    """
    if d < 1:
        raise LieError("need d >= 1")
    n = d + 1
    E = [[0] * n for _ in range(n)]
    F = [[0] * n for _ in range(n)]
    for i in range(d):
        E[i][i + 1] = d - i
        F[i + 1][i] = i + 1
    H = Matrix.diag([d - 2 * i for i in range(n)])
    return Matrix.from_rows(E), Matrix.from_rows(F), H
