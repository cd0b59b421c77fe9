"""Lie algebra of the stabilizer of one or several multigraded ideals."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from .exactmath import Matrix, kernel_basis, reduce_against, row_space
from .lieaction import AlgElement, AmbientAlgebra, bracket, act_elementary
from .polyring import Ideal, Polynomial, RingSpec, ideal_graded_basis, monomial_index


class ClosureError(ArithmeticError):
    """The computed subspace is not closed under the bracket."""


@dataclass
class Subalgebra:
    ambient: AmbientAlgebra
    basis: list
    structure_constants: list = field(default_factory=list)  # c[i][j] = coords of [b_i, b_j]

    @property
    def dim(self) -> int:
        return len(self.basis)

    def __post_init__(self):
        n = sum(b * b for b in self.ambient.sizes)
        self._n = n
        if self.basis:
            red, piv = row_space([b.vector() for b in self.basis], n)
            if len(piv) != len(self.basis):
                raise ValueError("basis is linearly dependent")
            # coordinates are read off the pivot columns of the basis vectors
            sq = Matrix.from_rows([[b.vector()[p] for p in piv] for b in self.basis])
            self._piv = piv
            self._inv = sq.inverse()
        if not self.structure_constants:
            self.structure_constants = self._structure_constants()

    def coordinates(self, X: AlgElement) -> list[Fraction] | None:
        """Coordinates of X in the basis, or None if X lies outside the span."""
        if not self.basis:
            return [] if X.is_zero() else None
        v = X.vector()
        row = [v[p] for p in self._piv]
        coords = [sum((row[k] * self._inv[k, j] for k in range(len(row))), Fraction(0)) for j in range(self.dim)]
        back = [Fraction(0)] * self._n
        for c, b in zip(coords, self.basis):
            if c:
                back = [x + c * y for x, y in zip(back, b.vector())]
        return coords if back == v else None

    def element(self, coords: Sequence[Fraction]) -> AlgElement:
        out = self.ambient.zero()
        for c, b in zip(coords, self.basis):
            if c:
                out = out + b.scale(c)
        return out

    def _structure_constants(self) -> list:
        n = self.dim
        c = [[None] * n for _ in range(n)]
        for i in range(n):
            c[i][i] = [Fraction(0)] * n
            for j in range(i + 1, n):
                br = bracket(self.basis[i], self.basis[j])
                coords = self.coordinates(br)
                if coords is None:
                    raise ClosureError(f"[b{i}, b{j}] = {br} leaves the subspace")
                c[i][j] = coords
                c[j][i] = [-x for x in coords]
        return c

    def is_closed(self) -> bool:
        # construction already raised otherwise
        return True


def _generator_rows(I: Ideal, f: Polynomial, ambient: AmbientAlgebra) -> list[list[Fraction]]:
    """Rows (one per non-pivot monomial of I_d) of the linear condition act(X, f) in I_d."""
    ring = I.ring
    d = f.multidegree()
    red, piv = ideal_graded_basis(I, d)
    idx = monomial_index(ring, d)
    nmon = len(idx)
    cols = []
    for k, n in enumerate(ambient.sizes):
        acts = {}
        for a in range(n):
            for b in range(n):
                acts[a, b] = act_elementary(ring, k, a, b, f)
        images = [acts[a, b] for a in range(n) for b in range(n) if a != b]
        images += [acts[i, i] - acts[i + 1, i + 1] for i in range(n - 1)]
        for img in images:
            cols.append(reduce_against(img.coords(d), red, piv))
    pivset = set(piv)
    return [[col[m] for col in cols] for m in range(nmon) if m not in pivset]


def _solve(ring: RingSpec, ideals: Sequence[Ideal]) -> Subalgebra:
    ambient = AmbientAlgebra(ring)
    system = []
    for I in ideals:
        if I.ring != ring:
            raise ValueError("ideals live in different rings")
        for f in I.generators:
            system.extend(r for r in _generator_rows(I, f, ambient) if any(r))
    basis_elems = ambient.basis()
    if system:
        kernel = kernel_basis(system)
    else:
        kernel = [[Fraction(int(i == j)) for j in range(ambient.dim)] for i in range(ambient.dim)]
    elems = []
    for v in kernel:
        X = ambient.zero()
        for c, b in zip(v, basis_elems):
            if c:
                X = X + b.scale(c)
        elems.append(X)
    return Subalgebra(ambient, elems)


def stabilizer(I: Ideal) -> Subalgebra:
    """{X : act(X, f) in I for every generator f of I}."""
    return _solve(I.ring, [I])


def joint_stabilizer(ideals: Sequence[Ideal], ring: RingSpec | None = None) -> Subalgebra:
    """Intersection of the stabilizers of several ideals in one ring."""
    if not ideals and ring is None:
        raise ValueError("need a ring when no ideals are given")
    ring = ring or ideals[0].ring
    return _solve(ring, list(ideals))


def preserves(X: AlgElement, I: Ideal) -> bool:
    """Independent check that X maps every generator of I into I."""
    from .polyring import contains
    from .lieaction import act

    return all(contains(I, act(X, f)) for f in I.generators)
