from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from fanoaut import catalog
from fanoaut.exactmath import Matrix, rank, same_span
from fanoaut.lieaction import AmbientAlgebra, bracket
from fanoaut.polyring import Ideal, Polynomial, RingSpec
from fanoaut.stabilizer import ClosureError, Subalgebra, joint_stabilizer, preserves, stabilizer

P2 = RingSpec.projective(2)
P1P1 = RingSpec.projective(1, 1)

SHAPES = {
    P2: [["x0"], ["x1", "x2"], ["x0*x2 - x1^2"], ["x1^2*x2 - x0^3"], ["x0*x1*x2"], ["x0*x2 - x1^2", "x0*x1"]],
    P1P1: [["x0*y0 + x1*y1"], ["x0*y0^2 + x1*y1^2"], ["x0"], ["x0*y1 - x1*y0", "y0"], ["x0*x1*y0"]],
}


def invertible(n):
    return st.lists(st.lists(st.integers(-3, 3), min_size=n, max_size=n), min_size=n, max_size=n).filter(
        lambda rows: rank(rows) == n).map(Matrix.from_rows)


def transformed(ring, ideal, gs):
    """The ideal {f(g^-1 x)}: its stabilizer is g * stab * g^-1."""
    images = []
    for k, g in enumerate(gs):
        gi = g.inverse()
        off = ring.block_offsets[k]
        xs = ring.gens()[off:off + g.nrows]
        images += [sum((xs[j] * gi[i, j] for j in range(g.nrows)), ring.zero()) for i in range(g.nrows)]
    return Ideal.of(ring, [f.substitute(images, ring) for f in ideal.generators])


def vectors(alg):
    return [b.vector() for b in alg.basis]


def test_whole_algebra_when_no_ideals():
    alg = joint_stabilizer([], ring=P2)
    assert alg.dim == 8


def test_conic_stabilizer_is_sl2():
    alg = stabilizer(Ideal.of(P2, ["x0*x2 - x1^2"]))
    assert alg.dim == 3
    assert all(preserves(b, Ideal.of(P2, ["x0*x2 - x1^2"])) for b in alg.basis)


def test_dependent_basis_rejected():
    amb = AmbientAlgebra(P2)
    b = amb.basis()[0]
    with pytest.raises(ValueError):
        Subalgebra(amb, [b, b.scale(2)])


def test_non_closed_span_rejected():
    amb = AmbientAlgebra(P2)
    E01 = amb.basis()[0]
    E10 = next(b for b in amb.basis() if b.blocks[0][1, 0] == 1)
    with pytest.raises(ClosureError):
        Subalgebra(amb, [E01, E10])


@pytest.mark.parametrize("name,params", catalog.default_grid())
def test_catalog_algebras_closed_and_preserving(name, params):
    case = catalog.build(name, params)
    alg = catalog.compute(case)
    # structure constants reproduce every bracket
    for i, a in enumerate(alg.basis):
        for j, b in enumerate(alg.basis):
            assert alg.element(alg.structure_constants[i][j]) == bracket(a, b)
    # every basis element preserves every ideal, checked by membership
    for I in case.ideals:
        assert all(preserves(b, I) for b in alg.basis)


@settings(max_examples=100, deadline=None)
@given(st.sampled_from(sorted(SHAPES, key=str)).flatmap(
    lambda ring: st.tuples(st.just(ring), st.sampled_from(SHAPES[ring]),
                           st.tuples(*[invertible(n) for n in ring.block_sizes]))))
def test_conjugation_equivariance(data):
    ring, gens, gs = data
    I = Ideal.of(ring, gens)
    base = stabilizer(I)
    moved = stabilizer(transformed(ring, I, gs))
    assert moved.dim == base.dim
    conj = [b.conjugate(gs).vector() for b in base.basis]
    n = sum(k * k for k in ring.block_sizes)
    assert same_span(conj, vectors(moved), n)


@settings(max_examples=100, deadline=None)
@given(st.lists(st.dictionaries(st.tuples(st.integers(0, 2), st.integers(0, 2)), st.integers(-3, 3).filter(bool),
                                min_size=1, max_size=3), min_size=1, max_size=2))
def test_random_ideals_give_closed_algebras(raw):
    # bidegree (2, 2) forms on P1 x P1 built from (a, b) = exponents of x0 and y0
    gens = [Polynomial(P1P1, {(a, 2 - a, b, 2 - b): Fraction(c) for (a, b), c in d.items()}) for d in raw]
    I = Ideal.of(P1P1, gens)
    alg = stabilizer(I)
    assert all(preserves(b, I) for b in alg.basis)
    for a in alg.basis:
        for b in alg.basis:
            assert alg.coordinates(bracket(a, b)) is not None
