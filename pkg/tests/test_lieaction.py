from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from fanoaut.exactmath import Matrix
from fanoaut.lieaction import AlgElement, AmbientAlgebra, LieError, act, act_elementary, bracket, sl2_in_sld
from fanoaut.polyring import Polynomial, RingSpec

R = RingSpec.projective(1, 2)
AMB = AmbientAlgebra(R)
coef = st.fractions(min_value=-4, max_value=4, max_denominator=3)


def elements(amb=AMB):
    return st.lists(coef, min_size=amb.dim, max_size=amb.dim).map(
        lambda cs: sum((b.scale(c) for c, b in zip(cs, amb.basis())), amb.zero()))


def forms(ring=R, degree=(1, 2)):
    from fanoaut.polyring import graded_monomial_exponents
    exps = graded_monomial_exponents(ring, degree)
    return st.lists(coef, min_size=len(exps), max_size=len(exps)).map(
        lambda cs: Polynomial(ring, {e: c for e, c in zip(exps, cs) if c}))


def test_ambient_dimension_and_basis():
    assert AMB.dim == 3 + 8
    assert len(AMB.basis()) == AMB.dim
    assert all(AMB.contains(b) for b in AMB.basis())


def test_elementary_action_is_minus_xb_dxa():
    f = R.parse("x0^2*y1 + x0*x1*y2")
    for a in range(3):
        for b in range(3):
            X = AMB.embed(1, Matrix.unit(3, a, b))
            assert act(X, f) == act_elementary(R, 1, a, b, f)
            assert act(X, f) == -(R.var(f"y{b}") * f.derivative(2 + a))


def test_block_mismatch_rejected():
    with pytest.raises(LieError):
        act(AlgElement.of(Matrix.zero(2)), R.parse("x0*y0"))


@pytest.mark.parametrize("d", [1, 2, 3, 4, 5])
def test_sl2_triple_relations(d):
    E, F, H = sl2_in_sld(d)
    assert E.commutator(F) == H
    assert H.commutator(E) == E.scale(2)
    assert H.commutator(F) == F.scale(-2)


def test_sl2_triple_is_the_binary_form_action():
    # x_i <-> u^(d-i) v^i; E, F, H act as -v d/du, -u d/dv, -(u d/du - v d/dv)
    d = 4
    P4 = RingSpec.projective(d)
    B = RingSpec.of(["u", "v"])
    u, v = B.gens()
    param = [u ** (d - i) * v ** i for i in range(d + 1)]
    f = P4.parse("x0*x4 - 3*x1*x3 + 2*x2^2 + x0*x1 - 5*x3^2")
    g = f.substitute(param, B)
    E, F, H = (AlgElement.of(M) for M in sl2_in_sld(d))
    assert act(E, f).substitute(param, B) == -(v * g.derivative(0))
    assert act(F, f).substitute(param, B) == -(u * g.derivative(1))
    assert act(H, f).substitute(param, B) == -(u * g.derivative(0) - v * g.derivative(1))


@settings(max_examples=100, deadline=None)
@given(elements(), forms(), forms(R, (1, 0)))
def test_leibniz(X, f, g):
    assert act(X, f * g) == act(X, f) * g + f * act(X, g)


@settings(max_examples=100, deadline=None)
@given(elements(), elements(), forms())
def test_bracket_is_represented(X, Y, f):
    assert act(bracket(X, Y), f) == act(X, act(Y, f)) - act(Y, act(X, f))


@settings(max_examples=100, deadline=None)
@given(elements(), elements(), elements())
def test_jacobi(X, Y, Z):
    total = bracket(X, bracket(Y, Z)) + bracket(Y, bracket(Z, X)) + bracket(Z, bracket(X, Y))
    assert total.is_zero()
