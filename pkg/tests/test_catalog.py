from fractions import Fraction

import pytest
import sympy
from hypothesis import given, settings, strategies as st

from fanoaut import catalog
from fanoaut.lieclassify import expected_signature
from fanoaut.polyring import Polynomial, RingSpec, graded_piece_dimension
from fanoaut.sl2rep import invariant_vectors

Y = RingSpec.of(["y0", "y1", "y2"])
UV = RingSpec.of(["u", "v"])
u, v = UV.gens()


def test_roster_and_errors():
    names = catalog.roster()
    assert "twisted_cubic" in names and "twisted_quartic_pencil" in names
    with pytest.raises(catalog.CatalogError):
        catalog.build("no_such_case")
    with pytest.raises(catalog.CatalogError):
        catalog.build("twisted_cubic", {"lambda": 2})
    with pytest.raises(catalog.CatalogError):
        catalog.build("twisted_quartic_pencil")
    for bad in (0, 1):
        with pytest.raises(catalog.CatalogError):
            catalog.build("twisted_quartic_pencil", {"lambda": bad})
    assert catalog.build("twisted_quartic_pencil", {"λ": Fraction(2)}).params == {"lambda": 2}


@pytest.mark.parametrize("name,params", catalog.default_grid())
def test_expected_dims_consistent(name, params):
    case = catalog.build(name, params)
    assert expected_signature(case.expected).dim == case.expected_dim


def test_error_reported_not_raised():
    r = catalog.verify("no_such_case")
    assert not r.ok and "unknown case" in r.error


def _conic_param():
    # x0^2 = x1*x2 parametrized by (uv, u^2, v^2)
    return [u * v, u ** 2, v ** 2]


def test_bitangent_conics_meet_in_two_double_points():
    restricted = catalog.P2.parse("x0^2 - 2*x1*x2").substitute(_conic_param(), UV)
    assert restricted == -(u ** 2 * v ** 2)


def test_osculating_conics_meet_in_one_quadruple_point():
    restricted = catalog.P2.parse("x1*x2 - x0^2 + x2^2").substitute(_conic_param(), UV)
    assert restricted == v ** 4


def test_rational_quartic_model():
    case = catalog.build("v5_conic_model")
    (I,) = case.ideals
    param = [u ** 4, u ** 3 * v, u * v ** 3, v ** 4]
    assert all(f.substitute(param, UV).is_zero() for f in I.generators)
    assert graded_piece_dimension(I, (2,)) == 1
    assert graded_piece_dimension(I, (3,)) == 7


def test_twisted_quartic_lies_on_every_quadric_of_the_pencil():
    param = [u ** (4 - i) * v ** i for i in range(5)]
    for lam in catalog.LAMBDA_GRID:
        case = catalog.build("twisted_quartic_pencil", {"lambda": lam})
        q = case.ideals[1].generators[0]
        assert q.substitute(param, UV).is_zero()


def _diag_generator(name, params=None):
    alg = catalog.compute(catalog.build(name, params))
    assert alg.dim == 1
    M = alg.basis[0].matrix()
    n = M.nrows
    assert all(M[i, j] == 0 for i in range(n) for j in range(n) if i != j)
    return [M[i, i] for i in range(n)]


def _proportional(a, b):
    return sympy.Matrix([a, b]).rank() <= 1


def test_line_model_weights():
    d = _diag_generator("v5_line_model")
    # torus weights (0, 2, 4, 6, 3) on x, y, z, t, w up to the trace shift
    assert _proportional([x - d[0] for x in d], [0, 2, 4, 6, 3])


def test_generic_quartic_pencil_generator():
    assert _proportional(_diag_generator("twisted_quartic_pencil", {"lambda": Fraction(2)}), [-2, -1, 0, 1, 2])


def test_special_lambda_is_the_invariant_quadric():
    (q,) = invariant_vectors(4, 2, catalog.XYZTW)
    pencil = catalog.build("twisted_quartic_pencil", {"lambda": Fraction(-1, 3)}).ideals[1].generators[0]
    assert q.scale_monic() == pencil.scale_monic()


def test_discriminant_three_lines():
    qs = [Y.parse(s) for s in ("y0^2", "y1^2", "y2^2")]
    cubic = catalog.discriminant_cubic(qs)
    assert cubic == catalog.DISC_RING.parse("x0*x1*x2")
    info = catalog.analyze_discriminant(cubic)
    assert [f["line"] for f in info["line_factors"]] == ["x0", "x1", "x2"]


def test_discriminant_line_and_smooth_conic():
    qs = [Y.parse(s) for s in ("y0^2 - y1*y2", "y1^2", "y2^2")]
    cubic = catalog.discriminant_cubic(qs)
    assert cubic == catalog.DISC_RING.parse("x0*x1*x2 - 1/4*x0^3")
    info = catalog.analyze_discriminant(cubic)
    assert info["line_factors"][0]["line"] == "x0"
    assert info["line_factors"][0]["residual_rank"] == 3


def test_degenerate_pencil():
    qs = [Y.parse(s) for s in ("y0^2", "2*y0^2", "y0^2")]
    assert catalog.discriminant_cubic(qs).is_zero()
    assert catalog.analyze_discriminant(catalog.discriminant_cubic(qs))["degenerate"]


def test_conic_rank():
    assert catalog.conic_rank(Y.parse("y1*y2")) == 2
    assert catalog.conic_rank(Y.parse("(y0 + y1)^2")) == 1


def test_bidegree12_models_have_the_expected_discriminants():
    # a (1,2) divisor x0*q0 + x1*q1 + x2*q2 has discriminant det(sum x_i Gram(q_i))
    for name, lines, rank3 in [("bidegree12_toric", 3, None), ("bidegree12_line_conic", 1, 3)]:
        f = catalog.build(name).ideals[0].generators[0]
        qs = []
        for i in range(3):
            part = {e[3:]: c for e, c in f.terms.items() if e[i] == 1}
            qs.append(Polynomial(Y, part))
        info = catalog.analyze_discriminant(catalog.discriminant_cubic(qs))
        assert len(info["line_factors"]) == lines
        if rank3:
            assert info["line_factors"][0]["residual_rank"] == rank3


@settings(max_examples=100, deadline=None)
@given(st.lists(st.lists(st.integers(-3, 3), min_size=6, max_size=6), min_size=3, max_size=3))
def test_discriminant_against_sympy(coeffs):
    mons = ["y0^2", "y0*y1", "y0*y2", "y1^2", "y1*y2", "y2^2"]
    qs = [sum((Y.parse(m) * c for m, c in zip(mons, cs)), Y.zero()) for cs in coeffs]
    x = sympy.symbols("x0 x1 x2")
    ys = sympy.symbols("y0 y1 y2")
    form = sum(xi * sum(c * sympy.sympify(m.replace("^", "**"), locals=dict(zip(["y0", "y1", "y2"], ys)))
                        for m, c in zip(mons, cs)) for xi, cs in zip(x, coeffs))
    ref = sympy.expand(sympy.hessian(form, ys).det() / 8)
    mine = catalog.discriminant_cubic(qs)
    mine_sym = sum(sympy.Rational(c.numerator, c.denominator) * sympy.prod(xi ** k for xi, k in zip(x, e))
                   for e, c in mine.terms.items())
    assert sympy.expand(mine_sym - ref) == 0
