"""Named geometric configurations whose stabilizer algebras are known.

Each case builds a list of ideals in a product of projective spaces,
computes the joint stabilizer and compares its signature with a group
expression.  The family database points at these cases by name.
"""

from __future__ import annotations

import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Optional

from .exactmath import Matrix, rank
from .lieclassify import GroupExpr, LieSignature, match, parse_group, signature
from .polyring import Ideal, Polynomial, RingSpec, divide_exact
from .sl2rep import rational_normal_curve_ideal
from .stabilizer import Subalgebra, joint_stabilizer


class CatalogError(ValueError):
    pass


LAMBDA_GRID = tuple(Fraction(x) for x in ("-3", "-2", "-1", "-1/3", "1/2", "2", "3"))
BIDEGREE_GRID = (0, 1, 2, 3, 4)


@dataclass
class ModelCase:
    name: str
    description: str
    ring: RingSpec
    ideals: list
    expected: GroupExpr
    expected_dim: int
    expected_jordan: Optional[str] = None
    params: dict = field(default_factory=dict)

    def label(self) -> str:
        if not self.params:
            return self.name
        return self.name + "(" + ", ".join(f"{k}={v}" for k, v in self.params.items()) + ")"


@dataclass
class CaseResult:
    label: str
    ok: bool
    dim: Optional[int]
    expected_dim: int
    expected: str
    computed: Optional[LieSignature]
    report: str
    jordan: Optional[str]
    seconds: float
    error: Optional[str] = None

    def as_dict(self) -> dict:
        return {
            "case": self.label,
            "ok": self.ok,
            "dim": self.dim,
            "expected_dim": self.expected_dim,
            "expected": self.expected,
            "signature": self.computed.as_dict() if self.computed else None,
            "report": self.report,
            "jordan": self.jordan,
            "seconds": round(self.seconds, 4),
            "error": self.error,
        }


def _ideal(ring: RingSpec, *gens: str) -> Ideal:
    return Ideal.of(ring, gens)


P2 = RingSpec.projective(2)
P3 = RingSpec.projective(3)
P4 = RingSpec.projective(4)
P5 = RingSpec.projective(5)
P6 = RingSpec.of(["s00", "s01", "s02", "s11", "s12", "s22", "w"])
P2xP2 = RingSpec.projective(2, 2)
P1xP1 = RingSpec.projective(1, 1)
P1xP2 = RingSpec.projective(1, 2)
P1xP1xP1 = RingSpec.projective(1, 1, 1)
XYZTW = RingSpec.of(list("xyztw"))
XYZT = RingSpec.of(list("xyzt"))

SMOOTH_QUADRIC_4 = "x0*x1 + x2^2 + x3^2 + x4^2"
# a quadric whose plane section x0 = x1 = 0 is a conic with rational points
SPLIT_QUADRIC_4 = "x0*x1 + x2*x4 + x3^2"


def _veronese_minors() -> list[str]:
    s = [["s00", "s01", "s02"], ["s01", "s11", "s12"], ["s02", "s12", "s22"]]
    out = []
    for r in [(0, 1), (0, 2), (1, 2)]:
        for c in [(0, 1), (0, 2), (1, 2)]:
            if r <= c:
                out.append(f"{s[r[0]][c[0]]}*{s[r[1]][c[1]]} - {s[r[0]][c[1]]}*{s[r[1]][c[0]]}")
    return out


def _case(name, description, ring, ideals, expected, dim, jordan=None):
    return lambda: ModelCase(name, description, ring, ideals, parse_group(expected), dim, jordan)


_FIXED: dict[str, Callable[[], ModelCase]] = {
    # linear configurations in P3
    "twisted_cubic": _case("twisted_cubic", "twisted cubic in P3", P3,
                           [rational_normal_curve_ideal(3, P3)], "PGL(2)", 3),
    "plane_cubic": _case("plane_cubic", "smooth plane cubic in P3", P3,
                         [_ideal(P3, "x0", "x1^3 + x2^3 + x3^3")], "Ga^3 : Gm", 4),
    "nodal_cubic_plane": _case("nodal_cubic_plane", "nodal cubic in P2", P2,
                               [_ideal(P2, "x1^2*x2 - x0^2*(x0 + x2)")], "1", 0),
    # isomorphic to PGL(4;3) by duality
    "hyperplane_P3": _case("hyperplane_P3", "plane in P3", P3, [_ideal(P3, "x0")], "PGL(4;1)", 12),
    "line_P3": _case("line_P3", "line in P3", P3, [_ideal(P3, "x0", "x1")], "PGL(4;2)", 11),
    "point_line_flag": _case("point_line_flag", "point on a line in P3", P3,
                             [_ideal(P3, "x2", "x3"), _ideal(P3, "x1", "x2", "x3")], "PGL(4;2,1)", 10),
    "point_plane_flag": _case("point_plane_flag", "point on a plane in P3", P3,
                              [_ideal(P3, "x3"), _ideal(P3, "x1", "x2", "x3")], "PGL(4;3,1)", 10),
    "two_skew_lines": _case("two_skew_lines", "two disjoint lines in P3", P3,
                            [_ideal(P3, "x0", "x1"), _ideal(P3, "x2", "x3")], "PGL22", 7),
    # quadric configurations
    "conic_on_quadric": _case("conic_on_quadric", "conic on a smooth quadric threefold", P4,
                              [_ideal(P4, SMOOTH_QUADRIC_4), _ideal(P4, "x0", "x1", "x2^2 + x3^2 + x4^2")],
                              "PGL(2) x Gm", 4),
    "quadric_point_P4": _case("quadric_point_P4", "point on a smooth quadric threefold", P4,
                              [_ideal(P4, SMOOTH_QUADRIC_4), _ideal(P4, "x1", "x2", "x3", "x4")],
                              "PSO(5;1)", 7),
    "quadric_point_P5": _case("quadric_point_P5", "point on a smooth quadric fourfold", P5,
                              [_ideal(P5, "x0*x1 + x2^2 + x3^2 + x4^2 + x5^2"),
                               _ideal(P5, "x1", "x2", "x3", "x4", "x5")],
                              "PSO(6;1)", 11),
    # conic pairs in P2
    "two_conics_bitangent": _case("two_conics_bitangent", "two conics tangent at two points", P2,
                                  [_ideal(P2, "(x0^2 - x1*x2)*(x0^2 - 2*x1*x2)")], "Gm", 1, "semisimple"),
    "two_conics_osculating": _case("two_conics_osculating", "two conics meeting at one point with multiplicity 4",
                                   P2, [_ideal(P2, "(x1*x2 - x0^2)*(x1*x2 - x0^2 + x2^2)")], "Ga", 1,
                                   "nilpotent"),
    # V5 models
    "v5_line_model": _case("v5_line_model", "quadric cone section containing a twisted cubic", XYZTW,
                           [_ideal(XYZTW, "x*t - y*z + w^2"),
                            _ideal(XYZTW, "w", "x*z - y^2", "y*t - z^2", "x*t - y*z")],
                           "Gm", 1, "semisimple"),
    "v5_conic_model": _case("v5_conic_model", "smooth rational quartic curve in P3", XYZT,
                            [_ideal(XYZT, "x*t - y*z", "y^3 - x^2*z", "z^3 - y*t^2", "y^2*t - x*z^2")],
                            "Gm", 1, "semisimple"),
    # (1,2) divisors in P2 x P2
    "bidegree12_line_conic": _case("bidegree12_line_conic", "(1,2) divisor with discriminant a line plus a conic",
                                   P2xP2, [_ideal(P2xP2, "x0*(y0^2 - y1*y2) + x1*y1^2 + x2*y2^2")], "Gm", 1,
                                   "semisimple"),
    "bidegree12_toric": _case("bidegree12_toric", "(1,2) divisor with discriminant three lines", P2xP2,
                              [_ideal(P2xP2, "x0*y0^2 + x1*y1^2 + x2*y2^2")], "Gm^2", 2, "semisimple"),
    "flag_diagonal_conics": _case("flag_diagonal_conics", "flag divisor with a conic and its dual conic", P2xP2,
                                  [_ideal(P2xP2, "x0*y0 + x1*y1 + x2*y2"), _ideal(P2xP2, "x0*x2 - x1^2"),
                                   _ideal(P2xP2, "4*y0*y2 - y1^2")], "PGL(2)", 3),
    "veronese_cone": _case("veronese_cone", "cone over the Veronese surface in P6", P6,
                           [_ideal(P6, *_veronese_minors())], "AutP1112", 15),
    # further configurations read off from the family descriptions
    "P3": _case("P3", "projective space P3", P3, [], "PGL(4)", 15),
    "point_P3": _case("point_P3", "point in P3", P3, [_ideal(P3, "x1", "x2", "x3")], "PGL(4;1)", 12),
    "smooth_quadric_P4": _case("smooth_quadric_P4", "smooth quadric threefold", P4, [_ideal(P4, SMOOTH_QUADRIC_4)],
                               "PSO(5)", 10),
    "quadric_line_P4": _case("quadric_line_P4", "line on a smooth quadric threefold", P4,
                             [_ideal(P4, "x0*x1 + x2*x3 + x4^2"), _ideal(P4, "x1", "x3", "x4")], "PSO(5;2)", 7),
    "flag_variety": _case("flag_variety", "(1,1) divisor in P2 x P2", P2xP2,
                          [_ideal(P2xP2, "x0*y0 + x1*y1 + x2*y2")], "PGL(3)", 8),
    "P1xP2": _case("P1xP2", "P1 x P2", P1xP2, [], "PGL(2) x PGL(3)", 11),
    "P1xP1xP1": _case("P1xP1xP1", "P1 x P1 x P1", P1xP1xP1, [], "PGL(2) x PGL(2) x PGL(2)", 9),
    "plane_cubic_point": _case("plane_cubic_point", "plane cubic and a point off its plane", P3,
                               [_ideal(P3, "x0", "x1^3 + x2^3 + x3^3"), _ideal(P3, "x1", "x2", "x3")], "Gm", 1,
                               "semisimple"),
    "three_skew_lines": _case("three_skew_lines", "three disjoint lines in P3", P3,
                              [_ideal(P3, "x0", "x1"), _ideal(P3, "x2", "x3"), _ideal(P3, "x0 - x2", "x1 - x3")],
                              "PGL(2)", 3),
    "two_skew_lines_point": _case("two_skew_lines_point", "two disjoint lines and a point on one", P3,
                                  [_ideal(P3, "x0", "x1"), _ideal(P3, "x2", "x3"), _ideal(P3, "x1", "x2", "x3")],
                                  "PGL22_1", 6),
    "two_skew_lines_two_points": _case("two_skew_lines_two_points", "two disjoint lines and two points on one",
                                       P3, [_ideal(P3, "x0", "x1"), _ideal(P3, "x2", "x3"),
                                            _ideal(P3, "x1", "x2", "x3"), _ideal(P3, "x0", "x2", "x3")],
                                       "Gm x GL(2)", 5),
    "line_point": _case("line_point", "line and a point off it", P3,
                        [_ideal(P3, "x0", "x1"), _ideal(P3, "x1", "x2", "x3")], "Ga^3 : (GL(2) x Gm)", 8),
    "line_two_points": _case("line_two_points", "line and two points on it", P3,
                             [_ideal(P3, "x2", "x3"), _ideal(P3, "x1", "x2", "x3"), _ideal(P3, "x0", "x2", "x3")],
                             "Ga^4 : (GL(2) x Gm)", 9),
    "twisted_cubic_point": _case("twisted_cubic_point", "twisted cubic and a point on it", P3,
                                 [rational_normal_curve_ideal(3, P3), _ideal(P3, "x1", "x2", "x3")], "B", 2),
    "conic_point_P3": _case("conic_point_P3", "conic and a point on it in P3", P3,
                            [_ideal(P3, "x3", "x0*x2 - x1^2"), _ideal(P3, "x1", "x2", "x3")],
                            "Ga^3 : (B x Gm)", 6),
    "quadric_conic_point": _case("quadric_conic_point", "conic and a point on it on a quadric threefold", P4,
                                 [_ideal(P4, SPLIT_QUADRIC_4), _ideal(P4, "x0", "x1", "x2*x4 + x3^2"),
                                  _ideal(P4, "x0", "x1", "x3", "x4")], "B x Gm", 3),
    "quadric_two_points": _case("quadric_two_points", "two points on a quadric threefold not on a line in it", P4,
                                [_ideal(P4, SMOOTH_QUADRIC_4), _ideal(P4, "x1", "x2", "x3", "x4"),
                                 _ideal(P4, "x0", "x2", "x3", "x4")], "Gm x PGL(2)", 4),
    "quadric_two_lines": _case("quadric_two_lines", "two disjoint lines on a quadric threefold", P4,
                               [_ideal(P4, "x0*x3 - x1*x2 + x4^2"), _ideal(P4, "x0", "x1", "x4"),
                                _ideal(P4, "x2", "x3", "x4")], "Gm x PGL(2)", 4),
    "quadric_conic_line": _case("quadric_conic_line", "disjoint conic and line on a quadric threefold", P4,
                                [_ideal(P4, SPLIT_QUADRIC_4), _ideal(P4, "x0", "x1", "x2*x4 + x3^2"),
                                 _ideal(P4, "x3", "x2 - x0", "x4 + x1")], "Gm", 1, "semisimple"),
    "quadric_conic_two_points": _case("quadric_conic_two_points", "conic and two points on it on a quadric", P4,
                                      [_ideal(P4, SPLIT_QUADRIC_4), _ideal(P4, "x0", "x1", "x2*x4 + x3^2"),
                                       _ideal(P4, "x0", "x1", "x3", "x4"), _ideal(P4, "x0", "x1", "x2", "x3")],
                                      "Gm^2", 2, "semisimple"),
    "quadric_conic_three_points": _case("quadric_conic_three_points", "conic and three points on it on a quadric",
                                        P4, [_ideal(P4, SPLIT_QUADRIC_4), _ideal(P4, "x0", "x1", "x2*x4 + x3^2"),
                                             _ideal(P4, "x0", "x1", "x3", "x4"), _ideal(P4, "x0", "x1", "x2", "x3"),
                                             _ideal(P4, "x0", "x1", "x3 - x2", "x4 + x2")], "Gm", 1, "semisimple"),
    "p1xp2_conic_graph": _case("p1xp2_conic_graph", "(1,2) curve in P1 x P2 mapping onto a conic", P1xP2,
                               [_ideal(P1xP2, "y0*y2 - y1^2"), _ideal(P1xP2, "x0*y1 - x1*y0", "x0*y2 - x1*y1")],
                               "PGL(2)", 3),
}


def _twisted_quartic_pencil(lam) -> ModelCase:
    lam = Fraction(lam)
    if lam in (0, 1):
        raise CatalogError("lambda must avoid 0 and 1: the quadric is then singular along the curve")
    q = Polynomial.from_dict(XYZTW, {(0, 0, 2, 0, 0): 1, (1, 0, 0, 0, 1): -lam, (0, 1, 0, 1, 0): lam - 1})
    ideals = [rational_normal_curve_ideal(4, XYZTW), Ideal.of(XYZTW, [q])]
    special = lam == Fraction(-1, 3)
    return ModelCase("twisted_quartic_pencil", "rational normal quartic on a quadric of the pencil", XYZTW, ideals,
                     parse_group("PGL(2)" if special else "Gm"), 3 if special else 1,
                     None if special else "semisimple", {"lambda": lam})


def _bidegree_1n(n) -> ModelCase:
    n = int(n)
    if n < 0:
        raise CatalogError("n must be non-negative")
    f = P1xP1.parse(f"x0*y0^{n} + x1*y1^{n}")
    expected, dim, jordan = {0: ("B x PGL(2)", 5, None), 1: ("PGL(2)", 3, None)}.get(n, ("Gm", 1, "semisimple"))
    return ModelCase("bidegree_1n", "divisor x0*y0^n + x1*y1^n in P1 x P1", P1xP1, [Ideal.of(P1xP1, [f])],
                     parse_group(expected), dim, jordan, {"n": n})


_PARAMETRIC = {
    "twisted_quartic_pencil": ("lambda", _twisted_quartic_pencil),
    "bidegree_1n": ("n", _bidegree_1n),
}


def roster() -> list[str]:
    return sorted(_FIXED) + sorted(_PARAMETRIC)


def build(name: str, params: dict | None = None) -> ModelCase:
    params = dict(params or {})
    if name in _FIXED:
        if params:
            raise CatalogError(f"case {name} takes no parameters")
        return _FIXED[name]()
    if name in _PARAMETRIC:
        key, fn = _PARAMETRIC[name]
        aliases = {key, "λ"} if key == "lambda" else {key}
        vals = [v for k, v in params.items() if k in aliases]
        unknown = [k for k in params if k not in aliases]
        if unknown or len(vals) != 1:
            raise CatalogError(f"case {name} needs exactly one parameter {key}")
        return fn(vals[0])
    raise CatalogError(f"unknown case {name!r}; known: {', '.join(roster())}")


def default_grid() -> list[tuple[str, dict]]:
    out = [(name, {}) for name in sorted(_FIXED)]
    out += [("twisted_quartic_pencil", {"lambda": lam}) for lam in LAMBDA_GRID]
    out += [("bidegree_1n", {"n": n}) for n in BIDEGREE_GRID]
    return out


def compute(case: ModelCase) -> Subalgebra:
    return joint_stabilizer(case.ideals, ring=case.ring)


def verify(name: str, params: dict | None = None) -> CaseResult:
    t0 = time.perf_counter()
    label = name
    try:
        case = build(name, params)
        label = case.label()
        alg = compute(case)
        sig = signature(alg)
        rep = match(sig, case.expected)
        jordan = None
        ok = rep.ok and alg.dim == case.expected_dim
        if case.expected_jordan is not None:
            types = {b.jordan_type() for b in alg.basis}
            jordan = ",".join(sorted(types))
            ok = ok and types == {case.expected_jordan}
        return CaseResult(label, ok, alg.dim, case.expected_dim, str(case.expected), sig, str(rep), jordan,
                          time.perf_counter() - t0)
    except Exception as exc:  # reported per case, the run continues
        return CaseResult(label, False, None, -1, "", None, "", None, time.perf_counter() - t0,
                          f"{type(exc).__name__}: {exc}")


def _verify_args(args):
    return verify(*args)


def verify_all(grid: list[tuple[str, dict]] | None = None, jobs: int = 1) -> list[CaseResult]:
    grid = default_grid() if grid is None else grid
    if jobs <= 1:
        return [verify(n, p) for n, p in grid]
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        return list(pool.map(_verify_args, grid))


# --- conic bundle discriminants --------------------------------------------

def gram_matrix(q: Polynomial) -> Matrix:
    """Symmetric matrix of a ternary quadratic form; off-diagonal entries are half the mixed coefficients."""
    ring = q.ring
    if ring.nvars != 3 or (not q.is_zero() and sum(q.multidegree()) != 2):
        raise CatalogError("expected a quadratic form in three variables")
    G = [[Fraction(0)] * 3 for _ in range(3)]
    for e, c in q.terms.items():
        idx = [i for i, k in enumerate(e) for _ in range(k)]
        i, j = idx
        if i == j:
            G[i][i] += c
        else:
            G[i][j] += c / 2
            G[j][i] += c / 2
    return Matrix.from_rows(G)


def _det3(M: list[list[Polynomial]]) -> Polynomial:
    return (M[0][0] * (M[1][1] * M[2][2] - M[1][2] * M[2][1])
            - M[0][1] * (M[1][0] * M[2][2] - M[1][2] * M[2][0])
            + M[0][2] * (M[1][0] * M[2][1] - M[1][1] * M[2][0]))


DISC_RING = RingSpec.of(["x0", "x1", "x2"])


def discriminant_cubic(quadrics: list[Polynomial], ring: RingSpec = DISC_RING) -> Polynomial:
    """det(x0*M0 + x1*M1 + x2*M2) for the Gram matrices M_i of three ternary quadrics."""
    if len(quadrics) != 3:
        raise CatalogError("need exactly three quadrics")
    grams = [gram_matrix(q) for q in quadrics]
    xs = ring.gens()
    M = [[sum((x * G[i, j] for x, G in zip(xs, grams)), ring.zero()) for j in range(3)] for i in range(3)]
    return _det3(M)


def linear_factor_divides(line: Polynomial, cubic: Polynomial) -> bool:
    return divide_exact(cubic, line) is not None


def conic_rank(q: Polynomial) -> int:
    return rank(gram_matrix(q))


def analyze_discriminant(cubic: Polynomial) -> dict:
    """Coordinate-line factors of a plane cubic and the rank of the residual conic."""
    if cubic.is_zero():
        return {"cubic": "0", "degenerate": True, "line_factors": []}
    out = {"cubic": str(cubic), "degenerate": False, "line_factors": []}
    for x in cubic.ring.gens():
        quo = divide_exact(cubic, x)
        if quo is not None:
            out["line_factors"].append({"line": str(x), "residual": str(quo), "residual_rank": conic_rank(quo)})
    return out
