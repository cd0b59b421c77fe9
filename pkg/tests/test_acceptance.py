"""One test per acceptance criterion; the terminal summary prints a PASS/FAIL line for each."""

import os
import shutil
import subprocess
import sys
import time
from fractions import Fraction
from pathlib import Path

import pytest

from fanoaut import catalog, fanodb
from fanoaut.lieclassify import signature
from fanoaut.sl2rep import decompose, invariant_vectors, parse_character

from lists import ALWAYS_INFINITE, H12_INFINITE, LEMMA_ONLY_SOMETIMES, NONREDUCTIVE, SOMETIMES_INFINITE

TESTS = Path(__file__).parent


def run_case(name, params=None):
    t0 = time.perf_counter()
    case = catalog.build(name, params)
    alg = catalog.compute(case)
    sig = signature(alg)
    return alg, sig, time.perf_counter() - t0


GOLDEN = [
    ("twisted_cubic", {"dim": 3, "killing_rank": 3}),
    ("plane_cubic", {"dim": 4, "unipotent_dim": 3}),
    # "toral 1" is the central torus: radical_dim - unipotent_dim; toral_rank counts the Levi torus too
    ("conic_on_quadric", {"dim": 4, "levi": ("A1",), "toral_center": 1, "toral_rank": 2}),
    ("hyperplane_P3", {"dim": 12}),
    ("line_P3", {"dim": 11}),
    ("two_skew_lines", {"dim": 7}),
    ("point_line_flag", {"dim": 10}),
    ("point_plane_flag", {"dim": 10}),
    ("quadric_point_P4", {"dim": 7}),
    ("quadric_point_P5", {"dim": 11}),
    ("veronese_cone", {"dim": 15}),
]


@pytest.mark.criterion(1, "stabilizer golden suite, each case under 2 s")
def test_criterion_1_golden_suite():
    for name, want in GOLDEN:
        _, sig, secs = run_case(name)
        got = {k: (sig.radical_dim - sig.unipotent_dim if k == "toral_center" else getattr(sig, k)) for k in want}
        assert got == want, name
        assert secs < 2.0, f"{name} took {secs:.2f}s"
        assert catalog.verify(name).ok, name


@pytest.mark.criterion(2, "twisted quartic pencil scan gives dims (1,1,1,3,1,1,1), semisimple at dim 1, under 10 s")
def test_criterion_2_lambda_scan():
    t0 = time.perf_counter()
    dims, kinds = [], []
    for lam in catalog.LAMBDA_GRID:
        alg, _, _ = run_case("twisted_quartic_pencil", {"lambda": lam})
        dims.append(alg.dim)
        if alg.dim == 1:
            kinds.append(alg.basis[0].jordan_type())
    assert time.perf_counter() - t0 < 10.0
    assert [Fraction(x) for x in ("-3", "-2", "-1", "-1/3", "1/2", "2", "3")] == list(catalog.LAMBDA_GRID)
    assert dims == [1, 1, 1, 3, 1, 1, 1]
    assert kinds == ["semisimple"] * 6


@pytest.mark.criterion(3, "bidegree (1,n) scan gives dims (5,3,1,1,1), semisimple for n >= 2")
def test_criterion_3_bidegree_scan():
    dims = []
    for n in range(5):
        alg, _, _ = run_case("bidegree_1n", {"n": n})
        dims.append(alg.dim)
        if n >= 2:
            assert alg.basis[0].jordan_type() == "semisimple"
    assert dims == [5, 3, 1, 1, 1]


@pytest.mark.criterion(4, "bitangent conic pair is semisimple dim 1, osculating pair is nilpotent dim 1")
def test_criterion_4_conic_pairs():
    alg, _, _ = run_case("two_conics_bitangent")
    assert alg.dim == 1 and alg.basis[0].jordan_type() == "semisimple"
    alg, _, _ = run_case("two_conics_osculating")
    assert alg.dim == 1 and alg.basis[0].jordan_type() == "nilpotent"


@pytest.mark.criterion(5, "Sym2(Sym4 U1) = U8+U4+U0; invariant quadric is z^2 + xw/3 - 4yt/3, matching the scan jump")
def test_criterion_5_representation_theory():
    parts = decompose(parse_character("sym(2, sym(4, U1))"))
    assert sorted(parts) == [0, 4, 8]
    assert sum(m + 1 for m in parts) == 15
    ring = catalog.XYZTW
    inv = invariant_vectors(4, 2, ring)
    assert len(inv) == 1
    q = inv[0] * (1 / inv[0].coefficient({"z": 2}))
    assert q == ring.parse("z^2 + 1/3*x*w - 4/3*y*t")
    # the pencil member is z^2 - lam*x*w + (lam - 1)*y*t, so the invariant one has lam = -coef(xw)
    lam_invariant = -q.coefficient({"x": 1, "w": 1})
    assert lam_invariant == Fraction(-1, 3)
    jumps = [lam for lam in catalog.LAMBDA_GRID if run_case("twisted_quartic_pencil", {"lambda": lam})[0].dim > 1]
    assert jumps == [lam_invariant]


@pytest.mark.criterion(6, "discriminant cubics x0*x1*x2 and x0*(x1*x2 - x0^2/4)")
def test_criterion_6_discriminants():
    Y = catalog.RingSpec.of(["y0", "y1", "y2"])
    X = catalog.DISC_RING
    d1 = catalog.discriminant_cubic([Y.parse(s) for s in ("y0^2", "y1^2", "y2^2")])
    assert d1 == X.parse("x0*x1*x2")
    d2 = catalog.discriminant_cubic([Y.parse(s) for s in ("y0^2 - y1*y2", "y1^2", "y2^2")])
    assert d2 == X.parse("x0*(x1*x2 - 1/4*x0^2)")
    info = catalog.analyze_discriminant(d2)
    assert [f["residual_rank"] for f in info["line_factors"]] == [3]
    assert len(catalog.analyze_discriminant(d1)["line_factors"]) == 3


def _key(fid):
    return tuple(int(x) for x in fid.split("."))


@pytest.mark.criterion(7, "database lists match the headline theorem and corollaries, under 1 s")
def test_criterion_7_database():
    t0 = time.perf_counter()
    db = fanodb.load()
    always, sometimes = db.infinite_always(), db.infinite_sometimes()
    nonred, h12 = db.nonreductive_always(), db.h12_infinite()
    assert time.perf_counter() - t0 < 1.0
    assert always == sorted(ALWAYS_INFINITE, key=_key)
    assert sometimes == sorted(SOMETIMES_INFINITE + LEMMA_ONLY_SOMETIMES, key=_key)
    assert all(db.lookup(f).discrepancy for f in LEMMA_ONLY_SOMETIMES)
    assert nonred == NONREDUCTIVE
    assert h12 == H12_INFINITE and len(h12) == 4


PROPERTY_TESTS = [
    "test_lieaction.py::test_leibniz",
    "test_lieaction.py::test_bracket_is_represented",
    "test_stabilizer.py::test_conjugation_equivariance",
    "test_stabilizer.py::test_random_ideals_give_closed_algebras",
    "test_stabilizer.py::test_catalog_algebras_closed_and_preserving",
    "test_exactmath.py::test_rank_nullity",
    "test_sl2rep.py::test_decompose_roundtrip",
]


@pytest.mark.criterion(8, "randomized property suites (>= 100 trials each) pass in under 30 s")
def test_criterion_8_property_suites():
    t0 = time.perf_counter()
    proc = subprocess.run([sys.executable, "-m", "pytest", "-q", "-p", "no:cacheprovider",
                           *[str(TESTS / t) for t in PROPERTY_TESTS]],
                          capture_output=True, text=True, cwd=TESTS.parent)
    secs = time.perf_counter() - t0
    assert proc.returncode == 0, proc.stdout[-2000:]
    assert secs < 30.0, f"{secs:.1f}s"


@pytest.mark.criterion(9, "fano verify --all exits 0 in under 2 minutes")
def test_criterion_9_verify_all():
    exe = shutil.which("fano")
    cmd = [exe] if exe else [sys.executable, "-m", "fanoaut"]
    t0 = time.perf_counter()
    proc = subprocess.run(cmd + ["verify", "--all"], capture_output=True, text=True, env=dict(os.environ))
    secs = time.perf_counter() - t0
    assert proc.returncode == 0, proc.stdout[-2000:]
    assert secs < 120.0
