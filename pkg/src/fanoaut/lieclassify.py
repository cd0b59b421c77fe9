"""Structural invariants of a stabilizer algebra and of named group expressions.

``signature`` computes invariants of a concrete matrix Lie algebra.
``expected_signature`` derives the same invariants from a group expression
such as ``Ga^3 : (GL(2) x Gm)`` without building matrices, so ``match``
compares two independent routes.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field, fields, replace
from fractions import Fraction
from typing import Optional

from .exactmath import Matrix, is_nilpotent, kernel_basis, rank, semisimple_part
from .stabilizer import Subalgebra


# dimension of a semisimple Levi factor -> simple types
LEVI_BY_DIM = {
    0: (),
    3: ("A1",),
    6: ("A1", "A1"),
    8: ("A2",),
    9: ("A1", "A1", "A1"),
    10: ("B2",),
    11: ("A1", "A2"),
    15: ("A3",),
}
SIMPLE_RANK = {"A1": 1, "A2": 2, "A3": 3, "B2": 2}
SIMPLE_DIM = {"A1": 3, "A2": 8, "A3": 15, "B2": 10}


class ClassifyError(ValueError):
    pass


@dataclass(frozen=True)
class LieSignature:
    dim: Optional[int] = None
    derived_dim: Optional[int] = None
    radical_dim: Optional[int] = None
    unipotent_dim: Optional[int] = None
    toral_rank: Optional[int] = None
    killing_rank: Optional[int] = None
    levi: Optional[tuple] = None
    reductive: Optional[bool] = None
    abelian: Optional[bool] = None

    def as_dict(self) -> dict:
        return {f.name: (list(v) if isinstance(v, tuple) else v) for f in fields(self) for v in [getattr(self, f.name)]}

    def __str__(self) -> str:
        parts = []
        for f in fields(self):
            v = getattr(self, f.name)
            if v is None:
                continue
            if f.name == "levi":
                v = "+".join(v) if v else "-"
            parts.append(f"{f.name}={v}")
        return " ".join(parts)


# --- computed route -------------------------------------------------------

def _killing(alg: Subalgebra) -> list[list[Fraction]]:
    n = alg.dim
    c = alg.structure_constants
    # ad(e_i)[k][j] = c[i][j][k]
    ad = [[[c[i][j][k] for j in range(n)] for k in range(n)] for i in range(n)]
    K = [[Fraction(0)] * n for _ in range(n)]
    for i in range(n):
        for j in range(i, n):
            A, B = ad[i], ad[j]
            t = sum((A[a][b] * B[b][a] for a in range(n) for b in range(n) if A[a][b] and B[b][a]), Fraction(0))
            K[i][j] = K[j][i] = t
    return K


def signature(alg: Subalgebra) -> LieSignature:
    n = alg.dim
    if n == 0:
        return LieSignature(0, 0, 0, 0, 0, 0, (), True, True)
    c = alg.structure_constants
    brackets = [c[i][j] for i in range(n) for j in range(i + 1, n) if any(c[i][j])]
    derived_dim = rank(brackets) if brackets else 0
    K = _killing(alg)
    killing_rank = rank(K)

    # radical = Killing-orthogonal complement of [g, g]
    if brackets:
        kd = [[sum((b[k] * K[k][j] for k in range(n)), Fraction(0)) for j in range(n)] for b in brackets]
        rad_coords = kernel_basis(kd)
    else:
        rad_coords = [[Fraction(int(i == j)) for j in range(n)] for i in range(n)]
    radical = [alg.element(v).matrix() for v in rad_coords]
    radical_dim = len(radical)

    # unipotent part: kernel of the trace form of the defining representation on the radical
    if radical:
        T = [[(a @ b).trace() for b in radical] for a in radical]
        ker = kernel_basis(T)
        for v in ker:
            M = Matrix.zero(radical[0].nrows)
            for cf, R in zip(v, radical):
                if cf:
                    M = M + R.scale(cf)
            if not is_nilpotent(M):
                raise ClassifyError("trace-form kernel on the radical contains a non-nilpotent element")
        unipotent_dim = len(ker)
    else:
        unipotent_dim = 0

    rad_abelian = all(a.commutator(b).is_zero() for a in radical for b in radical)
    if radical and rad_abelian:
        # commuting elements: semisimple parts add, so their span is the torus
        ss = [semisimple_part(R).entries for R in radical]
        radical_toral = rank(ss)
        if radical_toral != radical_dim - unipotent_dim:
            raise ClassifyError("toral rank of the abelian radical disagrees with its unipotent part")
    else:
        radical_toral = radical_dim - unipotent_dim

    levi_dim = n - radical_dim
    if levi_dim not in LEVI_BY_DIM:
        raise ClassifyError(f"unsupported Levi factor dimension {levi_dim}")
    levi = LEVI_BY_DIM[levi_dim]
    toral_rank = radical_toral + sum(SIMPLE_RANK[t] for t in levi)

    reductive = unipotent_dim == 0
    if reductive:
        # the radical must then be central
        for v in rad_coords:
            for i in range(n):
                br = [sum((v[a] * c[a][i][k] for a in range(n)), Fraction(0)) for k in range(n)]
                if any(br):
                    raise ClassifyError("radical without unipotent part is not central")
    return LieSignature(
        dim=n,
        derived_dim=derived_dim,
        radical_dim=radical_dim,
        unipotent_dim=unipotent_dim,
        toral_rank=toral_rank,
        killing_rank=killing_rank,
        levi=tuple(sorted(levi)),
        reductive=reductive,
        abelian=derived_dim == 0,
    )


# --- group expressions ----------------------------------------------------

class GroupExpr:
    def signature(self) -> LieSignature:
        return expected_signature(self)


@dataclass(frozen=True)
class Trivial(GroupExpr):
    def __str__(self):
        return "1"


@dataclass(frozen=True)
class Ga(GroupExpr):
    k: int = 1

    def __str__(self):
        return "Ga" if self.k == 1 else f"Ga^{self.k}"


@dataclass(frozen=True)
class Gm(GroupExpr):
    k: int = 1

    def __str__(self):
        return "Gm" if self.k == 1 else f"Gm^{self.k}"


@dataclass(frozen=True)
class GL(GroupExpr):
    n: int

    def __str__(self):
        return f"GL({self.n})"


@dataclass(frozen=True)
class PGL(GroupExpr):
    n: int

    def __str__(self):
        return f"PGL({self.n})"


@dataclass(frozen=True)
class SL(GroupExpr):
    n: int

    def __str__(self):
        return f"SL({self.n})"


@dataclass(frozen=True)
class SO(GroupExpr):
    n: int

    def __str__(self):
        return f"SO({self.n})"


@dataclass(frozen=True)
class PSO(GroupExpr):
    n: int

    def __str__(self):
        return f"PSO({self.n})"


@dataclass(frozen=True)
class Borel2(GroupExpr):
    """Upper triangular subgroup of PGL(2)."""

    def __str__(self):
        return "B"


@dataclass(frozen=True)
class Parabolic(GroupExpr):
    """Subgroup of PGL(n) preserving a flag of subspaces of dimensions ks (decreasing)."""

    n: int
    ks: tuple

    def __str__(self):
        return f"PGL({self.n};{','.join(map(str, self.ks))})"


@dataclass(frozen=True)
class PSOParabolic(GroupExpr):
    """Subgroup of PSO(n) preserving an isotropic subspace of dimension k."""

    n: int
    k: int

    def __str__(self):
        return f"PSO({self.n};{self.k})"


@dataclass(frozen=True)
class PGL22(GroupExpr):
    """(GL(2) x GL(2)) / Gm, block diagonal in PGL(4)."""

    def __str__(self):
        return "PGL22"


@dataclass(frozen=True)
class PGL22_1(GroupExpr):
    """Subgroup of PGL22 that also fixes a point of one of the two lines."""

    def __str__(self):
        return "PGL22_1"


@dataclass(frozen=True)
class AutP1112(GroupExpr):
    """Automorphisms of the weighted plane P(1,1,1,2): Ga^6 : ((GL(3) x Gm) / Gm)."""

    def __str__(self):
        return "AutP1112"


@dataclass(frozen=True)
class Product(GroupExpr):
    factors: tuple

    def __str__(self):
        return " x ".join(_wrap(f, (Semidirect, CentralQuotientByGm, CentralQuotientByFinite, Product)) for f in self.factors)


@dataclass(frozen=True)
class Semidirect(GroupExpr):
    """normal : acting, the normal factor being unipotent."""

    normal: GroupExpr
    acting: GroupExpr

    def __str__(self):
        return f"{_wrap(self.normal, (Semidirect, CentralQuotientByGm, CentralQuotientByFinite))} : " \
               f"{_wrap(self.acting, (Semidirect, CentralQuotientByGm, CentralQuotientByFinite))}"


@dataclass(frozen=True)
class CentralQuotientByGm(GroupExpr):
    inner: GroupExpr

    def __str__(self):
        return f"{_wrap(self.inner, (Semidirect, Product, CentralQuotientByGm, CentralQuotientByFinite))} / Gm"


@dataclass(frozen=True)
class CentralQuotientByFinite(GroupExpr):
    inner: GroupExpr

    def __str__(self):
        return f"{_wrap(self.inner, (Semidirect, Product, CentralQuotientByGm, CentralQuotientByFinite))} / finite"


def _wrap(e: GroupExpr, kinds) -> str:
    s = str(e)
    return f"({s})" if isinstance(e, kinds) else s


def _levi_so(m: int) -> tuple:
    return {0: (), 1: (), 2: (), 3: ("A1",), 4: ("A1", "A1"), 5: ("B2",), 6: ("A3",)}[m]


def _sig(**kw) -> LieSignature:
    if kw.get("levi") is not None:
        kw["levi"] = tuple(sorted(kw["levi"]))
    return LieSignature(**kw)


def _reductive(dim: int, center: int, levi: tuple, toral: int) -> LieSignature:
    return _sig(dim=dim, derived_dim=dim - center, radical_dim=center, unipotent_dim=0, toral_rank=toral,
                killing_rank=dim - center, levi=levi, reductive=True, abelian=dim == center)


def _parabolic_blocks(n: int, ks: tuple) -> list[int]:
    dims = [n] + list(ks) + [0]
    if any(a <= b for a, b in zip(dims, dims[1:])):
        raise ClassifyError(f"flag dimensions must decrease strictly within 0..{n}: {ks}")
    return [a - b for a, b in zip(dims, dims[1:])]


def expected_signature(e: GroupExpr) -> LieSignature:
    """Invariants of the Lie algebra of a group expression.

    Fields that cannot be pinned down from the expression alone are None.
    """
    if isinstance(e, Trivial):
        return LieSignature(0, 0, 0, 0, 0, 0, (), True, True)
    if isinstance(e, Ga):
        return _sig(dim=e.k, derived_dim=0, radical_dim=e.k, unipotent_dim=e.k, toral_rank=0, killing_rank=0,
                    levi=(), reductive=e.k == 0, abelian=True)
    if isinstance(e, Gm):
        return _reductive(e.k, e.k, (), e.k)
    if isinstance(e, GL):
        return _reductive(e.n * e.n, 1, (f"A{e.n - 1}",) if e.n > 1 else (), e.n)
    if isinstance(e, (PGL, SL)):
        return _reductive(e.n * e.n - 1, 0, (f"A{e.n - 1}",) if e.n > 1 else (), e.n - 1)
    if isinstance(e, (SO, PSO)):
        d = e.n * (e.n - 1) // 2
        center = 1 if e.n == 2 else 0
        return _reductive(d, center, _levi_so(e.n), e.n // 2)
    if isinstance(e, Borel2):
        return _sig(dim=2, derived_dim=1, radical_dim=2, unipotent_dim=1, toral_rank=1, killing_rank=1,
                    levi=(), reductive=False, abelian=False)
    if isinstance(e, Parabolic):
        b = _parabolic_blocks(e.n, e.ks)
        unip = sum(b[i] * b[j] for i in range(len(b)) for j in range(i + 1, len(b)))
        levi_ss = sum(x * x - 1 for x in b)
        center = len(b) - 1
        dim = unip + levi_ss + center
        return _sig(dim=dim, derived_dim=unip + levi_ss, radical_dim=unip + center, unipotent_dim=unip,
                    toral_rank=e.n - 1, killing_rank=None, levi=tuple(f"A{x - 1}" for x in b if x > 1),
                    reductive=unip == 0, abelian=dim == center)
    if isinstance(e, PSOParabolic):
        n, k = e.n, e.k
        if not 1 <= k <= n // 2:
            raise ClassifyError(f"isotropic dimension {k} impossible in dimension {n}")
        m = n - 2 * k
        levi_dim = k * k + m * (m - 1) // 2
        unip = (n * (n - 1) // 2 - levi_dim) // 2
        center = 1 + (1 if m == 2 else 0)
        levi = ((f"A{k - 1}",) if k > 1 else ()) + _levi_so(m)
        dim = unip + levi_dim
        return _sig(dim=dim, derived_dim=dim - center, radical_dim=unip + center, unipotent_dim=unip,
                    toral_rank=n // 2, killing_rank=None, levi=levi, reductive=False, abelian=False)
    if isinstance(e, PGL22):
        return _reductive(7, 1, ("A1", "A1"), 3)
    if isinstance(e, PGL22_1):
        return _sig(dim=6, derived_dim=4, radical_dim=3, unipotent_dim=1, toral_rank=3, killing_rank=None,
                    levi=("A1",), reductive=False, abelian=False)
    if isinstance(e, AutP1112):
        return _sig(dim=15, derived_dim=14, radical_dim=7, unipotent_dim=6, toral_rank=3, killing_rank=None,
                    levi=("A2",), reductive=False, abelian=False)
    if isinstance(e, Product):
        sigs = [expected_signature(f) for f in e.factors]
        return _combine_product(sigs)
    if isinstance(e, Semidirect):
        u, r = expected_signature(e.normal), expected_signature(e.acting)
        if u.unipotent_dim != u.dim:
            raise ClassifyError(f"normal factor {e.normal} of a semidirect product must be unipotent")
        return _sig(dim=u.dim + r.dim, derived_dim=None, radical_dim=u.dim + r.radical_dim,
                    unipotent_dim=u.dim + r.unipotent_dim, toral_rank=r.toral_rank, killing_rank=None,
                    levi=r.levi, reductive=u.dim == 0 and r.reductive, abelian=None if u.dim == 0 else False)
    if isinstance(e, CentralQuotientByGm):
        s = expected_signature(e.inner)
        if s.radical_dim - s.unipotent_dim < 1:
            raise ClassifyError(f"{e.inner} has no central torus to divide by")
        return replace(s, dim=s.dim - 1, radical_dim=s.radical_dim - 1, toral_rank=s.toral_rank - 1)
    if isinstance(e, CentralQuotientByFinite):
        return expected_signature(e.inner)
    raise ClassifyError(f"unknown expression {e!r}")


def _combine_product(sigs: list) -> LieSignature:
    def add(name):
        vals = [getattr(s, name) for s in sigs]
        return None if any(v is None for v in vals) else sum(vals)

    def both(name):
        vals = [getattr(s, name) for s in sigs]
        return None if any(v is None for v in vals) else all(vals)

    levis = [s.levi for s in sigs]
    return _sig(dim=add("dim"), derived_dim=add("derived_dim"), radical_dim=add("radical_dim"),
                unipotent_dim=add("unipotent_dim"), toral_rank=add("toral_rank"), killing_rank=add("killing_rank"),
                levi=None if any(l is None for l in levis) else sum(levis, ()),
                reductive=both("reductive"), abelian=both("abelian"))


@dataclass
class MatchReport:
    ok: bool
    computed: LieSignature
    expected: LieSignature
    mismatches: list = field(default_factory=list)

    def __str__(self) -> str:
        if self.ok:
            return f"match: {self.computed}"
        return "mismatch: " + "; ".join(f"{n}: computed {c}, expected {e}" for n, c, e in self.mismatches)


def match(computed: LieSignature, expr: GroupExpr | str) -> MatchReport:
    if isinstance(expr, str):
        expr = parse_group(expr)
    exp = expected_signature(expr)
    bad = []
    for f in fields(LieSignature):
        e = getattr(exp, f.name)
        c = getattr(computed, f.name)
        if e is not None and c != e:
            bad.append((f.name, c, e))
    return MatchReport(not bad, computed, exp, bad)


# --- parser ---------------------------------------------------------------

_GTOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z][A-Za-z0-9_]*)|(.))")


def parse_group(text: str) -> GroupExpr:
    """Parse e.g. ``Ga^3 : (GL(2) x Gm)``, ``PGL(4;2,1)``, ``(GL(2) x GL(2)) / Gm``."""
    toks = []
    for m in _GTOKEN.finditer(text):
        num, name, other = m.groups()
        if num:
            toks.append(("num", int(num)))
        elif name:
            toks.append(("name", name))
        elif other and not other.isspace():
            toks.append(("op", other))
    p = _GroupParser(toks, text)
    out = p.semi()
    if p.i != len(toks):
        raise ClassifyError(f"trailing input in group expression {text!r}")
    return out


class _GroupParser:
    def __init__(self, toks, text):
        self.toks, self.text, self.i = toks, text, 0

    def peek(self):
        return self.toks[self.i] if self.i < len(self.toks) else (None, None)

    def op(self, ch) -> bool:
        if self.peek() == ("op", ch):
            self.i += 1
            return True
        return False

    def expect(self, ch):
        if not self.op(ch):
            raise ClassifyError(f"expected {ch!r} in {self.text!r}")

    def num(self) -> int:
        k, v = self.peek()
        if k != "num":
            raise ClassifyError(f"expected a number in {self.text!r}")
        self.i += 1
        return v

    def semi(self) -> GroupExpr:
        left = self.quot()
        while self.op(":"):
            left = Semidirect(left, self.quot())
        return left

    def quot(self) -> GroupExpr:
        inner = self.prod()
        while self.op("/"):
            k, v = self.peek()
            if (k, v) == ("name", "Gm"):
                self.i += 1
                inner = CentralQuotientByGm(inner)
            elif (k, v) == ("name", "finite"):
                self.i += 1
                inner = CentralQuotientByFinite(inner)
            else:
                raise ClassifyError(f"can only quotient by Gm or finite in {self.text!r}")
        return inner

    def prod(self) -> GroupExpr:
        factors = [self.atom()]
        while self.peek() == ("name", "x"):
            self.i += 1
            factors.append(self.atom())
        return factors[0] if len(factors) == 1 else Product(tuple(factors))

    def atom(self) -> GroupExpr:
        if self.op("("):
            e = self.semi()
            self.expect(")")
            return e
        k, v = self.peek()
        if k == "num" and v == 1:
            self.i += 1
            return Trivial()
        if k != "name":
            raise ClassifyError(f"unexpected token {v!r} in {self.text!r}")
        self.i += 1
        if v in ("Ga", "Gm"):
            power = self.num() if self.op("^") else 1
            return Ga(power) if v == "Ga" else Gm(power)
        if v in ("B",):
            return Borel2()
        simple = {"PGL22": PGL22, "PGL22_1": PGL22_1, "AutP1112": AutP1112}
        if v in simple:
            return simple[v]()
        if v in ("GL", "PGL", "SL", "SO", "PSO"):
            self.expect("(")
            n = self.num()
            ks = []
            if self.op(";"):
                ks.append(self.num())
                while self.op(","):
                    ks.append(self.num())
            self.expect(")")
            if ks:
                if v == "PGL":
                    return Parabolic(n, tuple(ks))
                if v == "PSO" and len(ks) == 1:
                    return PSOParabolic(n, ks[0])
                raise ClassifyError(f"{v} does not take flag data in {self.text!r}")
            return {"GL": GL, "PGL": PGL, "SL": SL, "SO": SO, "PSO": PSO}[v](n)
        raise ClassifyError(f"unknown group {v!r} in {self.text!r}")
