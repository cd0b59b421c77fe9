"""Characters and invariants of SL2 representations.

U_m denotes the irreducible representation of highest weight m, i.e.
Sym^m of the standard representation.  Characters are multisets of
integer weights.
"""

from __future__ import annotations

import re
from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations_with_replacement

from .exactmath import kernel_basis
from .lieaction import AlgElement, act, sl2_in_sld
from .polyring import Ideal, Polynomial, RingSpec, graded_monomial_exponents


class CharacterError(ValueError):
    pass


@dataclass(frozen=True)
class Character:
    weights: tuple  # sorted descending, with multiplicity

    @classmethod
    def of(cls, weights) -> "Character":
        return cls(tuple(sorted(weights, reverse=True)))

    @property
    def dim(self) -> int:
        return len(self.weights)

    def __add__(self, other: "Character") -> "Character":
        return Character.of(self.weights + other.weights)

    def counts(self) -> Counter:
        return Counter(self.weights)


def irr_char(m: int) -> Character:
    if m < 0:
        raise CharacterError("highest weight must be non-negative")
    return Character.of(range(m, -m - 1, -2))


def tensor(a: Character, b: Character) -> Character:
    return Character.of(x + y for x in a.weights for y in b.weights)


def sym_power(a: Character, k: int) -> Character:
    if k < 0:
        raise CharacterError("symmetric power must be non-negative")
    return Character.of(sum(c) for c in combinations_with_replacement(a.weights, k))


def decompose(ch: Character) -> list[int]:
    """Highest weights of the irreducible summands, descending."""
    rest = ch.counts()
    out = []
    while rest:
        top = max(rest)
        if top < 0:
            raise CharacterError("not an SL2 character: leftover negative weights")
        mult = rest[top]
        for w in range(top, -top - 1, -2):
            rest[w] -= mult
            if rest[w] < 0:
                raise CharacterError(f"not an SL2 character: weight {w} missing")
            if rest[w] == 0:
                del rest[w]
        out.extend([top] * mult)
    return out


def format_decomposition(parts: list[int]) -> str:
    return " + ".join(f"U{m}" for m in parts) if parts else "0"


# --- expression parser: sym(2, sym(4, U1)), U2 * U3, U1 + U0 ---------------

_CTOK = re.compile(r"\s*(?:(U\d+)|(sym|tensor)|(\d+)|(.))")


def parse_character(text: str) -> Character:
    toks = []
    for m in _CTOK.finditer(text):
        u, fn, num, other = m.groups()
        if u:
            toks.append(("U", int(u[1:])))
        elif fn:
            toks.append(("fn", fn))
        elif num:
            toks.append(("num", int(num)))
        elif other and not other.isspace():
            toks.append(("op", other))
    pos = 0

    def peek():
        return toks[pos] if pos < len(toks) else (None, None)

    def expect(op):
        nonlocal pos
        if peek() != ("op", op):
            raise CharacterError(f"expected {op!r} in {text!r}")
        pos += 1

    def summand():
        nonlocal pos
        out = factor()
        while peek() in (("op", "*"), ("op", "⊗")):
            pos += 1
            out = tensor(out, factor())
        return out

    def expr():
        nonlocal pos
        out = summand()
        while peek() in (("op", "+"), ("op", "⊕")):
            pos += 1
            out = out + summand()
        return out

    def factor():
        nonlocal pos
        k, v = peek()
        if k == "U":
            pos += 1
            return irr_char(v)
        if k == "fn":
            pos += 1
            expect("(")
            if v == "sym":
                kk, n = peek()
                if kk != "num":
                    raise CharacterError(f"sym needs an integer power in {text!r}")
                pos += 1
                expect(",")
                inner = expr()
                expect(")")
                return sym_power(inner, n)
            a = expr()
            expect(",")
            b = expr()
            expect(")")
            return tensor(a, b)
        if (k, v) == ("op", "("):
            pos += 1
            inner = expr()
            expect(")")
            return inner
        raise CharacterError(f"unexpected token {v!r} in {text!r}")

    out = expr()
    if pos != len(toks):
        raise CharacterError(f"trailing input in {text!r}")
    return out


# --- rational normal curves and invariant forms ----------------------------

def rnc_ring(d: int, names=None) -> RingSpec:
    names = names or [f"x{i}" for i in range(d + 1)]
    return RingSpec.of(names)


def rational_normal_curve_ideal(d: int, ring: RingSpec | None = None) -> Ideal:
    """2x2 minors of [[x0 .. x_{d-1}], [x1 .. x_d]]."""
    if d < 1:
        raise CharacterError("need d >= 1")
    ring = ring or rnc_ring(d)
    x = ring.gens()
    gens = []
    for i in range(d):
        for j in range(i + 1, d):
            gens.append(x[i] * x[j + 1] - x[j] * x[i + 1])
    return Ideal.of(ring, gens)


def invariant_vectors(d: int, degree: int, ring: RingSpec | None = None) -> list[Polynomial]:
    """Basis of sl2-invariant forms of the given degree on Sym^d."""
    ring = ring or rnc_ring(d)
    E, F, H = sl2_in_sld(d)
    exps = graded_monomial_exponents(ring, (degree,))
    idx = {e: i for i, e in enumerate(exps)}
    # column j holds the images of the j-th monomial under E, F and H, stacked
    rows = [[Fraction(0)] * len(exps) for _ in range(3 * len(exps))]
    for j, e in enumerate(exps):
        mono = Polynomial(ring, {e: Fraction(1)})
        for t, X in enumerate((E, F, H)):
            img = act(AlgElement((X,)), mono)
            for e2, c in img.terms.items():
                rows[t * len(exps) + idx[e2]][j] += c
    return [Polynomial.from_coords(ring, (degree,), v) for v in kernel_basis(rows)]
