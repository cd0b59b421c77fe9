"""Multigraded polynomial rings over Q, one grading per block of variables.

A ring is a product of projective spaces: each block of variables carries
its own degree.  Ideals are handled through their graded pieces, which are
finite-dimensional subspaces of the span of graded monomials; membership is
a same-degree linear algebra question.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from itertools import product
from math import comb
from typing import Iterable, Mapping, Sequence

from .exactmath import as_rational, reduce_against, row_space


class PolynomialError(ValueError):
    pass


class InhomogeneousError(PolynomialError):
    pass


class ParseError(PolynomialError):
    pass


@dataclass(frozen=True)
class RingSpec:
    blocks: tuple  # tuple of (block name, tuple of variable names)

    @classmethod
    def of(cls, *blocks: Sequence[str], names: Sequence[str] | None = None) -> "RingSpec":
        names = names or [f"P{len(b) - 1}_{i}" for i, b in enumerate(blocks)]
        spec = cls(tuple((n, tuple(b)) for n, b in zip(names, blocks)))
        spec._validate()
        return spec

    @classmethod
    def projective(cls, *dims: int, letters: str = "xyzuvw") -> "RingSpec":
        """Product of P^{n_i} with coordinates x0.., y0.., ..."""
        return cls.of(*[[f"{letters[i]}{j}" for j in range(n + 1)] for i, n in enumerate(dims)])

    def _validate(self) -> None:
        seen = set()
        for _, vs in self.blocks:
            if not vs:
                raise PolynomialError("empty block")
            for v in vs:
                if not re.fullmatch(r"[A-Za-z_][A-Za-z_0-9]*", v):
                    raise PolynomialError(f"bad variable name {v!r}")
                if v in seen:
                    raise PolynomialError(f"duplicate variable {v!r}")
                seen.add(v)

    @cached_property
    def variables(self) -> tuple:
        return tuple(v for _, vs in self.blocks for v in vs)

    @cached_property
    def index(self) -> dict:
        return {v: i for i, v in enumerate(self.variables)}

    @cached_property
    def block_sizes(self) -> tuple:
        return tuple(len(vs) for _, vs in self.blocks)

    @cached_property
    def block_offsets(self) -> tuple:
        out, off = [], 0
        for n in self.block_sizes:
            out.append(off)
            off += n
        return tuple(out)

    @property
    def nvars(self) -> int:
        return len(self.variables)

    def var(self, name: str) -> "Polynomial":
        e = [0] * self.nvars
        e[self.index[name]] = 1
        return Polynomial(self, {tuple(e): Fraction(1)})

    def gens(self) -> list["Polynomial"]:
        return [self.var(v) for v in self.variables]

    def const(self, c) -> "Polynomial":
        c = as_rational(c)
        return Polynomial(self, {(0,) * self.nvars: c} if c else {})

    def zero(self) -> "Polynomial":
        return Polynomial(self, {})

    def parse(self, text: str) -> "Polynomial":
        return parse_polynomial(self, text)


# --- monomials ------------------------------------------------------------

@dataclass(frozen=True)
class Monomial:
    ring: RingSpec
    exponents: tuple

    def as_dict(self) -> dict:
        return {v: e for v, e in zip(self.ring.variables, self.exponents) if e}

    def multidegree(self) -> tuple:
        return _multidegree(self.ring, self.exponents)

    def __str__(self) -> str:
        return _format_monomial(self.ring, self.exponents) or "1"


def _multidegree(ring: RingSpec, exps: tuple) -> tuple:
    return tuple(sum(exps[o:o + n]) for o, n in zip(ring.block_offsets, ring.block_sizes))


def _format_monomial(ring: RingSpec, exps: tuple) -> str:
    parts = []
    for v, e in zip(ring.variables, exps):
        if e == 1:
            parts.append(v)
        elif e:
            parts.append(f"{v}^{e}")
    return "*".join(parts)


def _block_monomials(n: int, d: int) -> list[tuple]:
    """Exponent vectors of degree d in n variables, lex descending."""
    if n == 1:
        return [(d,)]
    out = []
    for first in range(d, -1, -1):
        for rest in _block_monomials(n - 1, d - first):
            out.append((first,) + rest)
    return out


_MONO_CACHE: dict = {}


def graded_monomial_exponents(ring: RingSpec, degree: Sequence[int]) -> list[tuple]:
    degree = tuple(degree)
    if len(degree) != len(ring.blocks):
        raise PolynomialError(f"degree {degree} does not match {len(ring.blocks)} blocks")
    if any(d < 0 for d in degree):
        return []
    key = (ring, degree)
    hit = _MONO_CACHE.get(key)
    if hit is None:
        per_block = [_block_monomials(n, d) for n, d in zip(ring.block_sizes, degree)]
        hit = [sum(parts, ()) for parts in product(*per_block)]
        _MONO_CACHE[key] = hit
    return hit


def graded_monomials(ring: RingSpec, degree: Sequence[int]) -> list[Monomial]:
    """Monomials of a multidegree, block-major then lexicographic."""
    return [Monomial(ring, e) for e in graded_monomial_exponents(ring, degree)]


def graded_dimension(ring: RingSpec, degree: Sequence[int]) -> int:
    out = 1
    for n, d in zip(ring.block_sizes, degree):
        out *= comb(n - 1 + d, d)
    return out


def monomial_index(ring: RingSpec, degree: Sequence[int]) -> dict:
    key = ("idx", ring, tuple(degree))
    hit = _MONO_CACHE.get(key)
    if hit is None:
        hit = {e: i for i, e in enumerate(graded_monomial_exponents(ring, degree))}
        _MONO_CACHE[key] = hit
    return hit


# --- polynomials ----------------------------------------------------------

class Polynomial:
    __slots__ = ("ring", "terms")

    def __init__(self, ring: RingSpec, terms: Mapping[tuple, Fraction] | None = None):
        self.ring = ring
        self.terms = {e: c for e, c in (terms or {}).items() if c}

    @classmethod
    def from_dict(cls, ring: RingSpec, terms: Mapping[Mapping[str, int] | tuple, object]) -> "Polynomial":
        out: dict = {}
        for mono, c in terms.items():
            if isinstance(mono, tuple):
                e = mono
            else:
                v = [0] * ring.nvars
                for name, k in mono.items():
                    v[ring.index[name]] += k
                e = tuple(v)
            out[e] = out.get(e, Fraction(0)) + as_rational(c)
        return cls(ring, out)

    def _coerce(self, other) -> "Polynomial":
        if isinstance(other, Polynomial):
            if other.ring != self.ring:
                raise PolynomialError("polynomials live in different rings")
            return other
        return self.ring.const(other)

    def is_zero(self) -> bool:
        return not self.terms

    def __eq__(self, other) -> bool:
        if not isinstance(other, Polynomial):
            try:
                other = self._coerce(other)
            except (TypeError, ValueError):
                return NotImplemented
        return self.ring == other.ring and self.terms == other.terms

    def __hash__(self) -> int:
        return hash((self.ring, frozenset(self.terms.items())))

    def __add__(self, other) -> "Polynomial":
        other = self._coerce(other)
        out = dict(self.terms)
        for e, c in other.terms.items():
            out[e] = out.get(e, Fraction(0)) + c
        return Polynomial(self.ring, out)

    __radd__ = __add__

    def __neg__(self) -> "Polynomial":
        return Polynomial(self.ring, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other) -> "Polynomial":
        return self + (-self._coerce(other))

    def __rsub__(self, other) -> "Polynomial":
        return self._coerce(other) - self

    def __mul__(self, other) -> "Polynomial":
        if not isinstance(other, Polynomial):
            c = as_rational(other)
            return Polynomial(self.ring, {e: c * a for e, a in self.terms.items()})
        other = self._coerce(other)
        out: dict = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                out[e] = out.get(e, Fraction(0)) + c1 * c2
        return Polynomial(self.ring, out)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "Polynomial":
        out = self.ring.const(1)
        for _ in range(k):
            out = out * self
        return out

    def coefficient(self, mono) -> Fraction:
        if isinstance(mono, Monomial):
            mono = mono.exponents
        elif isinstance(mono, Mapping):
            e = [0] * self.ring.nvars
            for name, k in mono.items():
                e[self.ring.index[name]] = k
            mono = e
        return self.terms.get(tuple(mono), Fraction(0))

    def derivative(self, i: int) -> "Polynomial":
        out = {}
        for e, c in self.terms.items():
            k = e[i]
            if k:
                e2 = e[:i] + (k - 1,) + e[i + 1:]
                out[e2] = c * k
        return Polynomial(self.ring, out)

    def multidegree(self) -> tuple:
        """Multidegree of a nonzero multihomogeneous polynomial."""
        if self.is_zero():
            raise PolynomialError("the zero polynomial has no multidegree")
        degs = {_multidegree(self.ring, e) for e in self.terms}
        if len(degs) != 1:
            raise InhomogeneousError(f"{self} is not multihomogeneous: degrees {sorted(degs)}")
        return degs.pop()

    def is_homogeneous(self) -> bool:
        return len({_multidegree(self.ring, e) for e in self.terms}) <= 1

    def sorted_terms(self) -> list[tuple[tuple, Fraction]]:
        """Terms by total degree descending, then block-major lex descending."""
        return sorted(self.terms.items(), key=lambda t: (sum(t[0]), _multidegree(self.ring, t[0]), t[0]), reverse=True)

    def leading_exponent(self) -> tuple:
        return self.sorted_terms()[0][0]

    def coords(self, degree: Sequence[int] | None = None) -> list[Fraction]:
        """Coefficient vector in the graded monomial basis of ``degree``."""
        degree = self.multidegree() if degree is None else tuple(degree)
        idx = monomial_index(self.ring, degree)
        v = [Fraction(0)] * len(idx)
        for e, c in self.terms.items():
            try:
                v[idx[e]] = c
            except KeyError:
                raise InhomogeneousError(f"{self} has a term outside degree {degree}") from None
        return v

    @classmethod
    def from_coords(cls, ring: RingSpec, degree: Sequence[int], v: Sequence[Fraction]) -> "Polynomial":
        exps = graded_monomial_exponents(ring, degree)
        return cls(ring, {e: as_rational(c) for e, c in zip(exps, v) if c})

    def substitute(self, images: Mapping[str, "Polynomial"] | Sequence["Polynomial"], target: RingSpec | None = None) -> "Polynomial":
        """Replace each variable by a polynomial, possibly in another ring."""
        if isinstance(images, Mapping):
            imgs = [images.get(v) for v in self.ring.variables]
            imgs = [img if img is not None else self.ring.var(v) for img, v in zip(imgs, self.ring.variables)]
        else:
            imgs = list(images)
        if target is None:
            target = imgs[0].ring if imgs else self.ring
        out = target.zero()
        cache: dict = {}
        for e, c in self.terms.items():
            term = target.const(c)
            for i, k in enumerate(e):
                if k:
                    key = (i, k)
                    if key not in cache:
                        cache[key] = imgs[i] ** k
                    term = term * cache[key]
            out = out + term
        return out

    def evaluate(self, point: Sequence) -> Fraction:
        pt = [as_rational(x) for x in point]
        total = Fraction(0)
        for e, c in self.terms.items():
            term = c
            for x, k in zip(pt, e):
                if k:
                    term *= x ** k
            total += term
        return total

    def scale_monic(self) -> "Polynomial":
        """Scale so the leading coefficient is 1."""
        if self.is_zero():
            return self
        return self * (1 / self.terms[self.leading_exponent()])

    def __str__(self) -> str:
        return format_polynomial(self)

    def __repr__(self) -> str:
        return f"Polynomial({format_polynomial(self)!r})"


def format_polynomial(f: Polynomial) -> str:
    if f.is_zero():
        return "0"
    pieces = []
    for e, c in f.sorted_terms():
        mono = _format_monomial(f.ring, e)
        mag = abs(c)
        if mono and mag == 1:
            body = mono
        elif mono:
            body = f"{mag}*{mono}"
        else:
            body = str(mag)
        pieces.append(("-" if c < 0 else "+", body))
    text = ("-" if pieces[0][0] == "-" else "") + pieces[0][1]
    for sign, body in pieces[1:]:
        text += f" {sign} {body}"
    return text


_TOKEN = re.compile(r"\s*(?:(\d+(?:/\d+)?)|([A-Za-z_][A-Za-z_0-9]*)|(\^)|(\*)|([+-])|(\()|(\)))")


def parse_polynomial(ring: RingSpec, text: str) -> Polynomial:
    """Parse ``3/2*x0^2*y1 - y0*y2``; parentheses and integer powers are allowed."""
    tokens = []
    pos = 0
    text = text.strip()
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m or m.end() == pos:
            raise ParseError(f"unexpected character at {pos}: {text[pos:pos + 10]!r}")
        pos = m.end()
        num, name, caret, star, sign, lp, rp = m.groups()
        if num is not None:
            tokens.append(("num", num))
        elif name is not None:
            tokens.append(("name", name))
        elif caret:
            tokens.append(("^", caret))
        elif star:
            tokens.append(("*", star))
        elif sign:
            tokens.append(("sign", sign))
        elif lp:
            tokens.append(("(", lp))
        elif rp:
            tokens.append((")", rp))
    if not tokens:
        raise ParseError("empty polynomial")
    parser = _PolyParser(ring, tokens)
    out = parser.expr()
    if parser.i != len(tokens):
        raise ParseError(f"trailing input near token {parser.i}")
    return out


class _PolyParser:
    def __init__(self, ring: RingSpec, tokens: list):
        self.ring = ring
        self.tokens = tokens
        self.i = 0

    def peek(self):
        return self.tokens[self.i] if self.i < len(self.tokens) else (None, None)

    def take(self, kind: str):
        k, v = self.peek()
        if k != kind:
            raise ParseError(f"expected {kind}, found {v!r}")
        self.i += 1
        return v

    def expr(self) -> Polynomial:
        sign = 1
        if self.peek() == ("sign", "-"):
            self.i += 1
            sign = -1
        elif self.peek() == ("sign", "+"):
            self.i += 1
        out = self.term() * sign
        while self.peek()[0] == "sign":
            s = self.take("sign")
            t = self.term()
            out = out + t if s == "+" else out - t
        return out

    def term(self) -> Polynomial:
        out = self.power()
        while True:
            k, _ = self.peek()
            if k == "*":
                self.i += 1
                out = out * self.power()
            elif k in ("name", "num", "("):
                out = out * self.power()
            else:
                return out

    def power(self) -> Polynomial:
        base = self.atom()
        if self.peek()[0] == "^":
            self.i += 1
            k = self.take("num")
            if "/" in k:
                raise ParseError("exponents must be integers")
            base = base ** int(k)
        return base

    def atom(self) -> Polynomial:
        k, v = self.peek()
        if k == "num":
            self.i += 1
            return self.ring.const(Fraction(v))
        if k == "name":
            self.i += 1
            if v not in self.ring.index:
                raise ParseError(f"unknown variable {v!r}")
            return self.ring.var(v)
        if k == "(":
            self.i += 1
            out = self.expr()
            self.take(")")
            return out
        if k == "sign":
            self.i += 1
            inner = self.power()
            return -inner if v == "-" else inner
        raise ParseError(f"unexpected token {v!r}")


# --- ideals ---------------------------------------------------------------

@dataclass(frozen=True)
class Ideal:
    ring: RingSpec
    generators: tuple = field(default=())

    @classmethod
    def of(cls, ring: RingSpec, gens: Iterable) -> "Ideal":
        polys = []
        for g in gens:
            p = ring.parse(g) if isinstance(g, str) else g
            if p.ring != ring:
                raise PolynomialError("generator lives in a different ring")
            if p.is_zero():
                continue
            p.multidegree()
            polys.append(p)
        return cls(ring, tuple(polys))

    def __str__(self) -> str:
        return "(" + ", ".join(str(g) for g in self.generators) + ")"


_BASIS_CACHE: dict = {}


def ideal_graded_basis(I: Ideal, degree: Sequence[int]) -> tuple[list[list[Fraction]], list[int]]:
    """Reduced basis of I_d, as coefficient rows in the graded monomial basis.

    I_d is spanned by m*g for generators g and monomials m of the
    complementary degree.
    """
    degree = tuple(degree)
    key = (I, degree)
    hit = _BASIS_CACHE.get(key)
    if hit is not None:
        return hit
    ring = I.ring
    idx = monomial_index(ring, degree)
    rows = []
    for g in I.generators:
        gd = g.multidegree()
        rest = tuple(a - b for a, b in zip(degree, gd))
        for m in graded_monomial_exponents(ring, rest):
            v = [Fraction(0)] * len(idx)
            for e, c in g.terms.items():
                v[idx[tuple(a + b for a, b in zip(e, m))]] = c
            rows.append(v)
    hit = row_space(rows, len(idx))
    if len(_BASIS_CACHE) > 4096:
        _BASIS_CACHE.clear()
    _BASIS_CACHE[key] = hit
    return hit


def graded_piece_dimension(I: Ideal, degree: Sequence[int]) -> int:
    return len(ideal_graded_basis(I, degree)[1])


def contains(I: Ideal, f: Polynomial) -> bool:
    """Is the multihomogeneous f in I (compared in degree deg f)?"""
    if f.is_zero():
        return True
    d = f.multidegree()
    red, piv = ideal_graded_basis(I, d)
    return not any(reduce_against(f.coords(d), red, piv))


def reduce_mod(I: Ideal, f: Polynomial, degree: Sequence[int]) -> list[Fraction]:
    """Coordinates of f modulo I_d (zero in the pivot columns of I_d)."""
    red, piv = ideal_graded_basis(I, degree)
    return reduce_against(f.coords(degree), red, piv)


def divide_exact(f: Polynomial, g: Polynomial) -> Polynomial | None:
    """f / g when g divides f, else None (single-divisor division)."""
    if g.is_zero():
        raise ZeroDivisionError("division by the zero polynomial")
    ring = f.ring
    key = lambda e: (sum(e), e)
    lg = max(g.terms, key=key)
    cg = g.terms[lg]
    rem = Polynomial(ring, f.terms)
    quot: dict = {}
    while not rem.is_zero():
        lr = max(rem.terms, key=key)
        diff = tuple(a - b for a, b in zip(lr, lg))
        if any(k < 0 for k in diff):
            return None
        c = rem.terms[lr] / cg
        quot[diff] = quot.get(diff, Fraction(0)) + c
        rem = rem - Polynomial(ring, {diff: c}) * g
    return Polynomial(ring, quot)
