"""
Hecke algebra of I2(m) over Z[v, v^-1].

Normalization: ``H_g^2 = H_e + (v^-1 - v) H_g`` for a generator ``g``, with
bar involution ``v -> v^-1``, ``H_g -> H_g^-1 = H_g + (v - v^-1) H_e``.  In
this normalization the Kazhdan-Lusztig basis of a dihedral group is

    b_w = sum over y <= w of v^(l(w) - l(y)) H_y.

R-polynomials are in the variable ``q`` and follow the left-descent recursion
with ``R_{x,y} = 0`` unless ``x <= y``.
"""

from __future__ import annotations

import functools
from typing import Iterator, Mapping

from .dihedral import (
    DihedralElement,
    bruhat_leq,
    elements,
    mult_gen,
)
from .laurent import LaurentPolynomial

V = LaurentPolynomial.gen("v")
V_INV = V ** -1
ONE = LaurentPolynomial.constant(1, "v")


class HeckeElement:
    """Finitely supported map ``DihedralElement -> LaurentPolynomial`` in ``v``."""

    __slots__ = ("m", "_support")

    def __init__(self, m: int, support: Mapping[DihedralElement, LaurentPolynomial | int] | None = None):
        self.m = m
        clean = {}
        for w, p in (support or {}).items():
            if w.m != m:
                raise ValueError(f"element {w} is not in I2({m})")
            if isinstance(p, int):
                p = LaurentPolynomial.constant(p, "v")
            if p:
                clean[w] = p
        self._support = clean

    @classmethod
    def standard(cls, w: DihedralElement, coeff: LaurentPolynomial | int = 1) -> HeckeElement:
        return cls(w.m, {w: coeff})

    @classmethod
    def zero(cls, m: int) -> HeckeElement:
        return cls(m)

    @classmethod
    def one(cls, m: int) -> HeckeElement:
        return cls.standard(DihedralElement.identity(m))

    @property
    def support(self) -> dict[DihedralElement, LaurentPolynomial]:
        return dict(self._support)

    def coeff(self, w: DihedralElement) -> LaurentPolynomial:
        return self._support.get(w, LaurentPolynomial(var="v"))

    def items(self) -> Iterator[tuple[DihedralElement, LaurentPolynomial]]:
        for w in sorted(self._support, key=DihedralElement.sort_key):
            yield w, self._support[w]

    def __bool__(self) -> bool:
        return bool(self._support)

    def _check(self, other: HeckeElement) -> None:
        if not isinstance(other, HeckeElement):
            raise TypeError(f"expected HeckeElement, got {type(other).__name__}")
        if other.m != self.m:
            raise ValueError("Hecke elements from different groups")

    def __add__(self, other: HeckeElement) -> HeckeElement:
        self._check(other)
        out = dict(self._support)
        for w, p in other._support.items():
            out[w] = out[w] + p if w in out else p
        return HeckeElement(self.m, out)

    def __neg__(self) -> HeckeElement:
        return HeckeElement(self.m, {w: -p for w, p in self._support.items()})

    def __sub__(self, other: HeckeElement) -> HeckeElement:
        return self + (-other)

    def scale(self, c: LaurentPolynomial | int) -> HeckeElement:
        return HeckeElement(self.m, {w: p * c for w, p in self._support.items()})

    def __mul__(self, other):
        if isinstance(other, (int, LaurentPolynomial)):
            return self.scale(other)
        return h_mult(self, other)

    def __rmul__(self, other):
        if isinstance(other, (int, LaurentPolynomial)):
            return self.scale(other)
        return NotImplemented

    def __eq__(self, other) -> bool:
        if not isinstance(other, HeckeElement):
            return NotImplemented
        return self.m == other.m and self._support == other._support

    def __hash__(self) -> int:
        return hash((self.m, frozenset(self._support.items())))

    def render(self, latex: bool = False) -> str:
        if not self._support:
            return "0"
        parts = []
        for w, p in self.items():
            basis = f"H_{{{w}}}" if latex else f"H_{w}"
            poly = p.render(latex)
            if poly == "1":
                parts.append(basis)
            elif poly == "-1":
                parts.append("-" + basis)
            else:
                parts.append(f"({poly}){basis}")
        return " + ".join(parts)

    def __str__(self) -> str:
        return self.render()

    def __repr__(self) -> str:
        return f"HeckeElement(m={self.m}, {self.render()})"


def _times_generator(a: HeckeElement, g: str) -> HeckeElement:
    """Right multiplication by the standard generator ``H_g``."""
    out: dict[DihedralElement, LaurentPolynomial] = {}

    def add(w, p):
        out[w] = out[w] + p if w in out else p

    for x, p in a._support.items():
        xg, sign = mult_gen("right", g, x)
        add(xg, p)
        if sign < 0:
            add(x, p * (V_INV - V))
    return HeckeElement(a.m, out)


def h_mult(a: HeckeElement, b: HeckeElement) -> HeckeElement:
    """Product in the standard basis, decomposing ``b`` along reduced words."""
    a._check(b)
    total = HeckeElement.zero(a.m)
    for y, p in b._support.items():
        term = a
        for g in y.word:
            term = _times_generator(term, g)
        total = total + term.scale(p)
    return total


def _bar_generator(g: str, m: int) -> HeckeElement:
    e = DihedralElement.identity(m)
    gen = DihedralElement.from_alternating(m, g, 1)
    return HeckeElement(m, {gen: ONE, e: V - V_INV})


def bar_standard(w: DihedralElement) -> HeckeElement:
    """``bar(H_w)`` as the product of inverted generators along a reduced word."""
    result = HeckeElement.one(w.m)
    for g in w.word:
        result = h_mult(result, _bar_generator(g, w.m))
    return result


def bar_hecke(a: HeckeElement) -> HeckeElement:
    """The bar involution: semilinear with ``v -> v^-1``."""
    total = HeckeElement.zero(a.m)
    for w, p in a._support.items():
        total = total + bar_standard(w).scale(p.bar_invert())
    return total


def kl_basis(w: DihedralElement) -> HeckeElement:
    """Kazhdan-Lusztig basis element, from the dihedral closed form."""
    support = {
        y: V ** (w.length - y.length)
        for y in elements(w.m)
        if bruhat_leq(y, w)
    }
    return HeckeElement(w.m, support)


def standard_in_kl(w: DihedralElement) -> dict[DihedralElement, LaurentPolynomial]:
    """
    Coefficients ``c_y`` with ``H_w = sum_y c_y b_y``.

    Back-substitution down the length filtration: subtract the current
    top-length standard term's KL element until nothing is left.
    """
    result: dict[DihedralElement, LaurentPolynomial] = {}
    remainder = HeckeElement.standard(w)
    while remainder:
        top = max(remainder.support, key=DihedralElement.sort_key)
        c = remainder.coeff(top)
        result[top] = c
        remainder = remainder - kl_basis(top).scale(c)
    return {y: result[y] for y in sorted(result, key=DihedralElement.sort_key)}


def expand_in_standard(coefficients: Mapping[DihedralElement, LaurentPolynomial], m: int) -> HeckeElement:
    """Evaluate ``sum_y c_y b_y`` back in the standard basis."""
    total = HeckeElement.zero(m)
    for y, c in coefficients.items():
        total = total + kl_basis(y).scale(c)
    return total


def _q_poly(c: int) -> LaurentPolynomial:
    return LaurentPolynomial.constant(c, "q")


Q = LaurentPolynomial.gen("q")


@functools.lru_cache(maxsize=None)
def _r_poly(x: DihedralElement, y: DihedralElement, side: str, choose: int) -> LaurentPolynomial:
    if x == y:
        return _q_poly(1)
    if not bruhat_leq(x, y):
        return _q_poly(0)
    descents = sorted(y.left_descents() if side == "left" else y.right_descents())
    g = descents[choose % len(descents)]
    gy, _ = mult_gen(side, g, y)
    gx, sign = mult_gen(side, g, x)
    if sign < 0:
        return _r_poly(gx, gy, side, choose)
    return (Q - 1) * _r_poly(x, gy, side, choose) + Q * _r_poly(gx, gy, side, choose)


def r_polynomial(x: DihedralElement, y: DihedralElement) -> LaurentPolynomial:
    """
    R-polynomial ``R_{x,y}(q)`` by the left-descent recursion.

    >>> from .dihedral import parse_element
    >>> str(r_polynomial(parse_element("e", 3), parse_element("st", 3)))
    'q^2 - 2q + 1'
    """
    if x.m != y.m:
        raise ValueError("elements belong to different groups")
    return _r_poly(x, y, "left", 0)


def r_polynomial_variants(x: DihedralElement, y: DihedralElement) -> list[LaurentPolynomial]:
    """R_{x,y} computed along every admissible descent choice, left and right."""
    return [_r_poly(x, y, side, k) for side in ("left", "right") for k in (0, 1)]

