"""
Character-level model of graded category O for a dihedral group.

Everything here works with graded characters and multisets of shifted
projectives; no modules or morphisms are ever built.

Shift convention: ``M(n)_i = M_{i+n}``.  Writing ``mult_M(z, d)`` for the
multiplicity ``[M : L_z(d)]`` this gives

* ``mult_{M(k)}(z, c) = mult_M(z, c - k)``
* ``dim gHom(P_z(a), M) = mult_M(z, a)``

The Verma module ``Delta_y`` has a weight filtration whose layer ``i`` is
``L_y`` for ``i = 0`` and the sum of ``L_x(-i)`` over ``l(x) = l(y) + i``
otherwise.  Its projective resolution has ``j``-th term the sum of
``P_z(-j)`` over ``z <= x`` with ``l(x) - l(z) = j``, and all differentials
of ``gHom(P^., Delta_y(i))`` vanish, so Ext dimensions are read off termwise.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterator, Mapping

from .dihedral import DihedralElement, bruhat_leq, elements
from .hecke import r_polynomial
from .laurent import BiLaurentPolynomial, LaurentPolynomial


class NotComparableError(ValueError):
    """Raised when an operation needs ``x >= y`` in the Bruhat order."""


def _key(entry: tuple[DihedralElement, int]) -> tuple:
    z, d = entry
    return (z.sort_key(), -d)


class GradedCharacter:
    """
    Multiplicities ``[M : L_z(d)]`` as a finitely supported mapping.

    ``layers`` optionally records which filtration index each entry belongs to.
    """

    __slots__ = ("_mult", "layers")

    def __init__(
        self,
        multiplicities: Mapping[tuple[DihedralElement, int], int] | None = None,
        layers: Mapping[tuple[DihedralElement, int], int] | None = None,
    ):
        mult = {}
        for key, n in (multiplicities or {}).items():
            if n < 0:
                raise ValueError(f"negative multiplicity {n} at {key}")
            if n:
                mult[key] = n
        self._mult = mult
        self.layers = dict(layers) if layers else {}

    def multiplicity(self, z: DihedralElement, d: int) -> int:
        return self._mult.get((z, d), 0)

    __call__ = multiplicity

    def shift(self, k: int) -> GradedCharacter:
        """Character of ``M(k)``."""
        return GradedCharacter(
            {(z, d + k): n for (z, d), n in self._mult.items()},
            {(z, d + k): i for (z, d), i in self.layers.items()},
        )

    @property
    def multiplicities(self) -> dict[tuple[DihedralElement, int], int]:
        return dict(self._mult)

    def items(self) -> Iterator[tuple[tuple[DihedralElement, int], int]]:
        for key in sorted(self._mult, key=_key):
            yield key, self._mult[key]

    def total(self) -> int:
        return sum(self._mult.values())

    def layer(self, i: int) -> list[tuple[DihedralElement, int]]:
        return sorted((k for k, n in self.layers.items() if n == i), key=_key)

    def __eq__(self, other) -> bool:
        if not isinstance(other, GradedCharacter):
            return NotImplemented
        return self._mult == other._mult

    def __repr__(self) -> str:
        body = ", ".join(f"({z},{d}): {n}" for (z, d), n in self.items())
        return f"GradedCharacter({{{body}}})"


def weight_filtration_layers(y: DihedralElement) -> list[list[tuple[DihedralElement, int]]]:
    """Layer ``i`` of the weight filtration of ``Delta_y`` as ``(x, shift)`` pairs."""
    layers: list[list[tuple[DihedralElement, int]]] = [[(y, 0)]]
    for i in range(1, y.m - y.length + 1):
        layers.append(
            [(x, -i) for x in elements(y.m) if x.length == y.length + i and bruhat_leq(y, x)]
        )
    return layers


def verma_character(y: DihedralElement) -> GradedCharacter:
    """
    Graded character of ``Delta_y``, with filtration indices attached.

    >>> from .dihedral import parse_element
    >>> verma_character(parse_element("s", 2))
    GradedCharacter({(s,0): 1, (w0,-1): 1})
    """
    mult: dict[tuple[DihedralElement, int], int] = {}
    layer_of: dict[tuple[DihedralElement, int], int] = {}
    for i, layer in enumerate(weight_filtration_layers(y)):
        for entry in layer:
            mult[entry] = mult.get(entry, 0) + 1
            layer_of[entry] = i
    return GradedCharacter(mult, layer_of)


@dataclass(frozen=True)
class Resolution:
    """Projective resolution terms; ``terms[j]`` lists ``(z, shift)`` summands."""

    x: DihedralElement
    terms: tuple[tuple[tuple[DihedralElement, int], ...], ...]

    def __len__(self) -> int:
        return len(self.terms)

    def term_sizes(self) -> list[int]:
        return [len(t) for t in self.terms]


def proj_resolution(x: DihedralElement) -> Resolution:
    terms = []
    for j in range(x.length + 1):
        term = tuple(
            (z, -j)
            for z in elements(x.m)
            if bruhat_leq(z, x) and x.length - z.length == j
        )
        terms.append(term)
    return Resolution(x, tuple(terms))


def hom_projective_to_verma(z: DihedralElement, a: int, y: DihedralElement, k: int) -> int:
    """``dim gHom(P_z(a), Delta_y(k))``, read off the shifted Verma character."""
    return verma_character(y).shift(k).multiplicity(z, a)


def hom_verma_verma(x: DihedralElement, y: DihedralElement, k: int) -> int:
    """``dim gHom(Delta_x, Delta_y(k))``: 1 iff ``x >= y`` and ``k = l(x) - l(y)``."""
    return int(bruhat_leq(y, x) and k == x.length - y.length)


@dataclass
class ExtTable:
    """Nonzero dimensions of ``gExt^j_i(Delta_x, Delta_y)`` keyed by ``(j, i)``."""

    x: DihedralElement
    y: DihedralElement
    entries: dict[tuple[int, int], int] = field(default_factory=dict)

    @property
    def m(self) -> int:
        return self.x.m

    def __post_init__(self):
        self.entries = {k: v for k, v in self.entries.items() if v}

    def dim(self, j: int, i: int) -> int:
        return self.entries.get((j, i), 0)

    def sorted_entries(self) -> list[tuple[int, int, int]]:
        return [(j, i, self.entries[(j, i)]) for j, i in sorted(self.entries)]

    def is_empty(self) -> bool:
        return not self.entries

    def generating_function(self) -> BiLaurentPolynomial:
        return BiLaurentPolynomial(dict(self.entries))

    def ungraded(self) -> LaurentPolynomial:
        """``sum_j (sum_i dim gExt^j_i) q^j``."""
        out: dict[int, int] = {}
        for (j, _), d in self.entries.items():
            out[j] = out.get(j, 0) + d
        return LaurentPolynomial(out, "q")


def ext_via_resolution(x: DihedralElement, y: DihedralElement) -> ExtTable:
    """
    Ext dimensions as ``dim gHom(P^j, Delta_y(i))`` over the resolution of
    ``Delta_x``.  Candidate degrees ``i`` are those where some summand
    ``P_z(a)`` meets a composition factor ``L_z(d)`` of ``Delta_y``, i.e.
    ``i = a - d``; the Hom dimension is then summed over the whole term.
    """
    if x.m != y.m:
        raise ValueError("elements belong to different groups")
    char = verma_character(y)
    entries: dict[tuple[int, int], int] = {}
    for j, term in enumerate(proj_resolution(x).terms):
        degrees = {a - d for z, a in term for (w, d) in char.multiplicities if w == z}
        for i in sorted(degrees):
            dim = sum(hom_projective_to_verma(z, a, y, i) for z, a in term)
            if dim:
                entries[(j, i)] = dim
    return ExtTable(x, y, entries)


def ext_closed_form(x: DihedralElement, y: DihedralElement) -> ExtTable:
    """Dimensions 1 at ``j in {0, r}`` and 2 for ``0 < j < r`` along ``i = r - 2j``."""
    if x.m != y.m:
        raise ValueError("elements belong to different groups")
    if not bruhat_leq(y, x):
        return ExtTable(x, y)
    r = x.length - y.length
    entries = {}
    for j in range(r + 1):
        i = r - 2 * j
        if j > 0 and i + j > 0:
            entries[(j, i)] = 2
        elif j * (i + j) == 0:
            entries[(j, i)] = 1
    return ExtTable(x, y, entries)


def _require_geq(x: DihedralElement, y: DihedralElement) -> None:
    if x.m != y.m:
        raise ValueError("elements belong to different groups")
    if not bruhat_leq(y, x):
        raise NotComparableError(f"{x} >= {y} fails in the Bruhat order")


def e_generating_function(x: DihedralElement, y: DihedralElement) -> BiLaurentPolynomial:
    """
    ``e(x, y) = sum dim gExt^j_i q^j t^i``; requires ``x >= y``.

    >>> from .dihedral import parse_element
    >>> str(e_generating_function(parse_element("w0", 2), parse_element("e", 2)))
    't^2 + 2q + q^2t^-2'
    """
    _require_geq(x, y)
    return ext_closed_form(x, y).generating_function()


@dataclass(frozen=True)
class GabberJosephReport:
    x: DihedralElement
    y: DihedralElement
    ext_poly: LaurentPolynomial
    r_poly: LaurentPolynomial
    difference: LaurentPolynomial

    def rows(self) -> list[tuple[int, int, int, int]]:
        """``(j, ext coefficient, R coefficient, difference)`` for every degree in range."""
        exps = set(self.ext_poly) | set(self.r_poly)
        lo, hi = (min(exps), max(exps)) if exps else (0, 0)
        return [
            (j, self.ext_poly.coeff(j), self.r_poly.coeff(j), self.difference.coeff(j))
            for j in range(lo, hi + 1)
        ]


def gabber_joseph_report(x: DihedralElement, y: DihedralElement) -> GabberJosephReport:
    """Ungraded Ext dimensions next to ``R_{y,x}(q)``; nothing is asserted."""
    _require_geq(x, y)
    ext_poly = ext_via_resolution(x, y).ungraded()
    r_poly = r_polynomial(y, x)
    return GabberJosephReport(x, y, ext_poly, r_poly, ext_poly - r_poly)
