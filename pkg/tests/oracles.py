"""Independent reference computations used only by the tests."""

from dihedral_ext.dihedral import DihedralElement, bruhat_leq, elements
from dihedral_ext.hecke import HeckeElement, bar_hecke
from dihedral_ext.laurent import BiLaurentPolynomial, LaurentPolynomial


def r_polynomial_from_bar(x: DihedralElement, y: DihedralElement) -> LaurentPolynomial:
    """
    Read ``R_{x,y}`` off the bar involution.  With ``H_w = v^l(w) T_w`` and
    ``q = v^-2`` one has
    ``bar(H_y) = sum_x (-1)^(l(y)-l(x)) v^(l(y)-l(x)) R_{x,y}(v^-2) H_x``.
    """
    coeff = bar_hecke(HeckeElement.standard(y)).coeff(x)
    k = y.length - x.length
    scaled = coeff * LaurentPolynomial.monomial(-k, -1 if k % 2 else 1, "v")
    out = {}
    for e, c in scaled.items():
        assert e % 2 == 0 and e <= 0, (x, y, scaled)
        out[-e // 2] = c
    return LaurentPolynomial(out, "q")


def corollary_polynomial(r: int) -> BiLaurentPolynomial:
    """t^r + 2q t^(r-2) + ... + 2q^(r-1) t^-(r-2) + q^r t^-r, written out termwise."""
    if r == 0:
        return BiLaurentPolynomial({(0, 0): 1})
    terms = {(0, r): 1, (r, -r): 1}
    for j in range(1, r):
        terms[(j, r - 2 * j)] = 2
    return BiLaurentPolynomial(terms)


def brute_force_ext(x: DihedralElement, y: DihedralElement) -> dict:
    """Count z with l(z) = l(x) - j, y <= z <= x, placed at i = l(z) - l(y) - j."""
    out = {}
    for z in elements(x.m):
        if bruhat_leq(z, x) and bruhat_leq(y, z):
            j = x.length - z.length
            key = (j, z.length - y.length - j)
            out[key] = out.get(key, 0) + 1
    return out
