"""Graded Ext groups between Verma modules for dihedral Coxeter groups."""

from .category_o import (
    ExtTable,
    GabberJosephReport,
    GradedCharacter,
    NotComparableError,
    Resolution,
    e_generating_function,
    ext_closed_form,
    ext_via_resolution,
    gabber_joseph_report,
    hom_projective_to_verma,
    hom_verma_verma,
    proj_resolution,
    verma_character,
)
from .dihedral import (
    DihedralElement,
    ElementParseError,
    GroupParams,
    bruhat_leq,
    bruhat_leq_subword_oracle,
    elements,
    mult_gen,
    parse_element,
)
from .hecke import HeckeElement, bar_hecke, h_mult, kl_basis, r_polynomial, standard_in_kl
from .laurent import BiLaurentPolynomial, LaurentPolynomial

__version__ = "0.1.0"
