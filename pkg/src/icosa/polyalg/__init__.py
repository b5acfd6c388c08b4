from .linalg import ExactMatrix, det_bareiss, kernel_basis, matrix_rank
from .modp import irreducible_mod_p
from .poly import MultiPoly, PolyRing
from .resultant import resultant_wrt, sylvester_matrix
from .textfmt import parse_poly, render_poly
from .univar import gcd_uni, squarefree_part_poly as squarefree_part

__all__ = [
    "ExactMatrix",
    "MultiPoly",
    "PolyRing",
    "det_bareiss",
    "gcd_uni",
    "irreducible_mod_p",
    "kernel_basis",
    "matrix_rank",
    "parse_poly",
    "render_poly",
    "resultant_wrt",
    "squarefree_part",
    "sylvester_matrix",
]
