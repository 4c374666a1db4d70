"""algseries: exact computation with algebraic power series.

Coefficient extraction from fixed-point equations, diagonal representations
of algebraic series, Cartier kernel closures of rational functions, digit
automata with output, Frobenius annihilating relations, and series roots of
polynomials over finite fields — all in exact arithmetic.
"""

from .algebra import (GF, QQ, BiPoly, Field, FieldDescriptor, FieldElement,
                      RationalFn, TruncSeries1, TruncSeries2, UniPoly,
                      derivative_y, diagonal_series, eval_bipoly_at_series,
                      ratfun_normalize, series_expand_ratio, substitute_xy)
from .annihilator import (FrobeniusRelation, KernelMatrix, frobenius_relation,
                          kernel_matrix, null_left_vector, verify_relation)
from .automaton import DFAO, export_dot, from_json, to_json
from .cartier import (KernelAutomaton2D, KernelState, cartier_bi, cartier_uni,
                      diagonal_automaton, kernel_output, rational_kernel)
from .diagrat import DiagonalRep, diagonal_coeffs, furstenberg_rep
from .exprparse import ExprAst, parse_poly, parse_ratfun, parse_unipoly
from .extract import (FixedPointProblem, fixed_point_coefficients,
                      fs_coefficients, fs_partial_sum)
from .roots import (BranchRoot, ModuleElement, RootsOutcome, attach_outputs,
                    cartier_closure, frobenius_from_poly, hensel_root,
                    residue_roots, roots_automata)

__version__ = "0.1.0"

__all__ = [
    "GF", "QQ", "BiPoly", "FieldElement", "RationalFn", "TruncSeries1",
    "TruncSeries2", "UniPoly", "derivative_y", "diagonal_series",
    "eval_bipoly_at_series", "ratfun_normalize", "series_expand_ratio",
    "substitute_xy", "Field", "FieldDescriptor", "ExprAst",
    "FrobeniusRelation", "KernelMatrix",
    "frobenius_relation", "kernel_matrix", "null_left_vector",
    "verify_relation", "DFAO", "export_dot", "from_json", "to_json",
    "KernelAutomaton2D", "KernelState", "cartier_bi", "cartier_uni",
    "diagonal_automaton", "kernel_output", "rational_kernel", "DiagonalRep",
    "diagonal_coeffs", "furstenberg_rep", "parse_poly", "parse_ratfun",
    "parse_unipoly", "FixedPointProblem", "fixed_point_coefficients",
    "fs_coefficients", "fs_partial_sum", "BranchRoot", "ModuleElement",
    "RootsOutcome", "attach_outputs", "cartier_closure",
    "frobenius_from_poly", "hensel_root", "residue_roots", "roots_automata",
    "__version__",
]
