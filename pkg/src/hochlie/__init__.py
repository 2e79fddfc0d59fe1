"""First Hochschild cohomology of monomial algebras as a graded Lie algebra.

Typical use::

    from hochlie import parse_input, analyze
    report = analyze(parse_input(open("kronecker.txt").read()), oracle=True)
    print(report.render("text").decode())
"""

from .analysis import AnalysisReport, analyze, analyze_component
from .classify import (ClassificationReport, combinatorial_radical, criteria, l0_basis,
                       saturation_order, semisimple_quotient_model)
from .cohomology import GradedH1, bracket, compute_h1, structure_constants
from .crowns import CrownSpec, group_algebra
from .errors import HochError, InfiniteDimensional, InputError, InternalError
from .lie import LieAlgebra, pgl, series_and_center, sl, witt
from .linalg import Field, QuotientSpace, Subspace
from .oracle import build_algebra, cross_check, derivations, h1_direct, inner_derivations
from .parser import InputDocument, parse_input
from .quiver import Path, PathBasis, Quiver, enumerate_basis, substitute, validate_relations

__version__ = "0.1.0"

__all__ = [
    "AnalysisReport", "ClassificationReport", "CrownSpec", "Field", "GradedH1", "HochError",
    "InfiniteDimensional", "InputDocument", "InputError", "InternalError", "LieAlgebra", "Path",
    "PathBasis", "Quiver", "QuotientSpace", "Subspace", "analyze", "analyze_component", "bracket",
    "build_algebra", "combinatorial_radical", "compute_h1", "criteria", "cross_check",
    "derivations", "enumerate_basis", "group_algebra", "h1_direct", "inner_derivations",
    "l0_basis", "parse_input", "pgl", "saturation_order", "semisimple_quotient_model",
    "series_and_center", "sl", "structure_constants", "substitute", "validate_relations", "witt",
]
