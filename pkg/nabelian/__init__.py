"""nabelian - decide when proj of a bound quiver algebra is n-abelian.

Copyright (c) 2026 The nabelian developers
SPDX-License-Identifier: MIT
See LICENSE for details.

Exact linear algebra over Q and F_p, representations of bound quivers,
minimal resolutions, and the higher homological algebra needed to find the
unique n (if any) for which the category of finitely generated projective
modules is n-abelian.
"""

__version__ = "0.1.0"

from .algebra import BoundQuiverAlgebra, ProjMatrix, Quiver, build_algebra, dual_projmatrix
from .errors import (
    AlgebraMismatchError,
    AlgebraParseError,
    InadmissibleError,
    InvalidModuleError,
    NabelianError,
    NotComposableError,
    NotFiniteDimensionalError,
    PreconditionError,
    ResolutionLengthError,
    ShapeError,
    UnknownCorpusEntryError,
    UnknownVertexError,
)
from .higher import (
    CrossCheckReport,
    NAbelianVerdict,
    SequenceMode,
    SequenceOfProjectives,
    VerdictKind,
    check_sequence,
    cross_check,
    detect_n,
    double_dual_sequence,
    is_n_abelian,
    n_cokernel,
    n_kernel,
    splits,
    transpose,
)
from .homological import Bound, domdim, gldim, minimal_resolution, pdim
from .linalg import ExactMatrix, FieldSpec
from .modules import ModuleMap, Representation, projective_module, simple_module
from .parser import load_algebra, parse_algebra

__all__ = [
    "__version__",
    "BoundQuiverAlgebra",
    "ProjMatrix",
    "Quiver",
    "build_algebra",
    "dual_projmatrix",
    "NabelianError",
    "AlgebraParseError",
    "AlgebraMismatchError",
    "InadmissibleError",
    "InvalidModuleError",
    "NotComposableError",
    "NotFiniteDimensionalError",
    "PreconditionError",
    "ResolutionLengthError",
    "ShapeError",
    "UnknownCorpusEntryError",
    "UnknownVertexError",
    "CrossCheckReport",
    "NAbelianVerdict",
    "SequenceMode",
    "SequenceOfProjectives",
    "VerdictKind",
    "check_sequence",
    "cross_check",
    "detect_n",
    "double_dual_sequence",
    "is_n_abelian",
    "n_cokernel",
    "n_kernel",
    "splits",
    "transpose",
    "Bound",
    "domdim",
    "gldim",
    "minimal_resolution",
    "pdim",
    "ExactMatrix",
    "FieldSpec",
    "ModuleMap",
    "Representation",
    "projective_module",
    "simple_module",
    "load_algebra",
    "parse_algebra",
]
