"""Higher homological layer: duals, transposes, n-kernels and the n-abelian decision.

Copyright (c) 2026 The nabelian developers
SPDX-License-Identifier: MIT
See LICENSE for details.

The category studied is proj Λ, the finitely generated projective right
Λ-modules. A morphism there is a ProjMatrix. Exactness conditions on
sequences of such morphisms are checked on the induced maps between
projective modules (the contravariant side, over Λ) and between their
duals (the covariant side, over the opposite algebra).
"""

import itertools
import random
from dataclasses import dataclass, field as dc_field
from enum import Enum
from typing import Any, Dict, List, Optional, Sequence, Tuple

from .algebra import BoundQuiverAlgebra, ProjMatrix, dual_projmatrix, projmatrix_hom_basis
from .errors import NabelianError, NotComposableError, PreconditionError, ResolutionLengthError
from .homological import (
    Bound,
    DimValue,
    default_cap,
    domdim,
    ext_table,
    format_value,
    gldim,
    grade,
    is_injective_via_ext,
    is_projective_via_ext,
    minimal_resolution,
    pdim,
    projective_presentation,
    stable_hom_dim,
    tor_table,
    tor_table_via_right,
)
from .linalg import ExactMatrix, solve
from .log import get_logger
from .modules import (
    ModuleMap,
    Representation,
    hom_basis,
    is_injective,
    is_projective,
    map_cokernel,
    map_kernel,
    map_to_projmatrix,
    projective_module,
    projmatrix_to_map,
    random_module,
    random_projmatrix,
    regular_module,
    simple_module,
)

logger = get_logger(__name__)

__all__ = [
    "StarDual",
    "Transpose",
    "DoubleDualSequence",
    "TorsionFreeness",
    "SequenceOfProjectives",
    "SequenceMode",
    "VerdictKind",
    "NAbelianEvidence",
    "NAbelianCheck",
    "NAbelianVerdict",
    "CheckStatus",
    "CheckResult",
    "CrossCheckReport",
    "star_dual",
    "eta",
    "transpose",
    "is_k_torsion_free",
    "double_dual_sequence",
    "is_reflexive",
    "is_syzygy_module",
    "is_m_spherical",
    "m_r",
    "m_l",
    "n_cokernel",
    "n_kernel",
    "check_sequence",
    "splitting_tests",
    "splits",
    "trivial_n_exact",
    "is_mono_in_proj",
    "is_epi_in_proj",
    "is_von_neumann_regular",
    "is_n_abelian",
    "detect_n",
    "cross_check",
]


@dataclass(frozen=True, eq=False)
class StarDual:
    """M* = Hom(M, Λ) with (M*)_i = Hom(M, P(i)), as a module over the opposite."""

    source: Representation
    module: Representation
    bases: Tuple[Tuple[ModuleMap, ...], ...]


def _left_multiplication(A: BoundQuiverAlgebra, k: int) -> ModuleMap:
    """P(j) -> P(i), x -> a x, for the arrow a = k: i -> j."""
    i, j = A.quiver.arrow_source(k), A.quiver.arrow_target(k)
    f = ProjMatrix(A, (j,), (i,), (({A.arrow_basis_index(k): A.field.one},),))
    return projmatrix_to_map(f)


def _coordinates(basis: Sequence[ModuleMap], f: ModuleMap, F) -> Tuple:
    if not basis:
        return ()
    B = ExactMatrix.from_rows(F, [b.to_vector() for b in basis], len(basis[0].to_vector()))
    X = solve(B, ExactMatrix.from_rows(F, [f.to_vector()], B.cols))
    if X is None:
        raise NabelianError("map is not in the span of the Hom basis")
    return X.row(0)


def star_dual(M: Representation) -> StarDual:
    A = M.algebra
    F = M.field
    op = A.opposite()
    projectives = [projective_module(A, i) for i in range(A.vertex_count)]
    bases = tuple(tuple(hom_basis(M, P)) for P in projectives)
    dims = tuple(len(b) for b in bases)
    maps = []
    for k in range(len(A.quiver.arrows)):
        i, j = A.quiver.arrow_source(k), A.quiver.arrow_target(k)
        L = _left_multiplication(A, k)
        rows = [list(_coordinates(bases[i], phi.compose(L), F)) for phi in bases[j]]
        maps.append(ExactMatrix.from_rows(F, rows, dims[i]))
    name = f"{M.name}*" if M.name else ""
    return StarDual(M, Representation(op, dims, tuple(maps), name), bases)


def _canonical_map(M: Representation) -> Tuple[ModuleMap, StarDual, StarDual]:
    """The map M -> M**, m -> (φ -> φ(m)), with both duals.

    The vertex-v part of P(i) and the vertex-i part of P^op(v) are both
    spanned by the paths from i to v, in the same order, so φ(m) is already
    a coordinate vector of the target.
    """
    A = M.algebra
    F = M.field
    first = star_dual(M)
    second = star_dual(first.module)
    blocks = []
    for v in range(A.vertex_count):
        target = projective_module(A.opposite(), v)
        rows = []
        for s in range(M.dims[v]):
            pieces = []
            for i in range(A.vertex_count):
                part = [list(phi.blocks[v].row(s)) for phi in first.bases[i]]
                pieces.append(ExactMatrix.from_rows(F, part, len(A.paths_between(i, v))))
            evaluation = ModuleMap(first.module, target, tuple(pieces))
            rows.append(list(_coordinates(second.bases[v], evaluation, F)))
        blocks.append(ExactMatrix.from_rows(F, rows, second.module.dims[v]))
    return ModuleMap(M, second.module, tuple(blocks)), first, second


def eta(M: Representation) -> ModuleMap:
    return _canonical_map(M)[0]


@dataclass(frozen=True, eq=False)
class Transpose:
    module: Representation
    presentation: ProjMatrix


def transpose(M: Representation) -> Transpose:
    """Tr M = coker(d*) for the minimal presentation P_1 --d--> P_0 -> M."""
    d = projective_presentation(M).differential
    T, _ = map_cokernel(projmatrix_to_map(dual_projmatrix(d)))
    return Transpose(T, d)


@dataclass(frozen=True)
class TorsionFreeness:
    holds: bool
    k: int
    ext: Tuple[int, ...]

    def __bool__(self) -> bool:
        return self.holds


def is_k_torsion_free(M: Representation, k: int, tr: Optional[Transpose] = None) -> TorsionFreeness:
    """Ext^i(Tr M, Λ) = 0 for 1 <= i <= k."""
    if k < 1:
        raise ValueError("k must be at least 1")
    T = (tr or transpose(M)).module
    table = ext_table(T, regular_module(T.algebra), k)
    return TorsionFreeness(all(v == 0 for v in table.values[1:]), k, table.values)


@dataclass(frozen=True, eq=False)
class DoubleDualSequence:
    """0 -> e1 -> M -> M** -> e2 -> 0."""

    module: Representation
    dual: Representation
    double_dual: Representation
    eta: ModuleMap
    e1: Representation
    e1_inclusion: ModuleMap
    e2: Representation
    e2_projection: ModuleMap
    ext_dims: Tuple[int, int]

    @property
    def euler(self) -> int:
        return (
            self.e1.total_dimension
            - self.module.total_dimension
            + self.double_dual.total_dimension
            - self.e2.total_dimension
        )

    def is_exact(self) -> bool:
        return (
            self.euler == 0
            and self.e1_inclusion.is_injective()
            and self.e2_projection.is_surjective()
            and self.e1_inclusion.compose(self.eta).is_zero()
            and self.eta.compose(self.e2_projection).is_zero()
        )

    def matches_ext(self) -> bool:
        return (self.e1.total_dimension, self.e2.total_dimension) == self.ext_dims


def double_dual_sequence(M: Representation, check: bool = True, tr: Optional[Transpose] = None) -> DoubleDualSequence:
    canonical, first, second = _canonical_map(M)
    e1, inclusion = map_kernel(canonical)
    e2, projection = map_cokernel(canonical)
    T = (tr or transpose(M)).module
    table = ext_table(T, regular_module(T.algebra), 2)
    seq = DoubleDualSequence(
        M, first.module, second.module, canonical, e1, inclusion, e2, projection,
        (table.values[1], table.values[2]),
    )
    if check and not (seq.is_exact() and seq.matches_ext()):
        raise NabelianError(
            f"double dual sequence of {M.name or 'module'} disagrees with Ext of its transpose"
        )
    return seq


def is_reflexive(M: Representation) -> bool:
    return eta(M).is_isomorphism()


def is_syzygy_module(M: Representation) -> bool:
    return eta(M).is_injective()


def is_m_spherical(M: Representation, m: int) -> bool:
    """pdim M <= m and Ext^i(M, Λ) = 0 for 1 <= i <= m - 1."""
    if m < 1:
        raise ValueError("m must be at least 1")
    p = pdim(M, m)
    if not isinstance(p, int):
        return False
    if m == 1:
        return True
    return ext_table(M, regular_module(M.algebra), m - 1).vanishes(1, m - 1)


def m_r(f: ProjMatrix) -> Representation:
    """coker P(f), a right Λ-module."""
    M, _ = map_cokernel(projmatrix_to_map(f))
    return M


def m_l(f: ProjMatrix) -> Representation:
    """coker of the dual of f, a module over the opposite algebra."""
    M, _ = map_cokernel(projmatrix_to_map(dual_projmatrix(f)))
    return M


class SequenceMode(Enum):
    PRE_SEGMENT = "PreSegment"
    SEGMENT = "Segment"
    PRE_COSEGMENT = "PreCosegment"
    COSEGMENT = "Cosegment"
    N_EXACT = "NExact"


@dataclass(frozen=True, eq=False)
class SequenceOfProjectives:
    """Composable morphisms of proj Λ, stored in flow order."""

    morphisms: Tuple[ProjMatrix, ...]

    def __post_init__(self) -> None:
        if not self.morphisms:
            raise PreconditionError("a sequence needs at least one morphism")
        for f, g in zip(self.morphisms, self.morphisms[1:]):
            f.algebra.check_same(g.algebra)
            if f.col_vertices != g.row_vertices:
                raise NotComposableError(
                    f"morphism with target {f.col_vertices} cannot feed source {g.row_vertices}"
                )

    @property
    def algebra(self) -> BoundQuiverAlgebra:
        return self.morphisms[0].algebra

    @property
    def objects(self) -> List[Tuple[int, ...]]:
        return [self.morphisms[0].row_vertices] + [f.col_vertices for f in self.morphisms]

    def __len__(self) -> int:
        return len(self.morphisms)

    def dual(self) -> "SequenceOfProjectives":
        return SequenceOfProjectives(tuple(dual_projmatrix(f) for f in reversed(self.morphisms)))

    def prepend(self, f: ProjMatrix) -> "SequenceOfProjectives":
        return SequenceOfProjectives((f,) + self.morphisms)

    def direct_sum(self, other: "SequenceOfProjectives") -> "SequenceOfProjectives":
        if len(self) != len(other):
            raise PreconditionError(f"cannot add sequences of lengths {len(self)} and {len(other)}")
        return SequenceOfProjectives(tuple(f.direct_sum(g) for f, g in zip(self.morphisms, other.morphisms)))

    def to_json(self) -> dict:
        A = self.algebra
        return {
            "objects": [[A.vertex_label(v) for v in obj] for obj in self.objects],
            "morphisms": [f.to_json() for f in self.morphisms],
        }


def _exact_chain(maps: Sequence[ModuleMap], leading_zero: bool) -> bool:
    """Exactness of A_0 -> A_1 -> ... -> A_m at the interior objects.

    With ``leading_zero`` the first map must also be injective.
    """
    if leading_zero and not maps[0].is_injective():
        return False
    for f, g in zip(maps, maps[1:]):
        if not f.compose(g).is_zero():
            return False
        kernel_dims = tuple(a - b for a, b in zip(g.source.dims, g.ranks()))
        if f.ranks() != kernel_dims:
            return False
    return True


def check_sequence(seq: SequenceOfProjectives, mode: SequenceMode, n: Optional[int] = None) -> bool:
    contravariant = [projmatrix_to_map(f) for f in seq.morphisms]
    covariant = [projmatrix_to_map(f) for f in seq.dual().morphisms]
    if mode is SequenceMode.PRE_SEGMENT:
        return _exact_chain(contravariant, True)
    if mode is SequenceMode.SEGMENT:
        return _exact_chain(contravariant, True) and _exact_chain(covariant, False)
    if mode is SequenceMode.PRE_COSEGMENT:
        return _exact_chain(covariant, True)
    if mode is SequenceMode.COSEGMENT:
        return _exact_chain(covariant, True) and _exact_chain(contravariant, False)
    if n is not None and len(seq) != n + 1:
        raise PreconditionError(f"an {n}-exact sequence has {n + 1} morphisms, got {len(seq)}")
    return _exact_chain(contravariant, True) and _exact_chain(covariant, True)


def n_cokernel(f: ProjMatrix, n: int) -> SequenceOfProjectives:
    """g_1, ..., g_n with 0 -> (Z_n, -) -> ... -> (Z_1, -) -> (Y, -) -> (X, -) exact."""
    if n < 1:
        raise ValueError("n must be at least 1")
    A = f.algebra
    fstar = projmatrix_to_map(dual_projmatrix(f))
    K, inclusion = map_kernel(fstar)
    res = minimal_resolution(K, n - 1)
    if not res.complete:
        raise ResolutionLengthError(
            f"the kernel of the dual needs a resolution longer than {n - 1}; no {n}-cokernel exists"
        )
    first = map_to_projmatrix(res.augmentation.compose(inclusion), res.terms[0], f.col_vertices)
    morphisms = [dual_projmatrix(first)]
    for d in res.differentials:
        morphisms.append(dual_projmatrix(d))
    while len(morphisms) < n:
        morphisms.append(ProjMatrix.zero(A, morphisms[-1].col_vertices, ()))
    out = SequenceOfProjectives(tuple(morphisms))
    if not check_sequence(out.prepend(f), SequenceMode.PRE_COSEGMENT):
        raise NabelianError("computed n-cokernel fails its defining exactness")
    return out


def n_kernel(f: ProjMatrix, n: int) -> SequenceOfProjectives:
    """h_n, ..., h_1 ending in the source of f, computed over the opposite algebra."""
    dual_cokernel = n_cokernel(dual_projmatrix(f), n)
    out = dual_cokernel.dual()
    if not check_sequence(SequenceOfProjectives(out.morphisms + (f,)), SequenceMode.PRE_SEGMENT):
        raise NabelianError("computed n-kernel fails its defining exactness")
    return out


def trivial_n_exact(A: BoundQuiverAlgebra, vertices: Sequence[int], n: int, position: int = 1) -> SequenceOfProjectives:
    """Z_{n+1} -> ... -> Z_0 with h_position the identity of ⊕P(vertices), all else zero."""
    if not 1 <= position <= n + 1:
        raise ValueError("position must lie in 1..n+1")
    X = tuple(vertices)
    objects = [X if i in (position, position - 1) else () for i in range(n + 1, -1, -1)]
    morphisms = []
    for src, tgt, i in zip(objects, objects[1:], range(n + 1, 0, -1)):
        if i == position:
            morphisms.append(ProjMatrix.identity(A, X))
        else:
            morphisms.append(ProjMatrix.zero(A, src, tgt))
    return SequenceOfProjectives(tuple(morphisms))


def _solvable(rows: List[List], target: List, F) -> bool:
    if not target:
        return True
    if not rows:
        return all(x == 0 for x in target)
    B = ExactMatrix.from_rows(F, rows, len(target))
    return solve(B, ExactMatrix.from_rows(F, [target], len(target))) is not None


def splitting_tests(seq: SequenceOfProjectives) -> Tuple[bool, bool]:
    """(h_1 has a section, h_{n+1} has a retraction)."""
    A = seq.algebra
    F = A.field
    h1 = seq.morphisms[-1]
    z1, z0 = h1.row_vertices, h1.col_vertices
    section_rows = [b.compose(h1).coefficient_vector() for b in projmatrix_hom_basis(A, z0, z1)]
    section = _solvable(section_rows, ProjMatrix.identity(A, z0).coefficient_vector(), F)
    top = seq.morphisms[0]
    zt, zn = top.row_vertices, top.col_vertices
    retraction_rows = [top.compose(b).coefficient_vector() for b in projmatrix_hom_basis(A, zn, zt)]
    retraction = _solvable(retraction_rows, ProjMatrix.identity(A, zt).coefficient_vector(), F)
    return section, retraction


def splits(seq: SequenceOfProjectives) -> bool:
    if not check_sequence(seq, SequenceMode.N_EXACT):
        raise PreconditionError("splits() needs an n-exact sequence")
    section, retraction = splitting_tests(seq)
    if section != retraction:
        raise NabelianError("section and retraction tests disagree on an n-exact sequence")
    return section


def is_mono_in_proj(f: ProjMatrix) -> bool:
    return projmatrix_to_map(f).is_injective()


def is_epi_in_proj(f: ProjMatrix) -> bool:
    return projmatrix_to_map(dual_projmatrix(f)).is_injective()


def is_von_neumann_regular(A: BoundQuiverAlgebra) -> bool:
    return gldim(A, 1, warn=False) == 0


@dataclass(frozen=True)
class NAbelianCheck:
    holds: bool
    n: int
    gldim: DimValue
    domdim: DimValue

    def __bool__(self) -> bool:
        return self.holds


def _at_least(value: DimValue, bound: int) -> bool:
    if isinstance(value, Bound):
        return value in (Bound.INFINITE, Bound.AT_LEAST_CAP)
    return value >= bound


def is_n_abelian(A: BoundQuiverAlgebra, n: int) -> NAbelianCheck:
    """gldim Λ <= n + 1 <= domdim Λ."""
    if n < 1:
        raise ValueError("n must be at least 1")
    # both caps sit just past the values that matter for n
    g = gldim(A, n + 2, warn=False)
    d = domdim(A, n + 1, warn=False)
    holds = isinstance(g, int) and g <= n + 1 and _at_least(d, n + 1)
    return NAbelianCheck(holds, n, g, d)


class VerdictKind(Enum):
    ALL_N = "AllN"
    EXACTLY_N = "ExactlyN"
    NOT_N_ABELIAN_UP_TO = "NotNAbelianUpTo"


@dataclass(frozen=True)
class NAbelianEvidence:
    gldim: DimValue
    gldim_op: DimValue
    domdim: DimValue
    codomdim: DimValue
    justification: str

    def to_json(self) -> dict:
        return {
            "gldim": format_value(self.gldim),
            "gldim_op": format_value(self.gldim_op),
            "domdim": format_value(self.domdim),
            "codomdim": format_value(self.codomdim),
            "justification": self.justification,
        }


@dataclass(frozen=True, eq=False)
class NAbelianVerdict:
    algebra: BoundQuiverAlgebra
    kind: VerdictKind
    n: Optional[int]
    cap: int
    evidence: NAbelianEvidence

    @property
    def label(self) -> str:
        if self.kind is VerdictKind.ALL_N:
            return "AllN"
        if self.kind is VerdictKind.EXACTLY_N:
            return f"ExactlyN({self.n})"
        return f"NotNAbelianUpTo({self.cap})"

    def claims(self, n: int) -> bool:
        """Whether this verdict asserts that proj Λ is n-abelian."""
        return self.kind is VerdictKind.ALL_N or (self.kind is VerdictKind.EXACTLY_N and self.n == n)

    def is_consistent(self) -> bool:
        g, d = self.evidence.gldim, self.evidence.domdim
        if self.kind is VerdictKind.ALL_N:
            return g == 0
        if self.kind is VerdictKind.EXACTLY_N:
            return g == (self.n or 0) + 1 and _at_least(d, g)
        return not (isinstance(g, int) and 2 <= g <= self.cap and _at_least(d, g))

    def to_json(self) -> dict:
        return {"result": self.label, "n": self.n, "cap": self.cap, "evidence": self.evidence.to_json()}


def detect_n(A: BoundQuiverAlgebra, cap: Optional[int] = None) -> NAbelianVerdict:
    """The unique n for which proj Λ is n-abelian, if any."""
    if cap is None:
        cap = max(default_cap(A), 2)
    if cap < 2:
        raise ValueError("cap must be at least 2")
    op = A.opposite()
    g = gldim(A, cap)
    g_op = gldim(op, cap)
    if g == 0:
        d = domdim(A, cap)
        evidence = NAbelianEvidence(g, g_op, d, domdim(op, cap), "gldim 0: von Neumann regular, n-abelian for every n")
        verdict = NAbelianVerdict(A, VerdictKind.ALL_N, None, cap, evidence)
    elif isinstance(g, int) and g >= 2:
        n = g - 1
        dcap = 2 * (n + 2)
        d = domdim(A, dcap)
        d_op = domdim(op, dcap)
        check = is_n_abelian(A, n)
        if check:
            why = f"gldim {g} = n + 1 <= domdim {format_value(d)}"
            kind = VerdictKind.EXACTLY_N
        else:
            why = f"gldim {g} forces n = {n} but domdim {format_value(d)} < {g}"
            kind = VerdictKind.NOT_N_ABELIAN_UP_TO
        verdict = NAbelianVerdict(A, kind, n if check else None, cap, NAbelianEvidence(g, g_op, d, d_op, why))
    else:
        d = domdim(A, cap)
        if g == 1:
            why = "gldim 1 would force n = 0; no n >= 1 is possible"
        else:
            why = f"gldim exceeds {cap}; no n <= {cap - 1} satisfies gldim = n + 1"
        verdict = NAbelianVerdict(
            A, VerdictKind.NOT_N_ABELIAN_UP_TO, None, cap, NAbelianEvidence(g, g_op, d, domdim(op, cap), why)
        )
    logger.info("%r: %s (%s)", A, verdict.label, verdict.evidence.justification)
    return verdict


class CheckStatus(Enum):
    PASS = "PASS"
    FAIL = "FAIL"
    FATAL = "FATAL"
    SKIP = "SKIP"


@dataclass
class CheckResult:
    name: str
    status: CheckStatus
    samples: int
    seed: int
    witness: Optional[str] = None
    detail: Dict[str, Any] = dc_field(default_factory=dict)

    def to_json(self) -> dict:
        return {
            "name": self.name,
            "status": self.status.value,
            "samples": self.samples,
            "seed": self.seed,
            "witness": self.witness,
            "detail": self.detail,
        }


@dataclass
class CrossCheckReport:
    algebra: BoundQuiverAlgebra
    n: int
    seed: int
    verdict: NAbelianVerdict
    checks: List[CheckResult]

    @property
    def fatal(self) -> bool:
        return any(c.status is CheckStatus.FATAL for c in self.checks)

    @property
    def failed(self) -> bool:
        return any(c.status in (CheckStatus.FAIL, CheckStatus.FATAL) for c in self.checks)

    def to_json(self) -> dict:
        return {"n": self.n, "seed": self.seed, "checks": [c.to_json() for c in self.checks]}


class _Samples:
    """Seeded sample modules and their derived data, computed once."""

    def __init__(self, A: BoundQuiverAlgebra, seed: int, max_vertex_dim: int):
        self.algebra = A
        self.seed = seed
        self.max_vertex_dim = max_vertex_dim
        self._modules: Dict[int, Representation] = {}
        self._transposes: Dict[int, Transpose] = {}
        self._dds: Dict[int, DoubleDualSequence] = {}
        self._pdims: Dict[Tuple[int, int], DimValue] = {}

    def module(self, k: int) -> Representation:
        if k not in self._modules:
            self._modules[k] = random_module(self.algebra, self.seed + k, self.max_vertex_dim)
        return self._modules[k]

    def transpose(self, k: int) -> Transpose:
        if k not in self._transposes:
            self._transposes[k] = transpose(self.module(k))
        return self._transposes[k]

    def dds(self, k: int) -> DoubleDualSequence:
        if k not in self._dds:
            self._dds[k] = double_dual_sequence(self.module(k), check=False, tr=self.transpose(k))
        return self._dds[k]

    def pdim(self, k: int, cap: int) -> DimValue:
        if (k, cap) not in self._pdims:
            self._pdims[(k, cap)] = pdim(self.module(k), cap)
        return self._pdims[(k, cap)]

    def describe(self, k: int) -> str:
        return f"sample {k} (seed {self.seed + k}) dims {list(self.module(k).dims)}"


def _single_path_maps(A: BoundQuiverAlgebra) -> List[ProjMatrix]:
    """P(i) -> P(j) given by one radical basis path, in basis order."""
    maps = []
    for k in range(A.dimension):
        if A.length_of[k] == 0:
            continue
        j, i = A.source_of[k], A.target_of[k]
        maps.append(ProjMatrix(A, (i,), (j,), (({k: A.field.one},),)))
    return maps


def _random_monos(
    A: BoundQuiverAlgebra, seed: int, count: int, max_mult: int, attempts: Optional[int] = None
) -> List[Tuple[str, ProjMatrix]]:
    """Up to ``count`` monomorphisms of proj Λ.

    Single-path monos come first, then seeded random maps (radical and
    general ones in turn), then direct sums and composites of monos already
    found. Fewer than ``count`` come back only when ``attempts`` random
    tries find no mono at all.
    """
    if attempts is None:
        attempts = 10 * count
    out = [(f"path map {A.format_element(f.entries[0][0])}", f) for f in _single_path_maps(A) if is_mono_in_proj(f)]
    out = out[:count]
    rng = random.Random(f"{seed}/mono")
    for attempt in range(attempts):
        if len(out) >= count:
            break
        p0 = [v for v in range(A.vertex_count) for _ in range(rng.randint(0, max_mult))]
        p1 = [v for v in range(A.vertex_count) for _ in range(rng.randint(0, max_mult))]
        if not p1 or not p0:
            continue
        f = random_projmatrix(A, rng, p1, p0, radical=attempt % 2 == 0)
        if is_mono_in_proj(f):
            out.append((f"random mono {attempt}", f))
    found = list(out)
    while found and len(out) < count:
        (first, f), (second, g) = rng.choice(found), rng.choice(found)
        if f.col_vertices == g.row_vertices:
            out.append((f"{first} then {second}", f.compose(g)))
        else:
            out.append((f"{first} + {second}", f.direct_sum(g)))
    logger.debug("%r: %d of %d monos after %d random tries", A, len(out), count, attempts)
    return out


def _exact_sequences(
    A: BoundQuiverAlgebra,
    m: int,
    monos: Sequence[Tuple[str, ProjMatrix]],
    epis: Sequence[Tuple[str, ProjMatrix]],
    count: int,
) -> List[Tuple[str, SequenceOfProjectives]]:
    """At least ``count`` m-exact sequences when the pool allows it.

    The m-cokernels of ``monos`` and m-kernels of ``epis`` that are m-exact,
    the trivial sequences at every vertex and position, then direct sums of
    two or three of those.
    """
    found: List[Tuple[str, SequenceOfProjectives]] = []
    for label, f in monos:
        try:
            seq = n_cokernel(f, m).prepend(f)
        except ResolutionLengthError:
            continue
        if check_sequence(seq, SequenceMode.N_EXACT):
            found.append((f"{m}-cokernel of {label}", seq))
    for label, g in epis:
        try:
            seq = SequenceOfProjectives(n_kernel(g, m).morphisms + (g,))
        except ResolutionLengthError:
            continue
        if check_sequence(seq, SequenceMode.N_EXACT):
            found.append((f"{m}-kernel of {label}", seq))
    for i in range(A.vertex_count):
        for position in range(1, m + 2):
            found.append((f"trivial at P({A.vertex_label(i)}) in place {position}", trivial_n_exact(A, (i,), m, position)))
    out = list(found)
    for size in (2, 3):
        for combo in itertools.combinations_with_replacement(range(len(found)), size):
            if len(out) >= count:
                return out
            seq = found[combo[0]][1]
            for k in combo[1:]:
                seq = seq.direct_sum(found[k][1])
            out.append((" + ".join(found[k][0] for k in combo), seq))
    return out


def _status(ok: bool, claimed: bool) -> CheckStatus:
    if ok:
        return CheckStatus.PASS
    return CheckStatus.FATAL if claimed else CheckStatus.FAIL


def _sampled_status(ok: bool, claimed: bool, tested: int, target: int) -> CheckStatus:
    """Like _status, but a clean run on fewer than ``target`` samples is SKIP."""
    if ok and tested < target:
        return CheckStatus.SKIP
    return _status(ok, claimed)


def _shortfall(tested: int, target: int) -> Dict[str, Any]:
    if tested >= target:
        return {}
    return {"target": target, "reason": f"only {tested} of {target} samples"}


def cross_check(
    A: BoundQuiverAlgebra,
    n: int,
    seed: int = 42,
    samples: int = 200,
    verdict: Optional[NAbelianVerdict] = None,
    pair_samples: Optional[int] = None,
    max_vertex_dim: int = 2,
) -> CrossCheckReport:
    """Sampled checks of the equivalent characterizations against the verdict."""
    if n < 1:
        raise ValueError("n must be at least 1")
    if verdict is None:
        verdict = detect_n(A)
    if pair_samples is None:
        pair_samples = max(samples // 2, 1)
    op = A.opposite()
    claimed = verdict.claims(n)
    exactly = verdict.kind is VerdictKind.EXACTLY_N and verdict.n == n
    data = _Samples(A, seed, max_vertex_dim)
    op_data = _Samples(op, seed, max_vertex_dim)
    checks: List[CheckResult] = []

    def record(result: CheckResult) -> None:
        logger.info("%s: %s %s", result.name, result.status.value, result.witness or "")
        checks.append(result)

    # pdim <= 1 implies n-torsion free, on both sides
    monos = {tag: _random_monos(B, seed, samples, max_vertex_dim) for B, tag in ((A, "r2"), (op, "r2op"))}
    for B, tag in ((A, "r2"), (op, "r2op")):
        tested = 0
        cokernels = 0
        witness = None
        candidates: List[Tuple[str, Optional[ProjMatrix], Representation]] = []
        for i in range(B.vertex_count):
            S = simple_module(B, i)
            if isinstance(pdim(S, 1), int):
                candidates.append((S.name, None, S))
        for label, f in monos[tag]:
            candidates.append((label, f, m_r(f)))
        for label, f, M in candidates:
            tested += 1
            cokernels += f is not None
            if not is_k_torsion_free(M, n):
                witness = label
                break
        detail = {"cokernels": cokernels}
        if witness is None:
            detail.update(_shortfall(cokernels, samples))
        record(CheckResult(tag, _sampled_status(witness is None, claimed, cokernels, samples), tested, seed, witness, detail))

    # grade profile
    if verdict.kind is VerdictKind.ALL_N or exactly:
        allowed = {0, n + 1}
        histogram: Dict[str, int] = {}
        witness = None
        tested = 0
        for sd in (data, op_data):
            for k in range(samples):
                M = sd.module(k)
                if M.is_zero():
                    continue
                g = grade(M, n + 1)
                tested += 1
                histogram[str(format_value(g))] = histogram.get(str(format_value(g)), 0) + 1
                if g not in allowed and witness is None:
                    witness = f"{sd.describe(k)} over {sd.algebra!r} has grade {format_value(g)}"
        record(CheckResult("grade_profile", _sampled_status(witness is None, True, tested, samples), tested, seed, witness,
                           {"histogram": dict(sorted(histogram.items()))}))
    else:
        record(CheckResult("grade_profile", CheckStatus.SKIP, 0, seed, None, {"reason": verdict.label}))

    # pdim <= n implies the canonical map is injective
    tested = 0
    witness = None
    for k in range(samples):
        p = data.pdim(k, n)
        if not isinstance(p, int):
            continue
        tested += 1
        if not data.dds(k).e1.is_zero():
            witness = data.describe(k)
            break
    record(CheckResult("syzygy_torsionless", _sampled_status(witness is None, claimed, tested, 1), tested, seed, witness))

    # Tor_1(H, Tr F) against the stable Hom
    tested = 0
    witness = None
    for k in range(pair_samples):
        F_ = data.module(2 * k)
        H = data.module(2 * k + 1)
        lhs = tor_table(H, data.transpose(2 * k).module, 1)[1]
        rhs = stable_hom_dim(F_, H)
        tested += 1
        if lhs != rhs:
            witness = f"pair ({data.describe(2 * k)}, {data.describe(2 * k + 1)}): Tor_1 {lhs} vs stable Hom {rhs}"
            break
    record(CheckResult("tor_stable_hom", _status(witness is None, True), tested, seed, witness))

    # gldim symmetry
    ev = verdict.evidence
    same = ev.gldim == ev.gldim_op
    record(CheckResult("gldim_symmetry", _status(same, True), 1, seed,
                       None if same else f"gldim {format_value(ev.gldim)} vs {format_value(ev.gldim_op)}",
                       {"gldim": format_value(ev.gldim), "gldim_op": format_value(ev.gldim_op)}))

    # double dual exactness and the torsion-free oracles
    dd_witness = None
    oracle_witness = None
    for k in range(samples):
        seq = data.dds(k)
        if dd_witness is None and not (seq.is_exact() and seq.matches_ext()):
            dd_witness = f"{data.describe(k)}: euler {seq.euler}, e1/e2 {seq.e1.total_dimension}/{seq.e2.total_dimension} vs Ext {seq.ext_dims}"
        if oracle_witness is None:
            tf1 = is_k_torsion_free(data.module(k), 1, data.transpose(k)).holds
            tf2 = is_k_torsion_free(data.module(k), 2, data.transpose(k)).holds
            injective = seq.eta.is_injective()
            bijective = seq.eta.is_isomorphism()
            if tf1 != injective or tf2 != bijective:
                oracle_witness = f"{data.describe(k)}: torsion-free {tf1}/{tf2}, eta {injective}/{bijective}"
    record(CheckResult("double_dual", _status(dd_witness is None, True), samples, seed, dd_witness))
    record(CheckResult("torsion_oracles", _status(oracle_witness is None, True), samples, seed, oracle_witness))

    # splitting tests agree on sampled n-exact sequences
    exact_monos = monos["r2"][: (pair_samples + 1) // 2]
    exact_epis = [(f"dual of {label} over the opposite", dual_projmatrix(f)) for label, f in monos["r2op"][: pair_samples // 2]]
    sequences = _exact_sequences(A, n, exact_monos, exact_epis, pair_samples)
    disagreements = 0
    non_split = 0
    witness = None
    for label, seq in sequences:
        section, retraction = splitting_tests(seq)
        if section != retraction:
            disagreements += 1
            witness = witness or label
        elif not section:
            non_split += 1
    detail = {"non_split": non_split, "disagreements": disagreements}
    detail.update(_shortfall(len(sequences), pair_samples))
    record(CheckResult("splitting", _sampled_status(disagreements == 0, claimed or n == 1, len(sequences), pair_samples),
                       len(sequences), seed, witness, detail))

    # m-exact sequences with m != n split
    if exactly:
        tested = 0
        witness = None
        for m in (n - 1, n + 1):
            if m < 1:
                continue
            for label, seq in _exact_sequences(A, m, exact_monos, exact_epis, pair_samples):
                tested += 1
                if not all(splitting_tests(seq)):
                    witness = witness or f"{m}-exact sequence: {label}"
        record(CheckResult("higher_splitting", _sampled_status(witness is None, True, tested, 1), tested, seed, witness))
    else:
        record(CheckResult("higher_splitting", CheckStatus.SKIP, 0, seed, None, {"reason": verdict.label}))

    # M projective iff Tr M is zero or projective
    witness = None
    for k in range(samples):
        T = data.transpose(k).module
        if is_projective(data.module(k)) != is_projective(T):
            witness = data.describe(k)
            break
    record(CheckResult("transpose_projectivity", _status(witness is None, True), samples, seed, witness))

    # pdim M = 1 implies pdim Tr M = n + 1
    if exactly:
        tested = 0
        witness = None
        for k in range(samples):
            if data.pdim(k, 1) != 1:
                continue
            tested += 1
            p = pdim(data.transpose(k).module, n + 2)
            if p != n + 1:
                witness = f"{data.describe(k)}: pdim Tr M = {format_value(p)}"
                break
        record(CheckResult("transpose_pdim", _sampled_status(witness is None, True, tested, 1), tested, seed, witness))
    else:
        record(CheckResult("transpose_pdim", CheckStatus.SKIP, 0, seed, None, {"reason": verdict.label}))

    # reflexive dichotomy
    if exactly and not A.is_semisimple():
        tested = 0
        witness = None
        for k in range(samples):
            p = data.pdim(k, n + 1)
            reflexive = data.dds(k).eta.is_isomorphism()
            if n == 1 and p != 0:
                tested += 1
                if reflexive:
                    witness = witness or f"{data.describe(k)} is reflexive with pdim {format_value(p)}"
            elif n >= 2 and p == 1:
                tested += 1
                if not reflexive:
                    witness = witness or f"{data.describe(k)} has pdim 1 but is not reflexive"
        record(CheckResult("reflexive_dichotomy", _sampled_status(witness is None, True, tested, 1), tested, seed, witness))
    else:
        record(CheckResult("reflexive_dichotomy", CheckStatus.SKIP, 0, seed, None, {"reason": verdict.label}))

    # every map M -> Λ vanishes on e1
    witness = None
    projectives = [projective_module(A, i) for i in range(A.vertex_count)]
    for k in range(samples):
        inclusion = data.dds(k).e1_inclusion
        if inclusion.source.is_zero():
            continue
        for P in projectives:
            if any(not inclusion.compose(phi).is_zero() for phi in hom_basis(data.module(k), P)):
                witness = data.describe(k)
                break
        if witness:
            break
    record(CheckResult("e1_dual_vanishes", _status(witness is None, True), samples, seed, witness))

    # m-spherical modules are (n + 1 - m)-torsion free
    if exactly:
        tested = 0
        witness = None
        for k in range(samples):
            M = data.module(k)
            for m in range(1, n + 1):
                if is_m_spherical(M, m):
                    tested += 1
                    if not is_k_torsion_free(M, n + 1 - m, data.transpose(k)):
                        witness = witness or f"{data.describe(k)} is {m}-spherical"
        record(CheckResult("spherical_torsion", _sampled_status(witness is None, True, tested, 1), tested, seed, witness))
    else:
        record(CheckResult("spherical_torsion", CheckStatus.SKIP, 0, seed, None, {"reason": verdict.label}))

    # mono and epi in proj Λ implies iso
    tested = 0
    witness = None
    candidates = [("path map", f) for f in _single_path_maps(A)]
    for k in range(pair_samples):
        rng = random.Random(f"{seed}/balanced/{k}")
        vs = [v for v in range(A.vertex_count) for _ in range(rng.randint(0, max_vertex_dim))]
        if vs:
            candidates.append((f"random endomorphism {k}", random_projmatrix(A, rng, vs, vs, radical=False)))
    for label, f in candidates:
        if is_mono_in_proj(f) and is_epi_in_proj(f):
            tested += 1
            if not projmatrix_to_map(f).is_isomorphism():
                witness = witness or f"{label}: {f.to_json()['entries']}"
    record(CheckResult("balanced", _sampled_status(witness is None, claimed, tested, 1), tested, seed, witness))

    # Tor computed from either side
    tested = 0
    witness = None
    for k in range(pair_samples):
        M = data.module(k)
        N = op_data.module(k)
        left = tor_table(M, N, 2)
        right = tor_table_via_right(M, N, 2)
        tested += 1
        if left != right:
            witness = f"{data.describe(k)}: {list(left)} vs {list(right)}"
            break
    record(CheckResult("tor_balance", _status(witness is None, True), tested, seed, witness))

    # projectivity and injectivity oracles
    witness = None
    for k in range(min(samples, pair_samples)):
        M = data.module(k)
        if is_projective(M) != is_projective_via_ext(M) or is_injective(M) != is_injective_via_ext(M):
            witness = data.describe(k)
            break
    record(CheckResult("projectivity_oracles", _status(witness is None, True), min(samples, pair_samples), seed, witness))

    # dominant dimension is left-right symmetric
    same = ev.domdim == ev.codomdim
    record(CheckResult("domdim_symmetry", _status(same, True), 1, seed,
                       None if same else f"domdim {format_value(ev.domdim)} vs {format_value(ev.codomdim)}"))

    # the verdict agrees with its own evidence
    record(CheckResult("verdict_consistency", _status(verdict.is_consistent(), True), 1, seed,
                       None if verdict.is_consistent() else verdict.label))

    return CrossCheckReport(A, n, seed, verdict, checks)
