"""Resolutions and the invariants derived from them.

Copyright (c) 2026 The nabelian developers
SPDX-License-Identifier: MIT
See LICENSE for details.
"""

from collections import Counter
from dataclasses import dataclass
from enum import Enum
from typing import Dict, List, NamedTuple, Optional, Tuple, Union

from .algebra import BoundQuiverAlgebra, ProjMatrix
from .linalg import ExactMatrix, kernel_basis, rank
from .log import get_logger
from .modules import (
    ModuleMap,
    Representation,
    hom_basis,
    injective_module,
    is_projective,
    k_dual,
    map_kernel,
    map_to_projmatrix,
    projective_cover,
    projmatrix_to_map,
    random_module,
    regular_module,
    simple_module,
)

logger = get_logger(__name__)

__all__ = [
    "Bound",
    "DimValue",
    "Resolution",
    "ExtTable",
    "TensorProduct",
    "Presentation",
    "minimal_resolution",
    "projective_presentation",
    "syzygy",
    "pdim",
    "gldim",
    "default_cap",
    "ext_table",
    "tensor",
    "tor_table",
    "tor_table_via_right",
    "stable_hom_dim",
    "projective_injective_vertices",
    "injective_coresolution_terms",
    "domdim",
    "codomdim",
    "grade",
    "grade_profile",
    "is_projective_via_ext",
    "is_injective_via_ext",
    "format_value",
]


class Bound(Enum):
    """Outcomes of a capped computation that are not a plain integer."""

    ABOVE_CAP = "AboveCap"
    AT_LEAST_CAP = "AtLeastCap"
    INFINITE = "Infinite"

    def __str__(self) -> str:
        return self.value


DimValue = Union[int, Bound]


def format_value(value: DimValue) -> Union[int, str]:
    return value.value if isinstance(value, Bound) else value


def default_cap(algebra: BoundQuiverAlgebra) -> int:
    return algebra.dimension + 2


@dataclass(frozen=True, eq=False)
class Resolution:
    """Minimal projective resolution ... -> P_1 -> P_0 -> M -> 0.

    ``differentials[k]`` is d_{k+1}: P_{k+1} -> P_k and ``terms[k]`` lists the
    vertices of the indecomposable summands of P_k.
    """

    module: Representation
    differentials: Tuple[ProjMatrix, ...]
    terms: Tuple[Tuple[int, ...], ...]
    augmentation: ModuleMap
    minimal: bool
    complete: bool

    @property
    def length(self) -> int:
        return len(self.differentials)

    def is_exact(self) -> bool:
        """Rank bookkeeping at every computed degree."""
        if not self.augmentation.is_surjective():
            return False
        maps = [projmatrix_to_map(d) for d in self.differentials]
        previous = self.augmentation
        for d in maps:
            if not d.compose(previous).is_zero():
                return False
            kernel_dims = tuple(a - b for a, b in zip(previous.source.dims, previous.ranks()))
            if d.ranks() != kernel_dims:
                return False
            previous = d
        if self.complete and not previous.is_injective():
            return False
        return True

    def is_radical(self) -> bool:
        return all(d.is_radical() for d in self.differentials)

    def to_json(self) -> dict:
        A = self.module.algebra
        return {
            "terms": [[A.vertex_label(v) for v in t] for t in self.terms],
            "differentials": [d.to_json() for d in self.differentials],
            "complete": self.complete,
            "minimal": self.minimal,
        }


def minimal_resolution(M: Representation, length: int) -> Resolution:
    """Iterated projective covers of syzygies, at most ``length`` differentials."""
    if length < 0:
        raise ValueError("length must be nonnegative")
    cover = projective_cover(M)
    terms = [cover.vertices]
    kernel, inclusion = map_kernel(cover.epi)
    differentials: List[ProjMatrix] = []
    while not kernel.is_zero() and len(differentials) < length:
        step = projective_cover(kernel)
        d = step.epi.compose(inclusion)
        differentials.append(map_to_projmatrix(d, step.vertices, terms[-1]))
        terms.append(step.vertices)
        kernel, inclusion = map_kernel(d)
        logger.debug("resolution degree %d: %d summands", len(differentials), len(step.vertices))
    return Resolution(
        M, tuple(differentials), tuple(terms), cover.epi, True, kernel.is_zero()
    )


class Presentation(NamedTuple):
    """P_1 --differential--> P_0 --augmentation--> M -> 0, minimal."""

    differential: ProjMatrix
    augmentation: ModuleMap


def projective_presentation(M: Representation) -> Presentation:
    res = minimal_resolution(M, 1)
    if res.differentials:
        d = res.differentials[0]
    else:
        d = ProjMatrix.zero(M.algebra, (), res.terms[0])
    return Presentation(d, res.augmentation)


def syzygy(M: Representation, k: int) -> Representation:
    """Ω^k M, the k-th syzygy in a minimal resolution."""
    current = M
    for _ in range(k):
        current, _ = map_kernel(projective_cover(current).epi)
    return current


def pdim(M: Representation, cap: Optional[int] = None) -> DimValue:
    if cap is None:
        cap = default_cap(M.algebra)
    res = minimal_resolution(M, cap)
    if res.complete:
        return res.length
    return Bound.ABOVE_CAP


def gldim(A: BoundQuiverAlgebra, cap: Optional[int] = None, warn: bool = True) -> DimValue:
    """Maximum of pdim over the simple modules.

    Hitting the cap is logged as a warning unless ``warn`` is false.
    """
    if cap is None:
        cap = default_cap(A)
    worst = 0
    for i in range(A.vertex_count):
        d = pdim(simple_module(A, i), cap)
        if d is Bound.ABOVE_CAP:
            if warn:
                logger.warning("gldim of %r: pdim S(%s) exceeds cap %d", A, A.vertex_label(i), cap)
            return Bound.ABOVE_CAP
        worst = max(worst, d)
    return worst


@dataclass(frozen=True, eq=False)
class ExtTable:
    source: Representation
    target: Representation
    values: Tuple[int, ...]
    cocycles: Tuple[ExactMatrix, ...]

    def vanishes(self, start: int, stop: int) -> bool:
        """True when Ext^i = 0 for start <= i <= stop."""
        return all(self.values[i] == 0 for i in range(start, min(stop, len(self.values) - 1) + 1))


def _hom_differential(d: ProjMatrix, N: Representation) -> ExactMatrix:
    """Hom(d, N): Hom(P_k, N) -> Hom(P_{k+1}, N) in generator coordinates."""
    F = N.field
    blocks_rows = []
    for c, j in enumerate(d.col_vertices):
        row_blocks = [N.act(d.entries[r][c], j, i) for r, i in enumerate(d.row_vertices)]
        blocks_rows.append(ExactMatrix.hstack(F, N.dims[j], row_blocks))
    cols = sum(N.dims[i] for i in d.row_vertices)
    return ExactMatrix.vstack(F, cols, blocks_rows)


def ext_table(M: Representation, N: Representation, cap: int) -> ExtTable:
    """dim Ext^i(M, N) for i = 0..cap, from a minimal resolution of M."""
    M.algebra.check_same(N.algebra)
    F = M.field
    res = minimal_resolution(M, cap + 1)
    cochain_dims = [sum(N.dims[v] for v in t) for t in res.terms]
    deltas = [_hom_differential(d, N) for d in res.differentials]
    values = []
    cocycles = []
    for k in range(cap + 1):
        dim_k = cochain_dims[k] if k < len(cochain_dims) else 0
        if k < len(deltas):
            Z = kernel_basis(deltas[k])
        else:
            Z = ExactMatrix.identity(F, dim_k)
        boundary = rank(deltas[k - 1]) if 0 < k <= len(deltas) else 0
        values.append(Z.rows - boundary)
        cocycles.append(Z)
    return ExtTable(M, N, tuple(values), tuple(cocycles))


class TensorProduct(NamedTuple):
    dimension: int
    projection: ExactMatrix
    total: int


def tensor(M: Representation, N: Representation) -> TensorProduct:
    """M ⊗_Λ N for M a right module and N a right module over the opposite algebra."""
    A = M.algebra
    A.opposite().check_same(N.algebra)
    F = M.field
    offsets = []
    pos = 0
    for a, b in zip(M.dims, N.dims):
        offsets.append(pos)
        pos += a * b
    total = pos
    relations = []
    quiver = A.quiver
    for k in range(len(quiver.arrows)):
        i, j = quiver.arrow_source(k), quiver.arrow_target(k)
        Ma = M.arrow_maps[k]
        Na = N.arrow_maps[k]  # e_j N -> e_i N, a left action
        for p in range(M.dims[i]):
            for s in range(N.dims[j]):
                vec = [F.zero] * total
                for q in range(M.dims[j]):
                    v = Ma[p, q]
                    if v != 0:
                        idx = offsets[j] + q * N.dims[j] + s
                        vec[idx] = F.add(vec[idx], v)
                for t in range(N.dims[i]):
                    v = Na[s, t]
                    if v != 0:
                        idx = offsets[i] + p * N.dims[i] + t
                        vec[idx] = F.sub(vec[idx], v)
                relations.append(vec)
    if relations:
        R = ExactMatrix.from_rows(F, relations, total)
        projection = kernel_basis(R.transpose()).transpose()
    else:
        projection = ExactMatrix.identity(F, total)
    return TensorProduct(projection.cols, projection, total)


def _tensor_differential(d: ProjMatrix, N: Representation) -> ExactMatrix:
    """d ⊗ N: ⊕ N_{i_r} -> ⊕ N_{j_c} with N over the opposite of d's algebra."""
    F = N.field
    rows = []
    for r, i in enumerate(d.row_vertices):
        blocks = [N.act(d.entries[r][c], i, j) for c, j in enumerate(d.col_vertices)]
        rows.append(ExactMatrix.hstack(F, N.dims[i], blocks))
    cols = sum(N.dims[j] for j in d.col_vertices)
    return ExactMatrix.vstack(F, cols, rows)


def _tor_from_resolution(res: Resolution, other: Representation, cap: int) -> Tuple[int, ...]:
    chain_dims = [sum(other.dims[v] for v in t) for t in res.terms]
    ranks = [rank(_tensor_differential(d, other)) for d in res.differentials]
    values = []
    for k in range(cap + 1):
        dim_k = chain_dims[k] if k < len(chain_dims) else 0
        out_rank = ranks[k - 1] if 0 < k <= len(ranks) else 0
        in_rank = ranks[k] if k < len(ranks) else 0
        values.append(dim_k - out_rank - in_rank)
    return tuple(values)


def tor_table(M: Representation, N: Representation, cap: int) -> Tuple[int, ...]:
    """dim Tor_i(M, N), i = 0..cap, by resolving M."""
    M.algebra.opposite().check_same(N.algebra)
    return _tor_from_resolution(minimal_resolution(M, cap + 1), N, cap)


def tor_table_via_right(M: Representation, N: Representation, cap: int) -> Tuple[int, ...]:
    """dim Tor_i(M, N), i = 0..cap, by resolving N over the opposite algebra."""
    M.algebra.opposite().check_same(N.algebra)
    return _tor_from_resolution(minimal_resolution(N, cap + 1), M, cap)


def stable_hom_dim(M: Representation, N: Representation) -> int:
    """dim Hom(M, N) minus the maps that factor through a projective."""
    basis = hom_basis(M, N)
    if not basis:
        return 0
    cover = projective_cover(N)
    through = [f.compose(cover.epi).to_vector() for f in hom_basis(M, cover.projective)]
    if not through:
        return len(basis)
    width = len(basis[0].to_vector())
    return len(basis) - rank(ExactMatrix.from_rows(M.field, through, width))


def projective_injective_vertices(A: BoundQuiverAlgebra) -> Tuple[int, ...]:
    """Vertices j whose injective I(j) is also projective."""
    return tuple(j for j in range(A.vertex_count) if is_projective(injective_module(A, j)))


def injective_coresolution_terms(M: Representation, length: int) -> Tuple[Tuple[int, ...], ...]:
    """Vertex lists of I^0, I^1, ... computed by dualizing a resolution over the opposite."""
    return minimal_resolution(k_dual(M), length).terms


def domdim(A: BoundQuiverAlgebra, cap: Optional[int] = None, warn: bool = True) -> DimValue:
    """Number of leading projective terms in the minimal injective coresolution of Λ."""
    if cap is None:
        cap = default_cap(A)
    good = set(projective_injective_vertices(A))
    res = minimal_resolution(k_dual(regular_module(A)), max(cap - 1, 0))
    for k, term in enumerate(res.terms):
        if not all(v in good for v in term):
            return k
    if res.complete:
        return Bound.INFINITE
    if warn:
        logger.warning("dominant dimension of %r reaches cap %d", A, cap)
    return Bound.AT_LEAST_CAP


def codomdim(A: BoundQuiverAlgebra, cap: Optional[int] = None, warn: bool = True) -> DimValue:
    return domdim(A.opposite(), cap, warn)


def grade(M: Representation, cap: Optional[int] = None) -> DimValue:
    """Least i with Ext^i(M, Λ) != 0."""
    if M.is_zero():
        return Bound.INFINITE
    if cap is None:
        cap = default_cap(M.algebra)
    table = ext_table(M, regular_module(M.algebra), cap)
    for i, value in enumerate(table.values):
        if value:
            return i
    if isinstance(pdim(M, cap), int):
        return Bound.INFINITE
    return Bound.ABOVE_CAP


def grade_profile(
    A: BoundQuiverAlgebra, seed: int, samples: int, cap: int, max_vertex_dim: int = 2
) -> Dict[str, int]:
    counts: Counter = Counter()
    for s in range(samples):
        g = grade(random_module(A, seed + s, max_vertex_dim), cap)
        counts[str(format_value(g))] += 1
    return dict(sorted(counts.items()))


def is_projective_via_ext(M: Representation) -> bool:
    A = M.algebra
    return all(ext_table(M, simple_module(A, i), 1).values[1] == 0 for i in range(A.vertex_count))


def is_injective_via_ext(M: Representation) -> bool:
    A = M.algebra
    return all(ext_table(simple_module(A, i), M, 1).values[1] == 0 for i in range(A.vertex_count))

