"""Right modules over bound quiver algebras, as quiver representations.

Copyright (c) 2026 The nabelian developers
SPDX-License-Identifier: MIT
See LICENSE for details.

A representation assigns a vector space of dimension ``dims[i]`` to each
vertex and, to each arrow a: i -> j, a matrix of shape dims[i] x dims[j]
acting on row vectors. Direct sums of projectives ⊕ P(v_s) are always laid
out summand by summand, and inside a summand P(v) the vertex-j basis is the
list of basis paths from v to j in basis order.
"""

import itertools
import random
from dataclasses import dataclass, field as dc_field
from typing import Dict, List, NamedTuple, Optional, Sequence, Tuple

from .algebra import BoundQuiverAlgebra, Element, ProjMatrix
from .errors import InvalidModuleError, ShapeError, UnknownVertexError
from .linalg import ExactMatrix, FieldSpec, Scalar, kernel_basis, rank, row_space, solve
from .log import get_logger

logger = get_logger(__name__)

__all__ = [
    "Representation",
    "ModuleMap",
    "ProjectiveCover",
    "InjectiveEnvelope",
    "validate",
    "standard_module",
    "simple_module",
    "projective_module",
    "injective_module",
    "projective_sum",
    "regular_module",
    "dual_regular_module",
    "direct_sum",
    "hom_basis",
    "submodule",
    "quotient",
    "map_kernel",
    "map_cokernel",
    "map_image",
    "top_radical",
    "socle",
    "projective_cover",
    "injective_envelope",
    "is_projective",
    "is_injective",
    "k_dual",
    "k_dual_map",
    "random_module",
    "random_projmatrix",
    "is_isomorphic",
    "projmatrix_to_map",
    "map_to_projmatrix",
]


@dataclass(frozen=True, eq=False)
class Representation:
    algebra: BoundQuiverAlgebra
    dims: Tuple[int, ...]
    arrow_maps: Tuple[ExactMatrix, ...]
    name: str = ""
    _paths: Dict[int, ExactMatrix] = dc_field(default_factory=dict, repr=False, compare=False)

    def __post_init__(self) -> None:
        A = self.algebra
        if len(self.dims) != A.vertex_count:
            raise ShapeError(f"{len(self.dims)} dimensions for {A.vertex_count} vertices")
        if any(d < 0 for d in self.dims):
            raise ShapeError("negative vertex dimension")
        if len(self.arrow_maps) != len(A.quiver.arrows):
            raise ShapeError(f"{len(self.arrow_maps)} matrices for {len(A.quiver.arrows)} arrows")
        for k, m in enumerate(self.arrow_maps):
            expected = (self.dims[A.quiver.arrow_source(k)], self.dims[A.quiver.arrow_target(k)])
            if m.shape != expected:
                raise ShapeError(
                    f"arrow {A.quiver.arrows[k].label} has a {m.shape} matrix, expected {expected}"
                )

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Representation):
            return NotImplemented
        return (
            self.algebra is other.algebra
            and self.dims == other.dims
            and self.arrow_maps == other.arrow_maps
        )

    __hash__ = object.__hash__

    @classmethod
    def zero(cls, algebra: BoundQuiverAlgebra) -> "Representation":
        return cls.from_dims(algebra, [0] * algebra.vertex_count)

    @classmethod
    def from_dims(
        cls,
        algebra: BoundQuiverAlgebra,
        dims: Sequence[int],
        maps: Optional[Dict[str, ExactMatrix]] = None,
        name: str = "",
    ) -> "Representation":
        """Build from arrow-label keyed matrices; missing arrows act by zero."""
        maps = maps or {}
        F = algebra.field
        quiver = algebra.quiver
        out = []
        for k, arrow in enumerate(quiver.arrows):
            shape = (dims[quiver.arrow_source(k)], dims[quiver.arrow_target(k)])
            out.append(maps.get(arrow.label, ExactMatrix.zeros(F, *shape)))
        return cls(algebra, tuple(dims), tuple(out), name)

    @property
    def field(self) -> FieldSpec:
        return self.algebra.field

    @property
    def total_dimension(self) -> int:
        return sum(self.dims)

    def dimension_vector(self) -> Tuple[int, ...]:
        return self.dims

    def is_zero(self) -> bool:
        return self.total_dimension == 0

    def path_matrix(self, k: int) -> ExactMatrix:
        """Action of the basis path k, from its source space to its target space."""
        if k not in self._paths:
            A = self.algebra
            source, word = A.basis[k]
            m = ExactMatrix.identity(self.field, self.dims[source])
            for x in word:
                m = m @ self.arrow_maps[x]
            self._paths[k] = m
        return self._paths[k]

    def act(self, x: Element, i: int, j: int) -> ExactMatrix:
        """Right action of the e_i x e_j component of x, as a dims[i] x dims[j] matrix."""
        A = self.algebra
        m = ExactMatrix.zeros(self.field, self.dims[i], self.dims[j])
        for k, c in x.items():
            if A.source_of[k] == i and A.target_of[k] == j:
                m = m + self.path_matrix(k).scale(c)
        return m

    def to_json(self) -> dict:
        A = self.algebra
        return {
            "dims": list(self.dims),
            "maps": {
                a.label: self.arrow_maps[k].to_json()
                for k, a in enumerate(A.quiver.arrows)
                if self.arrow_maps[k].rows and self.arrow_maps[k].cols
            },
        }


@dataclass(frozen=True, eq=False)
class ModuleMap:
    source: Representation
    target: Representation
    blocks: Tuple[ExactMatrix, ...]

    def __post_init__(self) -> None:
        for i, b in enumerate(self.blocks):
            if b.shape != (self.source.dims[i], self.target.dims[i]):
                raise ShapeError(f"block {i} has shape {b.shape}")
        if len(self.blocks) != len(self.source.dims):
            raise ShapeError("one block per vertex is required")

    @classmethod
    def identity(cls, M: Representation) -> "ModuleMap":
        return cls(M, M, tuple(ExactMatrix.identity(M.field, d) for d in M.dims))

    @classmethod
    def zero(cls, M: Representation, N: Representation) -> "ModuleMap":
        return cls(M, N, tuple(ExactMatrix.zeros(M.field, a, b) for a, b in zip(M.dims, N.dims)))

    @classmethod
    def from_vector(cls, M: Representation, N: Representation, vector: Sequence[Scalar]) -> "ModuleMap":
        blocks = []
        pos = 0
        for a, b in zip(M.dims, N.dims):
            entries = tuple(vector[pos : pos + a * b])
            pos += a * b
            blocks.append(ExactMatrix(M.field, a, b, entries))
        return cls(M, N, tuple(blocks))

    def to_vector(self) -> List[Scalar]:
        out: List[Scalar] = []
        for b in self.blocks:
            out.extend(b.entries)
        return out

    def is_valid(self) -> bool:
        M, N = self.source, self.target
        quiver = M.algebra.quiver
        for k in range(len(quiver.arrows)):
            i, j = quiver.arrow_source(k), quiver.arrow_target(k)
            if self.blocks[i] @ N.arrow_maps[k] != M.arrow_maps[k] @ self.blocks[j]:
                return False
        return True

    def compose(self, other: "ModuleMap") -> "ModuleMap":
        """First ``self``, then ``other``."""
        return ModuleMap(self.source, other.target, tuple(a @ b for a, b in zip(self.blocks, other.blocks)))

    def __add__(self, other: "ModuleMap") -> "ModuleMap":
        return ModuleMap(self.source, self.target, tuple(a + b for a, b in zip(self.blocks, other.blocks)))

    def scale(self, c: Scalar) -> "ModuleMap":
        return ModuleMap(self.source, self.target, tuple(b.scale(c) for b in self.blocks))

    def is_zero(self) -> bool:
        return all(b.is_zero() for b in self.blocks)

    def ranks(self) -> Tuple[int, ...]:
        return tuple(rank(b) for b in self.blocks)

    def rank(self) -> int:
        return sum(self.ranks())

    def is_injective(self) -> bool:
        return self.ranks() == self.source.dims

    def is_surjective(self) -> bool:
        return self.ranks() == self.target.dims

    def is_isomorphism(self) -> bool:
        return self.source.dims == self.target.dims and self.is_injective()


class ProjectiveCover(NamedTuple):
    projective: Representation
    epi: ModuleMap
    vertices: Tuple[int, ...]


class InjectiveEnvelope(NamedTuple):
    injective: Representation
    mono: ModuleMap
    vertices: Tuple[int, ...]


def validate(M: Representation) -> Optional[str]:
    """None when every relation acts by zero, else a description of the first violation."""
    A = M.algebra
    quiver = A.quiver
    for rel in A.relations:
        total: Optional[ExactMatrix] = None
        for coeff, labels in rel.terms:
            word = [quiver.arrow_index(x) for x in labels]
            m = ExactMatrix.identity(M.field, M.dims[quiver.arrow_source(word[0])])
            for x in word:
                m = m @ M.arrow_maps[x]
            m = m.scale(M.field.coerce(coeff))
            total = m if total is None else total + m
        if total is not None and not total.is_zero():
            return f"relation {rel} does not act by zero"
    return None


def checked(M: Representation) -> Representation:
    problem = validate(M)
    if problem is not None:
        raise InvalidModuleError(problem, relation=problem)
    return M


def _check_vertex(A: BoundQuiverAlgebra, i: int) -> None:
    if not 0 <= i < A.vertex_count:
        raise UnknownVertexError(f"vertex index {i} out of range")


def simple_module(A: BoundQuiverAlgebra, i: int) -> Representation:
    _check_vertex(A, i)
    dims = [0] * A.vertex_count
    dims[i] = 1
    return Representation.from_dims(A, dims, name=f"S({A.vertex_label(i)})")


def projective_sum(A: BoundQuiverAlgebra, vertices: Sequence[int]) -> Representation:
    """⊕_s P(vertices[s]) with the summand-by-summand layout."""
    F = A.field
    n = A.vertex_count
    for v in vertices:
        _check_vertex(A, v)
    layout: List[List[Tuple[int, int]]] = [[] for _ in range(n)]
    for s, v in enumerate(vertices):
        for j in range(n):
            layout[j].extend((s, k) for k in A.paths_between(v, j))
    positions = [{pair: pos for pos, pair in enumerate(layout[j])} for j in range(n)]
    maps = []
    for a in range(len(A.quiver.arrows)):
        i, j = A.quiver.arrow_source(a), A.quiver.arrow_target(a)
        rows = []
        arrow = {A.arrow_basis_index(a): F.one}
        for s, k in layout[i]:
            row = [F.zero] * len(layout[j])
            for q, c in A.multiply({k: F.one}, arrow).items():
                row[positions[j][(s, q)]] = c
            rows.append(row)
        maps.append(ExactMatrix.from_rows(F, rows, len(layout[j])))
    dims = tuple(len(layout[j]) for j in range(n))
    name = "+".join(f"P({A.vertex_label(v)})" for v in vertices) or "0"
    return Representation(A, dims, tuple(maps), name)


def projective_module(A: BoundQuiverAlgebra, i: int) -> Representation:
    return projective_sum(A, [i])


def k_dual(M: Representation) -> Representation:
    """D M = Hom_k(M, k), a module over the opposite algebra."""
    op = M.algebra.opposite()
    name = f"D{M.name}" if M.name else ""
    return Representation(op, M.dims, tuple(m.transpose() for m in M.arrow_maps), name)


def k_dual_map(f: ModuleMap) -> ModuleMap:
    return ModuleMap(k_dual(f.target), k_dual(f.source), tuple(b.transpose() for b in f.blocks))


def injective_module(A: BoundQuiverAlgebra, i: int) -> Representation:
    M = k_dual(projective_module(A.opposite(), i))
    return Representation(A, M.dims, M.arrow_maps, f"I({A.vertex_label(i)})")


def regular_module(A: BoundQuiverAlgebra) -> Representation:
    return projective_sum(A, range(A.vertex_count))


def dual_regular_module(A: BoundQuiverAlgebra) -> Representation:
    return k_dual(regular_module(A.opposite()))


def standard_module(A: BoundQuiverAlgebra, kind: str, i: int) -> Representation:
    kind = kind.lower()
    if kind == "simple":
        return simple_module(A, i)
    if kind == "projective":
        return projective_module(A, i)
    if kind == "injective":
        return injective_module(A, i)
    raise ValueError(f"unknown standard module kind {kind!r}")


def direct_sum(M: Representation, N: Representation) -> Representation:
    M.algebra.check_same(N.algebra)
    F = M.field
    dims = tuple(a + b for a, b in zip(M.dims, N.dims))
    maps = tuple(ExactMatrix.block_diagonal(F, [a, b]) for a, b in zip(M.arrow_maps, N.arrow_maps))
    return Representation(M.algebra, dims, maps)


def hom_basis(M: Representation, N: Representation) -> List[ModuleMap]:
    """RREF-ordered basis of Hom(M, N)."""
    M.algebra.check_same(N.algebra)
    A = M.algebra
    F = M.field
    quiver = A.quiver
    offsets = []
    pos = 0
    for a, b in zip(M.dims, N.dims):
        offsets.append(pos)
        pos += a * b
    unknowns = pos
    columns: List[List[Scalar]] = []
    for k in range(len(quiver.arrows)):
        i, j = quiver.arrow_source(k), quiver.arrow_target(k)
        Ma, Na = M.arrow_maps[k], N.arrow_maps[k]
        for r in range(M.dims[i]):
            for c in range(N.dims[j]):
                col = [F.zero] * unknowns
                # X_i[r][q] * N_a[q][c]
                for q in range(N.dims[i]):
                    v = Na[q, c]
                    if v != 0:
                        idx = offsets[i] + r * N.dims[i] + q
                        col[idx] = F.add(col[idx], v)
                # - M_a[r][q] * X_j[q][c]
                for q in range(M.dims[j]):
                    v = Ma[r, q]
                    if v != 0:
                        idx = offsets[j] + q * N.dims[j] + c
                        col[idx] = F.sub(col[idx], v)
                columns.append(col)
    if columns:
        E = ExactMatrix.from_rows(F, columns, unknowns).transpose()
    else:
        E = ExactMatrix.zeros(F, unknowns, 0)
    K = kernel_basis(E)
    return [ModuleMap.from_vector(M, N, K.row(r)) for r in range(K.rows)]


def submodule(M: Representation, spaces: Sequence[ExactMatrix]) -> Tuple[Representation, ModuleMap]:
    """The submodule spanned vertexwise by the rows of ``spaces``, with its inclusion."""
    F = M.field
    bases = [row_space(S) if S.rows else ExactMatrix.zeros(F, 0, M.dims[i]) for i, S in enumerate(spaces)]
    quiver = M.algebra.quiver
    maps = []
    for k in range(len(quiver.arrows)):
        i, j = quiver.arrow_source(k), quiver.arrow_target(k)
        image = bases[i] @ M.arrow_maps[k]
        X = solve(bases[j], image)
        if X is None:
            raise ShapeError("subspaces are not closed under the arrow actions")
        maps.append(X)
    S = Representation(M.algebra, tuple(b.rows for b in bases), tuple(maps))
    return S, ModuleMap(S, M, tuple(bases))


def quotient(M: Representation, spaces: Sequence[ExactMatrix]) -> Tuple[Representation, ModuleMap, List[ExactMatrix]]:
    """M modulo a submodule given by spanning rows; returns (Q, projection, sections)."""
    F = M.field
    projections = []
    sections = []
    for i, S in enumerate(spaces):
        if S.rows == 0:
            pi = ExactMatrix.identity(F, M.dims[i])
        else:
            pi = kernel_basis(S.transpose()).transpose()
        projections.append(pi)
        sections.append(solve(pi, ExactMatrix.identity(F, pi.cols)))
    quiver = M.algebra.quiver
    maps = []
    for k in range(len(quiver.arrows)):
        i, j = quiver.arrow_source(k), quiver.arrow_target(k)
        maps.append(sections[i] @ M.arrow_maps[k] @ projections[j])
    Q = Representation(M.algebra, tuple(p.cols for p in projections), tuple(maps))
    return Q, ModuleMap(M, Q, tuple(projections)), sections


def map_kernel(f: ModuleMap) -> Tuple[Representation, ModuleMap]:
    return submodule(f.source, [kernel_basis(b) for b in f.blocks])


def map_image(f: ModuleMap) -> Tuple[Representation, ModuleMap]:
    return submodule(f.target, [row_space(b) if b.rows else b for b in f.blocks])


def map_cokernel(f: ModuleMap) -> Tuple[Representation, ModuleMap]:
    Q, pi, _ = quotient(f.target, [row_space(b) if b.rows else b for b in f.blocks])
    return Q, pi


def _radical_spaces(M: Representation) -> List[ExactMatrix]:
    F = M.field
    quiver = M.algebra.quiver
    spaces = []
    for j in range(len(M.dims)):
        incoming = [M.arrow_maps[k] for k in range(len(quiver.arrows)) if quiver.arrow_target(k) == j]
        incoming = [m for m in incoming if m.rows]
        if incoming:
            spaces.append(ExactMatrix.vstack(F, M.dims[j], incoming))
        else:
            spaces.append(ExactMatrix.zeros(F, 0, M.dims[j]))
    return spaces


def top_radical(M: Representation) -> Tuple[Representation, Representation, ModuleMap]:
    """(top M, rad M, M -> top M)."""
    spaces = _radical_spaces(M)
    rad, _ = submodule(M, spaces)
    top, pi, _ = quotient(M, spaces)
    return top, rad, pi


def socle(M: Representation) -> Tuple[Representation, ModuleMap]:
    F = M.field
    quiver = M.algebra.quiver
    spaces = []
    for i in range(len(M.dims)):
        outgoing = [M.arrow_maps[k] for k in range(len(quiver.arrows)) if quiver.arrow_source(k) == i]
        if outgoing:
            spaces.append(kernel_basis(ExactMatrix.hstack(F, M.dims[i], outgoing)))
        else:
            spaces.append(ExactMatrix.identity(F, M.dims[i]))
    return submodule(M, spaces)


def projective_cover(M: Representation) -> ProjectiveCover:
    """Minimal epimorphism from a sum of indecomposable projectives onto M."""
    A = M.algebra
    F = M.field
    spaces = _radical_spaces(M)
    _, _, sections = quotient(M, spaces)
    generators: List[Tuple[int, Tuple[Scalar, ...]]] = []
    for i, sigma in enumerate(sections):
        for r in range(sigma.rows):
            generators.append((i, sigma.row(r)))
    vertices = tuple(i for i, _ in generators)
    P = projective_sum(A, vertices)
    blocks = []
    for j in range(A.vertex_count):
        rows = []
        for v, m in generators:
            vec = ExactMatrix(F, 1, M.dims[v], tuple(m))
            for k in A.paths_between(v, j):
                rows.append(list((vec @ M.path_matrix(k)).entries))
        blocks.append(ExactMatrix.from_rows(F, rows, M.dims[j]))
    return ProjectiveCover(P, ModuleMap(P, M, tuple(blocks)), vertices)


def injective_envelope(M: Representation) -> InjectiveEnvelope:
    """Minimal monomorphism into a sum of indecomposable injectives, dual to a cover."""
    cover = projective_cover(k_dual(M))
    I = k_dual(cover.projective)
    mono = ModuleMap(M, I, tuple(b.transpose() for b in cover.epi.blocks))
    return InjectiveEnvelope(I, mono, cover.vertices)


def is_projective(M: Representation) -> bool:
    return projective_cover(M).projective.total_dimension == M.total_dimension


def is_injective(M: Representation) -> bool:
    return injective_envelope(M).injective.total_dimension == M.total_dimension


def projmatrix_to_map(f: ProjMatrix) -> ModuleMap:
    """The right-module map ⊕P(rows) -> ⊕P(cols) given by left multiplication."""
    A = f.algebra
    F = A.field
    P = projective_sum(A, f.row_vertices)
    Q = projective_sum(A, f.col_vertices)
    n = A.vertex_count
    target_pos = []
    for j in range(n):
        pos: Dict[Tuple[int, int], int] = {}
        for c, v in enumerate(f.col_vertices):
            for k in A.paths_between(v, j):
                pos[(c, k)] = len(pos)
        target_pos.append(pos)
    blocks = []
    for j in range(n):
        rows = []
        for r, i in enumerate(f.row_vertices):
            for k in A.paths_between(i, j):
                row = [F.zero] * Q.dims[j]
                for c in range(len(f.col_vertices)):
                    entry = f.entries[r][c]
                    if not entry:
                        continue
                    for q, coeff in A.multiply(entry, {k: F.one}).items():
                        row[target_pos[j][(c, q)]] = F.add(row[target_pos[j][(c, q)]], coeff)
                rows.append(row)
        blocks.append(ExactMatrix.from_rows(F, rows, Q.dims[j]))
    return ModuleMap(P, Q, tuple(blocks))


def map_to_projmatrix(g: ModuleMap, rows: Sequence[int], cols: Sequence[int]) -> ProjMatrix:
    """Read a map between projective sums back as a ProjMatrix via generator images."""
    A = g.source.algebra
    entries = []
    for r, i in enumerate(rows):
        # position of the generator e_i of summand r inside the source vertex-i space
        gen = sum(len(A.paths_between(v, i)) for v in rows[:r])
        image = g.blocks[i].row(gen)
        row = []
        pos = 0
        for j in cols:
            entry: Element = {}
            for k in A.paths_between(j, i):
                if image[pos] != 0:
                    entry[k] = image[pos]
                pos += 1
            row.append(entry)
        entries.append(tuple(row))
    return ProjMatrix(A, tuple(rows), tuple(cols), tuple(entries))


def random_projmatrix(
    A: BoundQuiverAlgebra,
    rng: random.Random,
    rows: Sequence[int],
    cols: Sequence[int],
    radical: bool = True,
) -> ProjMatrix:
    F = A.field
    entries = []
    for i in rows:
        row = []
        for j in cols:
            entry: Element = {}
            for k in A.paths_between(j, i):
                if radical and A.length_of[k] == 0:
                    continue
                c = F.random_element(rng)
                if c != 0:
                    entry[k] = c
            row.append(entry)
        entries.append(tuple(row))
    return ProjMatrix(A, tuple(rows), tuple(cols), tuple(entries))


def _random_vertices(A: BoundQuiverAlgebra, rng: random.Random, max_mult: int, at_least_one: bool) -> List[int]:
    vertices = [v for v in range(A.vertex_count) for _ in range(rng.randint(0, max_mult))]
    if at_least_one and not vertices:
        vertices = [rng.randrange(A.vertex_count)]
    return vertices


def random_presentation(A: BoundQuiverAlgebra, seed: int, max_vertex_dim: int = 2) -> ProjMatrix:
    rng = random.Random(seed)
    p0 = _random_vertices(A, rng, max_vertex_dim, True)
    p1 = _random_vertices(A, rng, max_vertex_dim, False)
    return random_projmatrix(A, rng, p1, p0)


def random_module(A: BoundQuiverAlgebra, seed: int, max_vertex_dim: int = 2) -> Representation:
    """Cokernel of a seeded random radical presentation."""
    if max_vertex_dim < 1:
        raise ValueError("max_vertex_dim must be at least 1")
    M, _ = map_cokernel(projmatrix_to_map(random_presentation(A, seed, max_vertex_dim)))
    return M


def _invertible(f: ModuleMap) -> bool:
    return all(rank(b) == b.rows for b in f.blocks)


def is_isomorphic(M: Representation, N: Representation, seed: int = 0) -> bool:
    """Search Hom(M, N) for a map with every vertex block invertible."""
    if M.dims != N.dims:
        return False
    if M.is_zero():
        return True
    basis = hom_basis(M, N)
    if not basis:
        return False
    F = M.field
    p = F.characteristic
    if p in (2, 3) and p ** len(basis) <= 4096:
        for coeffs in itertools.product(range(p), repeat=len(basis)):
            if not any(coeffs):
                continue
            f = _combine(basis, coeffs)
            if _invertible(f):
                return True
        return False
    rng = random.Random(seed)
    for _ in range(32):
        if p:
            coeffs = [rng.randrange(p) for _ in basis]
        else:
            coeffs = [rng.randint(-50, 50) for _ in basis]
        if _invertible(_combine(basis, coeffs)):
            return True
    return False


def _combine(basis: Sequence[ModuleMap], coeffs: Sequence[int]) -> ModuleMap:
    F = basis[0].source.field
    total = ModuleMap.zero(basis[0].source, basis[0].target)
    for f, c in zip(basis, coeffs):
        if c:
            total = total + f.scale(F.coerce(c))
    return total
