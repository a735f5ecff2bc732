"""Bound quiver algebras kQ/I and morphisms between their projectives.

Copyright (c) 2026 The nabelian developers
SPDX-License-Identifier: MIT
See LICENSE for details.

Paths are read left to right: the word ``(a, b)`` is "a, then b" and is
nonzero only when the target of a is the source of b. Words compare
length-lexicographically by arrow declaration order. The opposite algebra
shares the basis indexing: basis element k of the opposite is the reversal
of basis element k.
"""

from dataclasses import dataclass, field as dc_field
from typing import TYPE_CHECKING, Callable, Dict, Iterable, Iterator, List, Mapping, Optional, Sequence, Tuple

from .errors import (
    AlgebraMismatchError,
    InadmissibleError,
    NabelianError,
    NotComposableError,
    NotFiniteDimensionalError,
    ShapeError,
    UnknownVertexError,
)
from .linalg import ExactMatrix, FieldSpec, Scalar, row_space
from .log import get_logger

if TYPE_CHECKING:
    from .modules import ModuleMap

logger = get_logger(__name__)

Word = Tuple[int, ...]
PathKey = Tuple[int, Word]
Poly = Dict[Word, Scalar]
Element = Dict[int, Scalar]

__all__ = [
    "Arrow",
    "Quiver",
    "Relation",
    "GroebnerRule",
    "GroebnerBasis",
    "BoundQuiverAlgebra",
    "ProjMatrix",
    "groebner_complete",
    "build_algebra",
    "opposite",
    "dual_projmatrix",
    "projmatrix_hom_basis",
    "TRIVIAL_PREFIX",
]

TRIVIAL_PREFIX = "e_"


@dataclass(frozen=True)
class Arrow:
    label: str
    source: str
    target: str


@dataclass(frozen=True)
class Quiver:
    vertices: Tuple[str, ...]
    arrows: Tuple[Arrow, ...] = ()

    def __post_init__(self) -> None:
        if len(set(self.vertices)) != len(self.vertices):
            raise NabelianError("vertex labels must be unique")
        labels = [a.label for a in self.arrows]
        if len(set(labels)) != len(labels):
            raise NabelianError("arrow labels must be unique")
        declared = set(self.vertices)
        for a in self.arrows:
            for end in (a.source, a.target):
                if end not in declared:
                    raise UnknownVertexError(f"arrow {a.label} uses undeclared vertex {end}")

    def vertex_index(self, label: str) -> int:
        try:
            return self.vertices.index(label)
        except ValueError:
            raise UnknownVertexError(f"unknown vertex {label!r}") from None

    def arrow_index(self, label: str) -> int:
        for k, a in enumerate(self.arrows):
            if a.label == label:
                return k
        raise NabelianError(f"unknown arrow {label!r}")

    def arrow(self, label: str) -> Arrow:
        return self.arrows[self.arrow_index(label)]

    def arrow_source(self, k: int) -> int:
        return self.vertex_index(self.arrows[k].source)

    def arrow_target(self, k: int) -> int:
        return self.vertex_index(self.arrows[k].target)

    def is_path(self, word: Word) -> bool:
        return all(
            self.arrows[x].target == self.arrows[y].source for x, y in zip(word, word[1:])
        )

    def opposite(self) -> "Quiver":
        return Quiver(
            self.vertices,
            tuple(Arrow(a.label, a.target, a.source) for a in self.arrows),
        )


@dataclass(frozen=True)
class Relation:
    """A linear combination of parallel paths, each term (coefficient, arrow labels)."""

    terms: Tuple[Tuple[Scalar, Tuple[str, ...]], ...]

    def __str__(self) -> str:
        parts = []
        for c, labels in self.terms:
            parts.append(f"{c}*{'*'.join(labels)}")
        return " + ".join(parts) if parts else "0"


@dataclass(frozen=True)
class GroebnerRule:
    """Rewrite rule ``lead -> sum(c * w for w, c in tail)``."""

    lead: Word
    tail: Tuple[Tuple[Word, Scalar], ...] = ()


@dataclass(frozen=True)
class GroebnerBasis:
    rules: Tuple[GroebnerRule, ...]
    irreducible: Tuple[PathKey, ...]
    finite: bool
    degree_cap: int


def _deglex(word: Word) -> Tuple[int, Word]:
    return (len(word), word)


def _deglex_reversed(word: Word) -> Tuple[int, Word]:
    return (len(word), tuple(reversed(word)))


class _Rewriter:
    """Reduces polynomials in the free path algebra by a set of rules."""

    def __init__(self, field: FieldSpec, rules: Iterable[GroebnerRule], key: Callable[[Word], tuple]):
        self.field = field
        self.key = key
        self.rules: Dict[Word, Tuple[Tuple[Word, Scalar], ...]] = {r.lead: r.tail for r in rules}
        self.lengths = sorted({len(lead) for lead in self.rules})

    def find(self, word: Word) -> Optional[Tuple[int, Word]]:
        for n in self.lengths:
            for pos in range(len(word) - n + 1):
                sub = word[pos : pos + n]
                if sub in self.rules:
                    return pos, sub
        return None

    def has_suffix_lead(self, word: Word) -> bool:
        return any(len(word) >= n and word[-n:] in self.rules for n in self.lengths)

    def reduce(self, poly: Poly) -> Poly:
        F = self.field
        todo = {w: c for w, c in poly.items() if c != 0}
        done: Poly = {}
        while todo:
            word = max(todo, key=self.key)
            c = todo.pop(word)
            hit = self.find(word)
            if hit is None:
                done[word] = c
                continue
            pos, lead = hit
            left, right = word[:pos], word[pos + len(lead) :]
            for w, d in self.rules[lead]:
                nw = left + w + right
                v = F.add(todo.get(nw, F.zero), F.mul(c, d))
                if v == 0:
                    todo.pop(nw, None)
                else:
                    todo[nw] = v
        return done


def _monic(field: FieldSpec, poly: Poly, key: Callable[[Word], tuple]) -> Optional[GroebnerRule]:
    poly = {w: c for w, c in poly.items() if c != 0}
    if not poly:
        return None
    lead = max(poly, key=key)
    inv = field.inv(poly[lead])
    tail = [(w, field.neg(field.mul(inv, c))) for w, c in poly.items() if w != lead]
    tail.sort(key=lambda t: key(t[0]), reverse=True)
    return GroebnerRule(lead, tuple(tail))


def _rule_poly(field: FieldSpec, rule: GroebnerRule) -> Poly:
    poly = {rule.lead: field.one}
    for w, c in rule.tail:
        poly[w] = field.neg(c)
    return poly


def _interreduce(field: FieldSpec, rules: List[GroebnerRule], key: Callable[[Word], tuple]) -> List[GroebnerRule]:
    rules = list(dict.fromkeys(rules))
    changed = True
    while changed:
        changed = False
        for rule in rules:
            others = [r for r in rules if r is not rule]
            reduced = _monic(field, _Rewriter(field, others, key).reduce(_rule_poly(field, rule)), key)
            if reduced != rule:
                rules = others + ([reduced] if reduced is not None else [])
                changed = True
                break
    return sorted(rules, key=lambda r: key(r.lead))


def _overlaps(g: GroebnerRule, h: GroebnerRule, max_len: int) -> Iterator[Tuple[Word, Word, Word]]:
    """Yield (w, u, v) with w = g.lead + u = v + h.lead."""
    a, b = g.lead, h.lead
    for k in range(1, min(len(a), len(b))):
        if a[-k:] == b[:k]:
            w = a + b[k:]
            if len(w) <= max_len:
                yield w, b[k:], a[: len(a) - k]


def _normalize_relations(field: FieldSpec, quiver: Quiver, relations: Sequence[Relation]) -> List[Poly]:
    polys = []
    for rel in relations:
        poly: Poly = {}
        ends = set()
        for coeff, labels in rel.terms:
            word = tuple(quiver.arrow_index(x) for x in labels)
            if len(word) < 2:
                raise InadmissibleError(f"relation {rel} has a term of length {len(word)} < 2")
            if not quiver.is_path(word):
                raise InadmissibleError(f"term {'*'.join(labels)} of relation {rel} is not a path")
            ends.add((quiver.arrow_source(word[0]), quiver.arrow_target(word[-1])))
            poly[word] = field.add(poly.get(word, field.zero), field.coerce(coeff))
        if len(ends) > 1:
            raise InadmissibleError(f"relation {rel} mixes paths with different endpoints")
        poly = {w: c for w, c in poly.items() if c != 0}
        if poly:
            polys.append(poly)
    return polys


def _enumerate_irreducible(
    quiver: Quiver, rewriter: _Rewriter, degree_cap: int, key: Callable[[Word], tuple]
) -> Tuple[List[PathKey], bool]:
    level: List[PathKey] = [(i, ()) for i in range(len(quiver.vertices))]
    found = list(level)
    for length in range(1, degree_cap + 1):
        nxt: List[PathKey] = []
        for source, word in level:
            end = quiver.arrow_target(word[-1]) if word else source
            for k, arrow in enumerate(quiver.arrows):
                if quiver.vertex_index(arrow.source) != end:
                    continue
                candidate = word + (k,)
                if not rewriter.has_suffix_lead(candidate):
                    nxt.append((source, candidate))
        if not nxt:
            return found, True
        nxt.sort(key=lambda p: key(p[1]))
        if length == degree_cap:
            return found, False
        found.extend(nxt)
        level = nxt
    return found, True


def groebner_complete(
    field: FieldSpec,
    quiver: Quiver,
    relations: Sequence[Relation],
    degree_cap: int = 20,
    strict: bool = True,
) -> GroebnerBasis:
    """Complete the relations to a deg-lex Groebner basis of the ideal they generate.

    Overlaps longer than ``2 * degree_cap`` are not processed. The returned
    ``finite`` flag certifies that no irreducible path reaches
    ``degree_cap``; with ``strict`` a missing certificate raises instead.
    """
    if degree_cap < 1:
        raise NabelianError("degree cap must be at least 1")
    polys = _normalize_relations(field, quiver, relations)
    longest = max((len(w) for p in polys for w in p), default=0)
    if degree_cap < longest:
        raise NabelianError(f"degree cap {degree_cap} is below the relation length {longest}")
    key = _deglex
    rules = _interreduce(field, [r for r in (_monic(field, p, key) for p in polys) if r], key)
    seen = set()
    rounds = 0
    while True:
        rounds += 1
        rewriter = _Rewriter(field, rules, key)
        fresh: List[GroebnerRule] = []
        for g in rules:
            for h in rules:
                for w, u, v in _overlaps(g, h, 2 * degree_cap):
                    if (g, h, w) in seen:
                        continue
                    seen.add((g, h, w))
                    spoly: Poly = {}
                    for word, c in _rule_poly(field, g).items():
                        spoly[word + u] = c
                    for word, c in _rule_poly(field, h).items():
                        nw = v + word
                        spoly[nw] = field.sub(spoly.get(nw, field.zero), c)
                    rule = _monic(field, rewriter.reduce(spoly), key)
                    if rule is not None:
                        fresh.append(rule)
        logger.debug("groebner round %d: %d rules, %d new", rounds, len(rules), len(fresh))
        if not fresh:
            break
        rules = _interreduce(field, rules + fresh, key)
    irreducible, finite = _enumerate_irreducible(quiver, _Rewriter(field, rules, key), degree_cap, key)
    if not finite and strict:
        raise NotFiniteDimensionalError(
            f"irreducible paths of length {degree_cap} exist; raise the degree cap "
            "or check that the relations bound the algebra"
        )
    return GroebnerBasis(tuple(rules), tuple(irreducible), finite, degree_cap)


class BoundQuiverAlgebra:
    """A basic finite-dimensional algebra kQ/I with an explicit path basis.

    Elements are sparse dictionaries ``{basis index: coefficient}``. The
    trivial path e_i has basis index i.
    """

    def __init__(
        self,
        field: FieldSpec,
        quiver: Quiver,
        relations: Tuple[Relation, ...],
        groebner: Tuple[GroebnerRule, ...],
        basis: Tuple[PathKey, ...],
        table: Dict[Tuple[int, int], Element],
        degree_cap: int,
        name: str = "",
        reversed_order: bool = False,
    ):
        self.field = field
        self.quiver = quiver
        self.relations = relations
        self.groebner = groebner
        self.basis = basis
        self.index: Dict[PathKey, int] = {p: k for k, p in enumerate(basis)}
        self.dimension = len(basis)
        self.degree_cap = degree_cap
        self.name = name
        self._table = table
        self._key = _deglex_reversed if reversed_order else _deglex
        self._rewriter = _Rewriter(field, groebner, self._key)
        self._opposite: Optional["BoundQuiverAlgebra"] = None
        self.source_of = tuple(s for s, _ in basis)
        self.target_of = tuple(quiver.arrow_target(w[-1]) if w else s for s, w in basis)
        self.length_of = tuple(len(w) for _, w in basis)
        self._between: Dict[Tuple[int, int], Tuple[int, ...]] = {}
        for k in range(self.dimension):
            pair = (self.source_of[k], self.target_of[k])
            self._between[pair] = self._between.get(pair, ()) + (k,)

    def __repr__(self) -> str:
        label = self.name or "algebra"
        return f"<BoundQuiverAlgebra {label} over {self.field.label}, dim {self.dimension}>"

    @property
    def vertex_count(self) -> int:
        return len(self.quiver.vertices)

    def vertex_label(self, i: int) -> str:
        return self.quiver.vertices[i]

    def vertex_index(self, label: str) -> int:
        return self.quiver.vertex_index(label)

    def paths_between(self, i: int, j: int) -> Tuple[int, ...]:
        """Basis indices of paths from vertex i to vertex j, in basis order."""
        return self._between.get((i, j), ())

    def paths_from(self, i: int) -> Tuple[int, ...]:
        return tuple(k for k in range(self.dimension) if self.source_of[k] == i)

    def block_dimension(self, i: int, j: int) -> int:
        return len(self.paths_between(i, j))

    def cartan_matrix(self) -> List[List[int]]:
        n = self.vertex_count
        return [[self.block_dimension(i, j) for j in range(n)] for i in range(n)]

    def is_semisimple(self) -> bool:
        return self.dimension == self.vertex_count

    def multiply_basis(self, i: int, j: int) -> Element:
        return self._table.get((i, j), {})

    def multiply(self, x: Mapping[int, Scalar], y: Mapping[int, Scalar]) -> Element:
        F = self.field
        out: Element = {}
        for i, a in x.items():
            for j, b in y.items():
                for k, c in self._table.get((i, j), {}).items():
                    v = F.add(out.get(k, F.zero), F.mul(F.mul(a, b), c))
                    if v == 0:
                        out.pop(k, None)
                    else:
                        out[k] = v
        return out

    def add(self, x: Mapping[int, Scalar], y: Mapping[int, Scalar], scale: Optional[Scalar] = None) -> Element:
        F = self.field
        out = dict(x)
        for k, b in y.items():
            if scale is not None:
                b = F.mul(scale, b)
            v = F.add(out.get(k, F.zero), b)
            if v == 0:
                out.pop(k, None)
            else:
                out[k] = v
        return out

    def arrow_basis_index(self, k: int) -> int:
        return self.index[(self.quiver.arrow_source(k), (k,))]

    def trivial(self, i: int) -> Element:
        return {i: self.field.one}

    def unit(self) -> Element:
        return {i: self.field.one for i in range(self.vertex_count)}

    def normal_form(self, source: int, word: Word) -> Element:
        """Reduce the path ``word`` starting at ``source`` to basis coordinates."""
        if not word:
            return self.trivial(source)
        if not self.quiver.is_path(word) or self.quiver.arrow_source(word[0]) != source:
            return {}
        reduced = self._rewriter.reduce({word: self.field.one})
        out: Element = {}
        for w, c in reduced.items():
            try:
                out[self.index[(source, w)]] = c
            except KeyError:
                raise NotFiniteDimensionalError(
                    f"path {self.format_word(w)} is irreducible but beyond the basis"
                ) from None
        return out

    def element(self, terms: Iterable[Tuple[Scalar, Sequence[str]]]) -> Element:
        """Build an element from (coefficient, labels) terms.

        A single label ``e_<vertex>`` denotes a trivial path. Non-composable
        words contribute zero.
        """
        out: Element = {}
        for coeff, labels in terms:
            c = self.field.coerce(coeff)
            if len(labels) == 1 and labels[0].startswith(TRIVIAL_PREFIX) and labels[0] not in {
                a.label for a in self.quiver.arrows
            }:
                part = self.trivial(self.vertex_index(labels[0][len(TRIVIAL_PREFIX) :]))
            else:
                word = tuple(self.quiver.arrow_index(x) for x in labels)
                if not word:
                    raise NabelianError("empty path in element")
                part = self.normal_form(self.quiver.arrow_source(word[0]), word)
            out = self.add(out, part, c)
        return out

    def format_word(self, word: Word) -> str:
        return "*".join(self.quiver.arrows[k].label for k in word)

    def format_basis(self, k: int) -> str:
        source, word = self.basis[k]
        if not word:
            return f"{TRIVIAL_PREFIX}{self.vertex_label(source)}"
        return self.format_word(word)

    def format_element(self, x: Mapping[int, Scalar]) -> str:
        if not x:
            return "0"
        parts = []
        for k in sorted(x):
            c = x[k]
            name = self.format_basis(k)
            parts.append(name if c == 1 else f"{self.field.format(c)}*{name}")
        return " + ".join(parts)

    def arrow_ideal_powers(self) -> List[int]:
        """Dimensions of J, J^2, ... down to zero; raises if J is not nilpotent."""
        F = self.field
        radical = [k for k in range(self.dimension) if self.length_of[k] > 0]
        current = ExactMatrix.zeros(F, 0, self.dimension)
        if radical:
            current = ExactMatrix.from_rows(
                F,
                [[F.one if k == r else F.zero for k in range(self.dimension)] for r in radical],
                self.dimension,
            )
        dims = []
        while current.rows:
            dims.append(current.rows)
            products = []
            for row in current.rows_list():
                x = {k: c for k, c in enumerate(row) if c != 0}
                for r in radical:
                    y = self.multiply(x, {r: F.one})
                    if y:
                        products.append([y.get(k, F.zero) for k in range(self.dimension)])
            if not products:
                break
            nxt = row_space(ExactMatrix.from_rows(F, products, self.dimension))
            if nxt.rows == current.rows:
                raise InadmissibleError(
                    "the arrow ideal is not nilpotent modulo the relations; the ideal is not admissible"
                )
            current = nxt
        return dims

    def radical_layers(self) -> List[int]:
        """Dimensions of J^k / J^(k+1), starting with the top Λ / J."""
        powers = [self.dimension] + self.arrow_ideal_powers() + [0]
        return [a - b for a, b in zip(powers, powers[1:]) if a]

    def loewy_length(self) -> int:
        return len(self.arrow_ideal_powers()) + (1 if self.dimension else 0)

    def opposite(self) -> "BoundQuiverAlgebra":
        if self._opposite is None:
            op_rules = tuple(
                GroebnerRule(
                    tuple(reversed(r.lead)),
                    tuple((tuple(reversed(w)), c) for w, c in r.tail),
                )
                for r in self.groebner
            )
            op_basis = tuple(
                (self.target_of[k], tuple(reversed(w))) for k, (_, w) in enumerate(self.basis)
            )
            op_table = {(j, i): prod for (i, j), prod in self._table.items()}
            op_relations = tuple(
                Relation(tuple((c, tuple(reversed(labels))) for c, labels in rel.terms))
                for rel in self.relations
            )
            op = BoundQuiverAlgebra(
                self.field,
                self.quiver.opposite(),
                op_relations,
                op_rules,
                op_basis,
                op_table,
                self.degree_cap,
                name=f"{self.name}^op" if self.name else "",
                reversed_order=self._key is _deglex,
            )
            op._opposite = self
            self._opposite = op
        return self._opposite

    def check_same(self, other: "BoundQuiverAlgebra") -> None:
        if other is not self:
            raise AlgebraMismatchError(f"{other!r} is not {self!r}")


def build_algebra(
    field: FieldSpec,
    quiver: Quiver,
    relations: Sequence[Relation] = (),
    degree_cap: int = 20,
    name: str = "",
) -> BoundQuiverAlgebra:
    gb = groebner_complete(field, quiver, relations, degree_cap)
    basis = gb.irreducible
    index = {p: k for k, p in enumerate(basis)}
    rewriter = _Rewriter(field, gb.rules, _deglex)
    targets = [quiver.arrow_target(w[-1]) if w else s for s, w in basis]
    table: Dict[Tuple[int, int], Element] = {}
    for i, (si, wi) in enumerate(basis):
        for j, (sj, wj) in enumerate(basis):
            if targets[i] != sj:
                continue
            if not wi:
                table[(i, j)] = {j: field.one}
            elif not wj:
                table[(i, j)] = {i: field.one}
            else:
                reduced = rewriter.reduce({wi + wj: field.one})
                product = {index[(si, w)]: c for w, c in reduced.items()}
                if product:
                    table[(i, j)] = product
    algebra = BoundQuiverAlgebra(field, quiver, tuple(relations), gb.rules, basis, table, degree_cap, name)
    algebra.arrow_ideal_powers()
    logger.debug("built %r with %d groebner rules", algebra, len(gb.rules))
    return algebra


def opposite(algebra: BoundQuiverAlgebra) -> BoundQuiverAlgebra:
    return algebra.opposite()


@dataclass(frozen=True, eq=False)
class ProjMatrix:
    """A morphism ⊕_r P(i_r) -> ⊕_c P(j_c) of projective right modules.

    ``entries[r][c]`` lies in e_{j_c} Λ e_{i_r}, the span of paths from j_c
    to i_r, and the generator of summand r is sent to the row r placed in
    the target summands.
    """

    algebra: BoundQuiverAlgebra
    row_vertices: Tuple[int, ...]
    col_vertices: Tuple[int, ...]
    entries: Tuple[Tuple[Element, ...], ...] = dc_field(default=())

    def __post_init__(self) -> None:
        A = self.algebra
        if len(self.entries) != len(self.row_vertices) or any(
            len(row) != len(self.col_vertices) for row in self.entries
        ):
            raise ShapeError(
                f"ProjMatrix entries do not match {len(self.row_vertices)}x{len(self.col_vertices)}"
            )
        for r, i in enumerate(self.row_vertices):
            for c, j in enumerate(self.col_vertices):
                allowed = set(A.paths_between(j, i))
                for k, v in self.entries[r][c].items():
                    if v != 0 and k not in allowed:
                        raise ShapeError(
                            f"entry ({r},{c}) = {A.format_basis(k)} is not a path "
                            f"from {A.vertex_label(j)} to {A.vertex_label(i)}"
                        )

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, ProjMatrix):
            return NotImplemented
        return (
            self.algebra is other.algebra
            and self.row_vertices == other.row_vertices
            and self.col_vertices == other.col_vertices
            and self.entries == other.entries
        )

    @classmethod
    def identity(cls, algebra: BoundQuiverAlgebra, vertices: Sequence[int]) -> "ProjMatrix":
        vs = tuple(vertices)
        entries = tuple(
            tuple(algebra.trivial(i) if r == c else {} for c in range(len(vs))) for r, i in enumerate(vs)
        )
        return cls(algebra, vs, vs, entries)

    @classmethod
    def zero(cls, algebra: BoundQuiverAlgebra, rows: Sequence[int], cols: Sequence[int]) -> "ProjMatrix":
        return cls(algebra, tuple(rows), tuple(cols), tuple(tuple({} for _ in cols) for _ in rows))

    @property
    def shape(self) -> Tuple[int, int]:
        return (len(self.row_vertices), len(self.col_vertices))

    def is_zero(self) -> bool:
        return all(not e for row in self.entries for e in row)

    def is_radical(self) -> bool:
        """True when no entry has a trivial-path component."""
        n = self.algebra.vertex_count
        return all(k >= n for row in self.entries for e in row for k in e)

    def compose(self, other: "ProjMatrix") -> "ProjMatrix":
        """Flow-order composition: first ``self``, then ``other``."""
        self.algebra.check_same(other.algebra)
        if self.col_vertices != other.row_vertices:
            raise NotComposableError(
                f"target {self.col_vertices} does not match source {other.row_vertices}"
            )
        A = self.algebra
        entries = []
        for r in range(len(self.row_vertices)):
            row = []
            for d in range(len(other.col_vertices)):
                acc: Element = {}
                for c in range(len(self.col_vertices)):
                    if self.entries[r][c] and other.entries[c][d]:
                        acc = A.add(acc, A.multiply(other.entries[c][d], self.entries[r][c]))
                row.append(acc)
            entries.append(tuple(row))
        return ProjMatrix(A, self.row_vertices, other.col_vertices, tuple(entries))

    def __add__(self, other: "ProjMatrix") -> "ProjMatrix":
        self.algebra.check_same(other.algebra)
        if (self.row_vertices, self.col_vertices) != (other.row_vertices, other.col_vertices):
            raise ShapeError("cannot add ProjMatrices with different summands")
        A = self.algebra
        entries = tuple(
            tuple(A.add(a, b) for a, b in zip(ra, rb)) for ra, rb in zip(self.entries, other.entries)
        )
        return ProjMatrix(A, self.row_vertices, self.col_vertices, entries)

    def scale(self, c: Scalar) -> "ProjMatrix":
        A = self.algebra
        entries = tuple(tuple(A.add({}, e, c) for e in row) for row in self.entries)
        return ProjMatrix(A, self.row_vertices, self.col_vertices, entries)

    def direct_sum(self, other: "ProjMatrix") -> "ProjMatrix":
        self.algebra.check_same(other.algebra)
        nc1, nc2 = len(self.col_vertices), len(other.col_vertices)
        top = tuple(tuple(row) + tuple({} for _ in range(nc2)) for row in self.entries)
        bottom = tuple(tuple({} for _ in range(nc1)) + tuple(row) for row in other.entries)
        return ProjMatrix(
            self.algebra,
            self.row_vertices + other.row_vertices,
            self.col_vertices + other.col_vertices,
            top + bottom,
        )

    def dual(self) -> "ProjMatrix":
        return dual_projmatrix(self)

    def to_module_map(self) -> "ModuleMap":
        from .modules import projmatrix_to_map

        return projmatrix_to_map(self)

    def coefficient_vector(self) -> List[Scalar]:
        """Entries flattened as (row, col, basis index) coordinates."""
        A = self.algebra
        out: List[Scalar] = []
        for r, i in enumerate(self.row_vertices):
            for c, j in enumerate(self.col_vertices):
                e = self.entries[r][c]
                out.extend(e.get(k, A.field.zero) for k in A.paths_between(j, i))
        return out

    def to_json(self) -> dict:
        A = self.algebra
        return {
            "source": [A.vertex_label(i) for i in self.row_vertices],
            "target": [A.vertex_label(j) for j in self.col_vertices],
            "entries": [[A.format_element(e) for e in row] for row in self.entries],
        }


def dual_projmatrix(f: ProjMatrix) -> ProjMatrix:
    """Hom(-, Λ) applied to f: the transpose, read over the opposite algebra."""
    op = f.algebra.opposite()
    entries = tuple(
        tuple(dict(f.entries[r][c]) for r in range(len(f.row_vertices)))
        for c in range(len(f.col_vertices))
    )
    return ProjMatrix(op, f.col_vertices, f.row_vertices, entries)


def projmatrix_hom_basis(
    algebra: BoundQuiverAlgebra, rows: Sequence[int], cols: Sequence[int]
) -> List[ProjMatrix]:
    """Basis of all morphisms ⊕P(rows) -> ⊕P(cols), one path per element."""
    basis = []
    for r, i in enumerate(rows):
        for c, j in enumerate(cols):
            for k in algebra.paths_between(j, i):
                entries = [[{} for _ in cols] for _ in rows]
                entries[r][c] = {k: algebra.field.one}
                basis.append(
                    ProjMatrix(algebra, tuple(rows), tuple(cols), tuple(tuple(row) for row in entries))
                )
    return basis
