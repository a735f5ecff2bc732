"""Reader for the line-oriented algebra file format.

Copyright (c) 2026 The nabelian developers
SPDX-License-Identifier: MIT
See LICENSE for details.

Example::

    # the Auslander algebra of k[x]/(x^2)
    field Q
    vertex 1 2
    arrow a 1 2
    arrow b 2 1
    relation a*b

    module M
    dim 1 1
    map a [[1]]

Matrices and ProjMatrix entries are read as YAML flow sequences, so
``[[1, 0], [1/2, 1]]`` and ``[[a, 2*b - e_1]]`` are both accepted.
"""

import re
from dataclasses import dataclass, field as dc_field
from fractions import Fraction
from pathlib import Path
from typing import Any, Dict, List, Optional, Tuple, Union

import yaml
from yaml.error import YAMLError

from .algebra import Arrow, BoundQuiverAlgebra, ProjMatrix, Quiver, Relation, build_algebra
from .errors import AlgebraParseError, NabelianError
from .linalg import ExactMatrix, FieldSpec, is_prime
from .log import get_logger
from .modules import Representation, checked, standard_module

logger = get_logger(__name__)

__all__ = [
    "AlgebraFile",
    "parse_algebra",
    "load_algebra",
    "parse_combination",
    "parse_element",
    "parse_map_spec",
    "resolve_module",
]

Term = Tuple[Fraction, Tuple[str, ...]]

_NUMBER = re.compile(r"^[+-]?\d+(/\d+)?$")
_STANDARD = re.compile(r"^([SPI])\((.+)\)$")
_MAP_SPEC = re.compile(r"^\s*P\((?P<src>[^)]*)\)\s*->\s*P\((?P<tgt>[^)]*)\)\s*:\s*(?P<entries>.+)$", re.S)
_KINDS = {"S": "simple", "P": "projective", "I": "injective"}


@dataclass
class AlgebraFile:
    """A parsed algebra file: the algebra plus its named modules, in file order."""

    algebra: BoundQuiverAlgebra
    modules: Dict[str, Representation] = dc_field(default_factory=dict)
    path: Optional[str] = None


def parse_combination(text: str) -> List[Term]:
    """``2*a*b - 1/2*c + e_1`` -> [(2, (a, b)), (-1/2, (c,)), (1, (e_1,))].

    A lone ``0`` is the empty combination.
    """
    source = text.strip()
    if not source:
        raise ValueError("empty expression")
    terms: List[Term] = []
    for chunk in source.replace("-", "+-").split("+"):
        chunk = chunk.strip()
        if not chunk:
            continue
        sign = Fraction(1)
        if chunk.startswith("-"):
            sign = Fraction(-1)
            chunk = chunk[1:].strip()
        factors = [f.strip() for f in chunk.split("*")]
        if any(not f for f in factors):
            raise ValueError(f"malformed term {chunk!r}")
        coeff = Fraction(1)
        if _NUMBER.match(factors[0]):
            coeff = Fraction(factors.pop(0))
        for f in factors:
            if _NUMBER.match(f):
                raise ValueError(f"coefficient {f!r} must come first in {chunk!r}")
        if not factors:
            if coeff != 0:
                raise ValueError(f"scalar term {chunk!r} needs a path")
            continue
        terms.append((sign * coeff, tuple(factors)))
    return terms


def parse_element(A: BoundQuiverAlgebra, value: Any) -> Dict[int, Any]:
    """An algebra element from a YAML scalar: 0, a number times paths, or a combination."""
    if isinstance(value, bool) or isinstance(value, float):
        raise ValueError(f"{value!r} is not an exact path combination")
    if isinstance(value, int):
        if value != 0:
            raise ValueError(f"integer entry {value} needs a path")
        return {}
    if value is None:
        return {}
    return A.element(parse_combination(str(value)))


def _parse_field(args: List[str]) -> FieldSpec:
    if args == ["Q"]:
        return FieldSpec.rationals()
    if len(args) == 2 and args[0] == "F" and args[1].isdigit():
        p = int(args[1])
        if not is_prime(p):
            raise ValueError(f"{p} is not prime")
        return FieldSpec.prime(p)
    raise ValueError(f"expected 'field Q' or 'field F <p>', got {' '.join(['field'] + args)!r}")


def _flow(text: str) -> Any:
    try:
        return yaml.safe_load(text)
    except YAMLError as exc:
        raise ValueError(f"cannot read {text!r}: {exc}") from None


def _matrix(field: FieldSpec, text: str, shape: Tuple[int, int]) -> ExactMatrix:
    rows, cols = shape
    data = _flow(text)
    if data is None or data == []:
        data = []
    if not isinstance(data, list) or any(not isinstance(row, list) for row in data):
        raise ValueError("a matrix is a list of rows, like [[1, 0], [0, 1]]")
    if rows == 0 or cols == 0:
        return ExactMatrix.zeros(field, rows, cols)
    if len(data) != rows or any(len(row) != cols for row in data):
        raise ValueError(f"expected a {rows}x{cols} matrix")
    try:
        return ExactMatrix.from_rows(field, [[_scalar(x) for x in row] for row in data], cols)
    except (TypeError, ZeroDivisionError) as exc:
        raise ValueError(str(exc)) from None


def _scalar(x: Any) -> Union[int, str, Fraction]:
    if isinstance(x, bool) or isinstance(x, float) or x is None:
        raise TypeError(f"{x!r} is not an exact scalar")
    if isinstance(x, int):
        return x
    text = str(x).strip()
    if not _NUMBER.match(text):
        raise TypeError(f"{x!r} is not an integer or num/den")
    return Fraction(text)


@dataclass
class _ModuleDraft:
    name: str
    line: int
    dims: Optional[List[int]] = None
    maps: Dict[str, Tuple[str, int]] = dc_field(default_factory=dict)


def parse_algebra(text: str, name: str = "", degree_cap: int = 20, path: Optional[str] = None) -> AlgebraFile:
    """Parse the algebra format; every error names its 1-based line."""
    field: Optional[FieldSpec] = None
    vertices: List[str] = []
    arrows: List[Arrow] = []
    relations: List[Tuple[Relation, int]] = []
    drafts: List[_ModuleDraft] = []
    current: Optional[_ModuleDraft] = None
    last_line = 0

    for lineno, raw in enumerate(text.splitlines(), start=1):
        last_line = lineno
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        keyword, _, rest = line.partition(" ")
        rest = rest.strip()
        try:
            if keyword == "field":
                if field is not None:
                    raise ValueError("field declared twice")
                field = _parse_field(rest.split())
            elif keyword == "name":
                name = rest
            elif keyword == "degree_cap":
                degree_cap = int(rest)
            elif keyword == "vertex":
                if current is not None:
                    raise ValueError("vertices must be declared before modules")
                labels = rest.split()
                if not labels:
                    raise ValueError("vertex needs at least one label")
                vertices.extend(labels)
            elif keyword == "arrow":
                if current is not None:
                    raise ValueError("arrows must be declared before modules")
                parts = rest.split()
                if len(parts) != 3:
                    raise ValueError("expected 'arrow <label> <source> <target>'")
                label, src, tgt = parts
                for v in (src, tgt):
                    if v not in vertices:
                        raise ValueError(f"arrow {label} uses undeclared vertex {v}")
                arrows.append(Arrow(label, src, tgt))
            elif keyword == "relation":
                if current is not None:
                    raise ValueError("relations must be declared before modules")
                terms = parse_combination(rest)
                known = {a.label for a in arrows}
                for _, labels in terms:
                    for x in labels:
                        if x not in known:
                            raise ValueError(f"unknown arrow {x!r}")
                relations.append((Relation(tuple(terms)), lineno))
            elif keyword == "module":
                if not rest:
                    raise ValueError("module needs a name")
                if any(d.name == rest for d in drafts):
                    raise ValueError(f"module {rest!r} defined twice")
                current = _ModuleDraft(rest, lineno)
                drafts.append(current)
            elif keyword == "dim":
                if current is None:
                    raise ValueError("'dim' outside a module block")
                current.dims = [int(x) for x in rest.split()]
                if len(current.dims) != len(vertices):
                    raise ValueError(f"expected {len(vertices)} dimensions, got {len(current.dims)}")
                if any(d < 0 for d in current.dims):
                    raise ValueError("dimensions must be nonnegative")
            elif keyword == "map":
                if current is None:
                    raise ValueError("'map' outside a module block")
                label, _, matrix = rest.partition(" ")
                if label not in {a.label for a in arrows}:
                    raise ValueError(f"unknown arrow {label!r}")
                if label in current.maps:
                    raise ValueError(f"arrow {label} mapped twice in module {current.name}")
                current.maps[label] = (matrix.strip(), lineno)
            else:
                raise ValueError(f"unknown keyword {keyword!r}")
        except ValueError as exc:
            if isinstance(exc, NabelianError):
                raise AlgebraParseError(exc.message, lineno) from None
            raise AlgebraParseError(str(exc), lineno) from None

    if field is None:
        raise AlgebraParseError("missing 'field' declaration", last_line or 1)
    if not vertices:
        raise AlgebraParseError("missing 'vertex' declaration", last_line or 1)
    try:
        quiver = Quiver(tuple(vertices), tuple(arrows))
    except NabelianError as exc:
        raise AlgebraParseError(exc.message, last_line or 1) from None

    A = build_algebra(field, quiver, [r for r, _ in relations], degree_cap=degree_cap, name=name)
    logger.debug("parsed %r with %d relations and %d modules", A, len(relations), len(drafts))

    out = AlgebraFile(A, {}, path)
    for d in drafts:
        out.modules[d.name] = _build_module(A, d)
    return out


def _build_module(A: BoundQuiverAlgebra, draft: _ModuleDraft) -> Representation:
    if draft.dims is None:
        raise AlgebraParseError(f"module {draft.name} has no 'dim' line", draft.line)
    quiver = A.quiver
    maps = {}
    for label, (text, lineno) in draft.maps.items():
        k = quiver.arrow_index(label)
        shape = (draft.dims[quiver.arrow_source(k)], draft.dims[quiver.arrow_target(k)])
        try:
            maps[label] = _matrix(A.field, text, shape)
        except (ValueError, NabelianError) as exc:
            raise AlgebraParseError(f"arrow {label}: {exc}", lineno) from None
    M = Representation.from_dims(A, draft.dims, maps, name=draft.name)
    try:
        return checked(M)
    except NabelianError as exc:
        raise AlgebraParseError(f"module {draft.name}: {exc.message}", draft.line) from None


def load_algebra(path: Union[str, Path], degree_cap: int = 20) -> AlgebraFile:
    """Read an algebra file; the file stem names the algebra unless a 'name' line does."""
    p = Path(path)
    text = p.read_text(encoding="utf-8")
    return parse_algebra(text, name=p.stem, degree_cap=degree_cap, path=str(p))


def resolve_module(parsed: AlgebraFile, name: str) -> Representation:
    """A module defined in the file, or a standard one written S(i), P(i) or I(i)."""
    if name in parsed.modules:
        return parsed.modules[name]
    match = _STANDARD.match(name.strip())
    if match:
        kind, label = match.groups()
        A = parsed.algebra
        return standard_module(A, _KINDS[kind], A.vertex_index(label.strip()))
    raise AlgebraParseError(f"no module named {name!r}; use a module block or S(i), P(i), I(i)")


def _vertex_list(A: BoundQuiverAlgebra, text: str) -> Tuple[int, ...]:
    labels = [x.strip() for x in text.split("+") if x.strip()]
    return tuple(A.vertex_index(x) for x in labels)


def parse_map_spec(A: BoundQuiverAlgebra, spec: str) -> ProjMatrix:
    """``P(1+2)->P(2): [[b], [0]]``, rows by source summand, columns by target summand."""
    match = _MAP_SPEC.match(spec)
    if not match:
        raise AlgebraParseError(f"map {spec!r} does not read as P(i+..)->P(j+..): [[...]]")
    try:
        rows = _vertex_list(A, match.group("src"))
        cols = _vertex_list(A, match.group("tgt"))
        data = _flow(match.group("entries"))
        if data is None:
            data = []
        if not isinstance(data, list) or any(not isinstance(row, list) for row in data):
            raise ValueError("entries must be a list of rows")
        if rows and cols and (len(data) != len(rows) or any(len(row) != len(cols) for row in data)):
            raise ValueError(f"expected {len(rows)}x{len(cols)} entries")
        entries = tuple(
            tuple(parse_element(A, data[r][c]) if cols and rows else {} for c in range(len(cols)))
            for r in range(len(rows))
        )
        return ProjMatrix(A, rows, cols, entries)
    except (ValueError, NabelianError) as exc:
        message = exc.message if isinstance(exc, NabelianError) else str(exc)
        raise AlgebraParseError(f"map {spec!r}: {message}") from None

