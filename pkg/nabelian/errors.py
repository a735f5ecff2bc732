"""Exceptions raised by nabelian.

Copyright (c) 2026 The nabelian developers
SPDX-License-Identifier: MIT
See LICENSE for details.

Every error carries a short machine-readable ``code`` so the command line
front end can report it as JSON without parsing messages.
"""

from typing import Optional


class NabelianError(ValueError):
    """Base class for all nabelian errors."""

    code = "error"

    def __init__(self, message: str, code: Optional[str] = None):
        super().__init__(message)
        self.message = message
        if code is not None:
            self.code = code

    def to_dict(self) -> dict:
        return {"code": self.code, "message": self.message}


class ShapeError(NabelianError):
    code = "shape"


class InadmissibleError(NabelianError):
    code = "inadmissible"


class NotFiniteDimensionalError(NabelianError):
    code = "not-finite-dimensional-below-cap"


class UnknownVertexError(NabelianError):
    code = "unknown-vertex"


class AlgebraMismatchError(NabelianError):
    code = "algebra-mismatch"


class NotComposableError(NabelianError):
    code = "not-composable"


class ResolutionLengthError(NabelianError):
    code = "resolution exceeds length"


class PreconditionError(NabelianError):
    code = "precondition"


class UnknownCorpusEntryError(NabelianError):
    code = "unknown-corpus-entry"


class InvalidModuleError(NabelianError):
    """A representation violates one of the relations of its algebra."""

    code = "invalid-module"

    def __init__(self, message: str, relation: Optional[str] = None):
        super().__init__(message)
        self.relation = relation

    def to_dict(self) -> dict:
        data = super().to_dict()
        data["relation"] = self.relation
        return data


class AlgebraParseError(NabelianError):
    """Syntax or semantic error in an algebra file, with its line number."""

    code = "parse"

    def __init__(self, message: str, line: Optional[int] = None):
        self.line = line
        text = f"line {line}: {message}" if line is not None else message
        super().__init__(text)

    def to_dict(self) -> dict:
        data = super().to_dict()
        data["line"] = self.line
        return data
