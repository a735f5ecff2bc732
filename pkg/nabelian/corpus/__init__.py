"""Bundled algebras with their expected invariants.

Copyright (c) 2026 The nabelian developers
SPDX-License-Identifier: MIT
See LICENSE for details.
"""

from dataclasses import dataclass
from pathlib import Path
from typing import Any, Dict, List, Optional

from yaml import safe_load

from ..errors import UnknownCorpusEntryError
from ..higher import NAbelianVerdict
from ..homological import format_value
from ..parser import AlgebraFile, parse_algebra

__all__ = ["CorpusEntry", "CORPUS_DIR", "corpus_names", "load_corpus", "compare_expected"]

CORPUS_DIR = Path(__file__).resolve().parent


@dataclass(frozen=True)
class CorpusEntry:
    name: str
    text: str
    path: Path
    expected: Dict[str, Any]

    def parse(self, degree_cap: int = 20) -> AlgebraFile:
        return parse_algebra(self.text, name=self.name, degree_cap=degree_cap, path=str(self.path))

    @property
    def cap(self) -> Optional[int]:
        """The detection cap the expectations were recorded with, if not the default."""
        return self.expected.get("cap")


def _expectations() -> Dict[str, Dict[str, Any]]:
    with open(CORPUS_DIR / "expected.yaml", "r", encoding="utf-8") as f:
        return safe_load(f) or {}


def corpus_names() -> List[str]:
    """Entry names in the order of expected.yaml."""
    return list(_expectations())


def load_corpus(name: str) -> CorpusEntry:
    expected = _expectations()
    path = CORPUS_DIR / f"{name}.alg"
    if name not in expected or not path.exists():
        known = ", ".join(expected)
        raise UnknownCorpusEntryError(f"unknown corpus entry {name!r}; known entries: {known}")
    return CorpusEntry(name, path.read_text(encoding="utf-8"), path, dict(expected[name]))


def compare_expected(expected: Dict[str, Any], verdict: NAbelianVerdict) -> Dict[str, Any]:
    """Field-by-field comparison of a verdict against an expectation block.

    A bare ``NotNAbelianUpTo`` matches any cap; a ``cap`` key pins it.
    """
    ev = verdict.evidence
    actual = {
        "dimension": verdict.algebra.dimension,
        "cap": verdict.cap,
        "gldim": format_value(ev.gldim),
        "domdim": format_value(ev.domdim),
        "verdict": verdict.label,
    }
    mismatches = {}
    for key, want in expected.items():
        got = actual.get(key)
        if key == "verdict" and want == verdict.kind.value:
            continue
        if got != want:
            mismatches[key] = {"expected": want, "actual": got}
    return {"actual": actual, "mismatches": mismatches, "ok": not mismatches}
