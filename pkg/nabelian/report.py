"""JSON reports and their text rendering.

Copyright (c) 2026 The nabelian developers
SPDX-License-Identifier: MIT
See LICENSE for details.

Reports are plain dictionaries. They are serialized with sorted keys so two
runs with the same seed print byte-identical output. Wall times are only
added when asked for.
"""

import json
import time
from contextlib import contextmanager
from enum import Enum
from fractions import Fraction
from typing import Any, Dict, Iterator, List, Optional

from .algebra import BoundQuiverAlgebra
from .higher import (
    CrossCheckReport,
    DoubleDualSequence,
    NAbelianVerdict,
    SequenceOfProjectives,
    Transpose,
)
from .homological import (
    Resolution,
    codomdim,
    domdim,
    format_value,
    gldim,
    projective_injective_vertices,
)
from .modules import Representation, validate

__all__ = [
    "Timings",
    "algebra_summary",
    "module_summary",
    "invariants_report",
    "verdict_report",
    "check_report",
    "resolution_report",
    "transpose_report",
    "sequence_report",
    "to_json",
    "to_text",
]


class Timings:
    """Per-section wall times, recorded only when enabled."""

    def __init__(self, enabled: bool = False):
        self.enabled = enabled
        self.sections: Dict[str, float] = {}

    @contextmanager
    def section(self, name: str) -> Iterator[None]:
        start = time.perf_counter()
        try:
            yield
        finally:
            if self.enabled:
                self.sections[name] = round(time.perf_counter() - start, 4)

    def attach(self, report: Dict[str, Any]) -> Dict[str, Any]:
        if self.enabled:
            report["timings"] = dict(self.sections)
        return report


def algebra_summary(A: BoundQuiverAlgebra) -> Dict[str, Any]:
    return {
        "name": A.name,
        "field": A.field.label,
        "dimension": A.dimension,
        "vertices": list(A.quiver.vertices),
        "arrows": [[a.label, a.source, a.target] for a in A.quiver.arrows],
        "relations": [str(r) for r in A.relations],
        "basis": [A.format_basis(k) for k in range(A.dimension)],
    }


def module_summary(M: Representation) -> Dict[str, Any]:
    problem = validate(M)
    return {
        "name": M.name,
        "dims": list(M.dims),
        "dimension": M.total_dimension,
        "valid": problem is None,
        "violation": problem,
    }


def invariants_report(A: BoundQuiverAlgebra, cap: int) -> Dict[str, Any]:
    """gldim on both sides and dominant dimension, all under the same cap."""
    op = A.opposite()
    return {
        "algebra": algebra_summary(A),
        "cap": cap,
        "gldim": format_value(gldim(A, cap)),
        "gldim_op": format_value(gldim(op, cap)),
        "domdim": format_value(domdim(A, cap)),
        "codomdim": format_value(codomdim(A, cap)),
        "projective_injective": [A.vertex_label(v) for v in projective_injective_vertices(A)],
        "cartan": A.cartan_matrix(),
        "radical_layers": A.radical_layers(),
        "semisimple": A.is_semisimple(),
    }


def verdict_report(verdict: NAbelianVerdict) -> Dict[str, Any]:
    ev = verdict.evidence
    return {
        "algebra": algebra_summary(verdict.algebra),
        "dimension": verdict.algebra.dimension,
        "field": verdict.algebra.field.label,
        "gldim": format_value(ev.gldim),
        "domdim": format_value(ev.domdim),
        "verdict": verdict.to_json(),
    }


def check_report(report: CrossCheckReport) -> Dict[str, Any]:
    out = verdict_report(report.verdict)
    out["n"] = report.n
    out["seed"] = report.seed
    out["checks"] = [c.to_json() for c in report.checks]
    out["failed"] = report.failed
    out["fatal"] = report.fatal
    return out


def resolution_report(res: Resolution) -> Dict[str, Any]:
    data = res.to_json()
    data["module"] = module_summary(res.module)
    data["length"] = res.length
    data["exact"] = res.is_exact()
    return data


def transpose_report(M: Representation, tr: Transpose, dds: Optional[DoubleDualSequence] = None) -> Dict[str, Any]:
    data: Dict[str, Any] = {
        "module": module_summary(M),
        "presentation": tr.presentation.to_json(),
        "transpose": {"dims": list(tr.module.dims), "maps": tr.module.to_json()["maps"]},
    }
    if dds is not None:
        data["double_dual"] = {
            "dual_dims": list(dds.dual.dims),
            "double_dual_dims": list(dds.double_dual.dims),
            "e1": dds.e1.total_dimension,
            "e2": dds.e2.total_dimension,
            "ext": list(dds.ext_dims),
            "reflexive": dds.eta.is_isomorphism(),
            "torsionless": dds.eta.is_injective(),
        }
    return data


def sequence_report(f_json: Dict[str, Any], seq: SequenceOfProjectives, n: int) -> Dict[str, Any]:
    return {"n": n, "map": f_json, "sequence": seq.to_json()}


def _default(value: Any) -> Any:
    if isinstance(value, Fraction):
        return str(value)
    if isinstance(value, Enum):
        return value.value
    raise TypeError(f"cannot serialize {type(value).__name__}")


def to_json(report: Dict[str, Any]) -> str:
    return json.dumps(report, sort_keys=True, indent=2, default=_default)


def _text_lines(value: Any, indent: int) -> List[str]:
    pad = "  " * indent
    lines = []
    if isinstance(value, dict):
        for key in sorted(value):
            item = value[key]
            if isinstance(item, (dict, list, tuple)) and item and not _flat(item):
                lines.append(f"{pad}{key}:")
                lines.extend(_text_lines(item, indent + 1))
            else:
                lines.append(f"{pad}{key}: {_scalar_text(item)}")
    elif isinstance(value, (list, tuple)):
        for item in value:
            if isinstance(item, dict):
                first, *rest = _text_lines(item, indent + 1) or [""]
                lines.append(f"{pad}- {first.strip()}")
                lines.extend(rest)
            else:
                lines.append(f"{pad}- {_scalar_text(item)}")
    else:
        lines.append(f"{pad}{_scalar_text(value)}")
    return lines


def _flat(item: Any) -> bool:
    return isinstance(item, (list, tuple)) and all(not isinstance(x, dict) for x in item)


def _scalar_text(item: Any) -> str:
    if item is None:
        return "-"
    if isinstance(item, (list, tuple)):
        return json.dumps(item, default=_default)
    if isinstance(item, (Fraction, Enum)):
        return str(_default(item))
    return str(item)


def to_text(report: Dict[str, Any]) -> str:
    """A readable view of a report, with the same content as its JSON form."""
    lines = []
    verdict = report.get("verdict")
    if isinstance(verdict, dict):
        lines.append(f"verdict: {verdict.get('result')}")
    for check in report.get("checks", []):
        witness = f"  witness: {check['witness']}" if check.get("witness") else ""
        lines.append(f"[{check['status']}] {check['name']} ({check['samples']} samples){witness}")
    rest = {k: v for k, v in report.items() if k != "checks"}
    lines.extend(_text_lines(rest, 0))
    return "\n".join(lines)
