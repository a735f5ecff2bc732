"""Command line front end.

Copyright (c) 2026 The nabelian developers
SPDX-License-Identifier: MIT
See LICENSE for details.

Every subcommand prints one JSON report on stdout. Exit codes: 0 when the
computation finished and its checks are consistent, 1 when a check fails,
2 for input errors.
"""

import argparse
import sys
from pathlib import Path
from typing import Any, Callable, Dict, List, Optional, Sequence, TextIO

from yaml import YAMLError

from . import __version__
from .config import Settings, load_settings
from .corpus import compare_expected, corpus_names, load_corpus
from .errors import NabelianError
from .higher import (
    SequenceMode,
    SequenceOfProjectives,
    VerdictKind,
    check_sequence,
    cross_check,
    detect_n,
    double_dual_sequence,
    n_cokernel,
    n_kernel,
    transpose,
)
from .homological import default_cap, minimal_resolution
from .log import get_logger, setup_logging
from .parser import AlgebraFile, load_algebra, parse_map_spec, resolve_module
from .report import (
    Timings,
    algebra_summary,
    check_report,
    invariants_report,
    module_summary,
    resolution_report,
    sequence_report,
    to_json,
    to_text,
    transpose_report,
    verdict_report,
)

logger = get_logger(__name__)

__all__ = ["build_parser", "run", "main"]

EXIT_OK = 0
EXIT_CHECK_FAILED = 1
EXIT_INPUT_ERROR = 2


class _Context:
    def __init__(self, args: argparse.Namespace, settings: Settings):
        self.args = args
        self.settings = settings
        self.timings = Timings(getattr(args, "timings", False))

    def cap(self, default: int) -> int:
        return self.settings.cap if self.settings.cap is not None else default

    def load(self, target: str) -> AlgebraFile:
        path = Path(target)
        if path.exists() or target.endswith(".alg"):
            return load_algebra(path, degree_cap=self.settings.degree_cap)
        return load_corpus(target).parse(degree_cap=self.settings.degree_cap)

    def sampling(self) -> Dict[str, int]:
        s = self.settings
        return {"seed": s.seed, "samples": s.samples, "pair_samples": s.pair_samples}


def _flag_overrides(args: argparse.Namespace) -> Dict[str, Any]:
    """Settings given on the command line; None means not given."""
    samples = getattr(args, "samples", None)
    pairs = getattr(args, "pair_samples", None)
    if pairs is None and samples is not None:
        pairs = max(samples // 2, 1)
    return {
        "cap": getattr(args, "cap", None),
        "seed": getattr(args, "seed", None),
        "samples": samples,
        "pair_samples": pairs,
        "log_level": "DEBUG" if args.verbose else None,
    }


def _cmd_validate(ctx: _Context) -> Any:
    with ctx.timings.section("parse"):
        parsed = ctx.load(ctx.args.file)
    report = {
        "algebra": algebra_summary(parsed.algebra),
        "modules": [module_summary(M) for M in parsed.modules.values()],
    }
    return report, EXIT_OK


def _cmd_invariants(ctx: _Context) -> Any:
    parsed = ctx.load(ctx.args.file)
    A = parsed.algebra
    with ctx.timings.section("invariants"):
        report = invariants_report(A, ctx.cap(default_cap(A)))
    return report, EXIT_OK


def _cmd_detect(ctx: _Context) -> Any:
    parsed = ctx.load(ctx.args.file)
    A = parsed.algebra
    with ctx.timings.section("detect"):
        verdict = detect_n(A, ctx.cap(max(default_cap(A), 2)))
    report = verdict_report(verdict)
    return report, EXIT_OK if verdict.is_consistent() else EXIT_CHECK_FAILED


def _cmd_check(ctx: _Context) -> Any:
    parsed = ctx.load(ctx.args.file)
    A = parsed.algebra
    sampling = ctx.sampling()
    with ctx.timings.section("detect"):
        verdict = detect_n(A, ctx.cap(max(default_cap(A), 2)))
    with ctx.timings.section("cross_check"):
        result = cross_check(
            A,
            ctx.args.n,
            seed=sampling["seed"],
            samples=sampling["samples"],
            verdict=verdict,
            pair_samples=sampling["pair_samples"],
            max_vertex_dim=ctx.settings.max_vertex_dim,
        )
    report = check_report(result)
    report["samples"] = sampling["samples"]
    report["pair_samples"] = sampling["pair_samples"]
    return report, EXIT_CHECK_FAILED if result.failed else EXIT_OK


def _cmd_resolve(ctx: _Context) -> Any:
    parsed = ctx.load(ctx.args.file)
    M = resolve_module(parsed, ctx.args.module)
    with ctx.timings.section("resolve"):
        res = minimal_resolution(M, ctx.args.length)
    return resolution_report(res), EXIT_OK


def _cmd_transpose(ctx: _Context) -> Any:
    parsed = ctx.load(ctx.args.file)
    M = resolve_module(parsed, ctx.args.module)
    with ctx.timings.section("transpose"):
        tr = transpose(M)
        dds = double_dual_sequence(M, check=False, tr=tr)
    code = EXIT_OK if dds.is_exact() and dds.matches_ext() else EXIT_CHECK_FAILED
    return transpose_report(M, tr, dds), code


def _cmd_ncokernel(ctx: _Context) -> Any:
    parsed = ctx.load(ctx.args.file)
    A = parsed.algebra
    f = parse_map_spec(A, ctx.args.map)
    n = ctx.args.n
    with ctx.timings.section("ncokernel"):
        if ctx.args.kernel:
            seq = n_kernel(f, n)
            full = seq.morphisms + (f,)
        else:
            seq = n_cokernel(f, n)
            full = (f,) + seq.morphisms
    report = sequence_report(f.to_json(), seq, n)
    report["kind"] = "n-kernel" if ctx.args.kernel else "n-cokernel"
    report["n_exact"] = check_sequence(SequenceOfProjectives(full), SequenceMode.N_EXACT)
    return report, EXIT_OK


def _selftest_entry(ctx: _Context, name: str, parsed: AlgebraFile, expected: Optional[Dict[str, Any]]) -> Dict[str, Any]:
    A = parsed.algebra
    sampling = ctx.sampling()
    recorded_cap = (expected or {}).get("cap")
    with ctx.timings.section(f"{name}:detect"):
        verdict = detect_n(A, ctx.cap(recorded_cap or max(default_cap(A), 2)))
    n = verdict.n if verdict.kind is VerdictKind.EXACTLY_N and verdict.n else 1
    with ctx.timings.section(f"{name}:cross_check"):
        result = cross_check(
            A,
            n,
            seed=sampling["seed"],
            samples=sampling["samples"],
            verdict=verdict,
            pair_samples=sampling["pair_samples"],
            max_vertex_dim=ctx.settings.max_vertex_dim,
        )
    entry = check_report(result)
    entry["name"] = name
    ok = not result.fatal
    if expected is not None:
        comparison = compare_expected(expected, verdict)
        entry["expected"] = comparison
        ok = ok and comparison["ok"]
    entry["ok"] = ok
    logger.info("selftest %s: %s", name, "PASS" if ok else "FAIL")
    return entry


def _cmd_selftest(ctx: _Context) -> Any:
    target = ctx.args.target
    entries: List[Dict[str, Any]] = []
    if target is None:
        for name in corpus_names():
            entry = load_corpus(name)
            entries.append(_selftest_entry(ctx, name, entry.parse(ctx.settings.degree_cap), entry.expected))
    elif Path(target).exists() or target.endswith(".alg"):
        parsed = load_algebra(target, degree_cap=ctx.settings.degree_cap)
        expected = None
        stem = Path(target).stem
        if stem in corpus_names():
            expected = load_corpus(stem).expected
        entries.append(_selftest_entry(ctx, stem, parsed, expected))
    else:
        entry = load_corpus(target)
        entries.append(_selftest_entry(ctx, target, entry.parse(ctx.settings.degree_cap), entry.expected))
    sampling = ctx.sampling()
    report = {
        "seed": sampling["seed"],
        "samples": sampling["samples"],
        "pair_samples": sampling["pair_samples"],
        "entries": entries,
        "ok": all(e["ok"] for e in entries),
    }
    return report, EXIT_OK if report["ok"] else EXIT_CHECK_FAILED


def _cmd_corpus(ctx: _Context) -> Any:
    entries = []
    for name in corpus_names():
        entry = load_corpus(name)
        entries.append({"name": name, "file": entry.path.name, "expected": entry.expected})
    return {"entries": entries}, EXIT_OK


def _common_options() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--config", type=Path, default=None, help="settings file (YAML)")
    common.add_argument("-v", "--verbose", action="store_true", help="log at DEBUG level")
    common.add_argument("--text", action="store_true", help="print a readable view instead of JSON")
    common.add_argument("--timings", action="store_true", help="add per-section wall times")
    common.add_argument("--no-color", action="store_true", help="plain log output")
    return common


def _sampling_options(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--seed", type=int, default=None)
    parser.add_argument("--samples", type=int, default=None)
    parser.add_argument("--pair-samples", type=int, default=None)
    parser.add_argument("--cap", type=int, default=None)


def build_parser() -> argparse.ArgumentParser:
    common = _common_options()
    parser = argparse.ArgumentParser(
        prog="nabelian",
        description="Decide whether proj of a bound quiver algebra is n-abelian.",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", metavar="command")
    sub.required = True

    p = sub.add_parser("validate", parents=[common], help="parse an algebra file and its modules")
    p.add_argument("file")
    p.set_defaults(handler=_cmd_validate)

    p = sub.add_parser("invariants", parents=[common], help="gldim, domdim and friends")
    p.add_argument("file")
    p.add_argument("--cap", type=int, default=None)
    p.set_defaults(handler=_cmd_invariants)

    p = sub.add_parser("detect", parents=[common], help="find the n for which proj is n-abelian")
    p.add_argument("file")
    p.add_argument("--cap", type=int, default=None)
    p.set_defaults(handler=_cmd_detect)

    p = sub.add_parser("check", parents=[common], help="sampled cross-checks for a given n")
    p.add_argument("file")
    p.add_argument("-n", type=int, required=True)
    _sampling_options(p)
    p.set_defaults(handler=_cmd_check)

    p = sub.add_parser("resolve", parents=[common], help="minimal projective resolution of a module")
    p.add_argument("file")
    p.add_argument("--module", required=True, help="module block name, or S(i), P(i), I(i)")
    p.add_argument("--length", type=int, required=True)
    p.set_defaults(handler=_cmd_resolve)

    p = sub.add_parser("transpose", parents=[common], help="transpose and double dual of a module")
    p.add_argument("file")
    p.add_argument("--module", required=True, help="module block name, or S(i), P(i), I(i)")
    p.set_defaults(handler=_cmd_transpose)

    p = sub.add_parser("ncokernel", parents=[common], help="n-cokernel of a map of projectives")
    p.add_argument("file")
    p.add_argument("--map", required=True, help="P(i+..)->P(j+..): [[entry, ...], ...]")
    p.add_argument("-n", type=int, required=True)
    p.add_argument("--kernel", action="store_true", help="compute the n-kernel instead")
    p.set_defaults(handler=_cmd_ncokernel)

    p = sub.add_parser("selftest", parents=[common], help="corpus expectations plus cross-checks")
    p.add_argument("target", nargs="?", default=None, help="algebra file or corpus name; all entries if omitted")
    _sampling_options(p)
    p.set_defaults(handler=_cmd_selftest)

    p = sub.add_parser("corpus", parents=[common], help="list bundled algebras")
    p.set_defaults(handler=_cmd_corpus)
    return parser


def _error_report(code: str, message: str, line: Optional[int] = None) -> Dict[str, Any]:
    return {"error": {"code": code, "message": message, "line": line}}


def run(argv: Optional[Sequence[str]] = None, stdout: Optional[TextIO] = None) -> int:
    """Parse ``argv``, run one subcommand and print its report."""
    out = stdout or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)

    try:
        settings = load_settings(args.config).replace(**_flag_overrides(args))
    except (ValueError, YAMLError, OSError) as exc:
        out.write(to_json(_error_report("config", str(exc))) + "\n")
        return EXIT_INPUT_ERROR

    setup_logging(
        level=settings.log_level,
        use_color=not args.no_color,
        color_config=settings.colors,
    )
    ctx = _Context(args, settings)
    handler: Callable[[_Context], Any] = args.handler
    try:
        report, code = handler(ctx)
    except NabelianError as exc:
        logger.error("%s", exc)
        data = exc.to_dict()
        report = {"error": {"code": data["code"], "message": str(exc), "line": data.get("line")}}
        out.write(to_json(report) + "\n")
        return EXIT_INPUT_ERROR
    except (OSError, YAMLError) as exc:
        logger.error("%s", exc)
        out.write(to_json(_error_report("io", str(exc))) + "\n")
        return EXIT_INPUT_ERROR

    report = ctx.timings.attach(report)
    out.write((to_text(report) if args.text else to_json(report)) + "\n")
    return code


def main(argv: Optional[Sequence[str]] = None) -> int:
    return run(argv)


if __name__ == "__main__":
    sys.exit(main())
