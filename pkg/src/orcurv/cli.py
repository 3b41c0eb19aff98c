"""``orcurv`` command line: curvature, myers, compare, generate.

Exit status: 0 success, 1 usage or input error, 2 computation error
(including a failed ``--certify``).
"""

from __future__ import annotations

import argparse
import sys
from dataclasses import dataclass, field
from fractions import Fraction
from pathlib import Path
from typing import Sequence, TextIO

from .complex import Complex2, degree
from .curvature import (
    UNIFORM,
    WalkSpec,
    forman_curvature,
    jost_liu_bound,
    kappa_one,
    laplacian_walk_spec,
    myers_check,
    ric_on_edges,
)
from .errors import NegativeMass, OrcurvError, ParseError
from .formats import (
    EdgeRecord,
    Report,
    Summary,
    default_labels,
    parse_complex,
    parse_rational,
    report_to_csv,
    report_to_json,
    report_to_table,
    serialize_edge_list,
)
from .generators import (
    PLATONIC,
    TILINGS,
    generic_star_pair,
    parallelepiped,
    platonic,
    tiling_patch,
)
from .laplacian import Laplacian, harmonic_laplacian, parallelepiped_laplacian
from .transport import verify_certificate


class UsageError(Exception):
    pass


@dataclass
class Loaded:
    complex: Complex2
    labels: list[str]
    focus: list[tuple[int, int]]
    laplacian: Laplacian | None = None
    name: str = ""
    notes: list[str] = field(default_factory=list)


def _numbers(params: str, count: int | None, name: str) -> list[Fraction]:
    parts = [p for p in params.split(",") if p]
    if count is not None and len(parts) != count:
        raise UsageError(f"{name} takes {count} comma-separated values")
    try:
        return [parse_rational(p) for p in parts]
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def load_generated(spec: str) -> Loaded:
    """Resolve ``NAME[:params]``.

    ``platonic:cube`` (or just ``cube``), ``tiling:hexagonal[,radius]``,
    ``star:d,d'``, ``parallelepiped:a,b,c``.
    """
    family, _, params = spec.partition(":")
    if family in PLATONIC:
        family, params = "platonic", family
    elif family in TILINGS:
        family, params = "tiling", ",".join(p for p in (family, params) if p)
    try:
        if family == "platonic":
            c = platonic(params)
            return Loaded(c, default_labels(c), list(c.edges), name=spec)
        if family == "tiling":
            kind, _, rest = params.partition(",")
            radius = int(rest) if rest else 4
            patch = tiling_patch(kind, radius)
            c = patch.complex
            return Loaded(c, default_labels(c), list(patch.probes.values()), name=spec)
        if family in ("star", "star_pair", "generic_star_pair"):
            d, d2 = (int(v) for v in _numbers(params, 2, "star"))
            sp = generic_star_pair(d, d2)
            return Loaded(sp.complex, default_labels(sp.complex), [sp.edge], name=spec)
        if family == "parallelepiped":
            a, b, cc = _numbers(params, 3, "parallelepiped")
            box = parallelepiped(a, b, cc)
            return Loaded(box, default_labels(box), list(box.edges), parallelepiped_laplacian(a, b, cc), spec)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    raise UsageError(f"unknown generator {spec!r}")


def load_input(path: str, *, euclidean: bool = False) -> Loaded:
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from None
    c, labels = parse_complex(text, unit_lengths=not euclidean)
    return Loaded(c, labels, list(c.edges), name=path)


def _load(args) -> Loaded:
    if args.generate:
        return load_generated(args.generate)
    return load_input(args.input, euclidean=getattr(args, "euclidean", False))


def _walk(loaded: Loaded, kind: str) -> WalkSpec:
    if kind == "uniform":
        return UNIFORM
    L = loaded.laplacian if loaded.laplacian is not None else harmonic_laplacian(loaded.complex)
    return laplacian_walk_spec(L)


def _resolve_edge(loaded: Loaded, text: str) -> tuple[int, int]:
    parts = text.split(",")
    if len(parts) != 2:
        raise UsageError("--edge takes U,V")
    ids = {lab: k for k, lab in enumerate(loaded.labels)}
    try:
        u, v = ids[parts[0]], ids[parts[1]]
    except KeyError as exc:
        raise UsageError(f"unknown vertex label {exc.args[0]!r}") from None
    if not loaded.complex.has_edge(u, v):
        raise UsageError(f"{parts[0]},{parts[1]} is not an edge")
    return u, v


def build_report(
    loaded: Loaded,
    edges: Sequence[tuple[int, int]],
    walk: WalkSpec,
    t0: Fraction | None,
    *,
    summary: bool,
    jobs: int = 1,
) -> Report:
    c, labels = loaded.complex, loaded.labels
    edges = sorted(edges, key=lambda e: c.edge_index.get((min(e), max(e)), -1))
    rics = ric_on_edges(c, edges, walk, t0, jobs=jobs)
    records = []
    for (u, v), ric in zip(edges, rics):
        valid = verify_certificate(ric.instance, ric.solution).valid
        try:
            k1 = kappa_one(c, u, v, walk)
            valid = valid and verify_certificate(k1.instance, k1.solution).valid
            k1_value = k1.value
        except NegativeMass:
            k1_value = None
        forman = forman_curvature(c, u, v) if c.faces is not None else None
        d, d2 = degree(c, u), degree(c, v)
        records.append(EdgeRecord(
            u=labels[u], v=labels[v], d=d, d2=d2,
            ric=ric.value, kappa_one=k1_value, jost_liu=jost_liu_bound(c, u, v),
            forman=forman, forman_over_3=None if forman is None else Fraction(forman, 3),
            t_used=ric.t_used, certificate_valid=valid,
        ))
    report = Report(records)
    if summary:
        all_rics = (
            [r.value for r in rics]
            if set(edges) == set(c.edges)
            else [r.value for r in ric_on_edges(c, None, walk, t0, jobs=jobs)]
        )
        m = myers_check(c, walk, ric_values=all_rics)
        report.summary = Summary(m.rho, m.bound, m.diameter, m.sharp)
    return report


def _emit(report: Report, fmt: str, out: TextIO, *, group: bool = False) -> None:
    if fmt == "json":
        out.write(report_to_json(report) + "\n")
    elif fmt == "csv":
        out.write(report_to_csv(report))
    else:
        out.write(report_to_table(report, group=group))


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _source_args(p: argparse.ArgumentParser, *, allow_input: bool = True) -> None:
    g = p.add_mutually_exclusive_group(required=True)
    if allow_input:
        g.add_argument("--input", metavar="F", help="edge-list or OFF file")
    g.add_argument("--generate", metavar="NAME", help="built-in family, e.g. platonic:cube")
    if allow_input:
        p.add_argument("--euclidean", action="store_true", help="OFF input: use Euclidean edge lengths")


def make_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="orcurv", description="Exact Ollivier-Ricci curvature of graphs and polyhedral surfaces.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("curvature", help="per-edge curvature report")
    _source_args(p)
    which = p.add_mutually_exclusive_group()
    which.add_argument("--edge", metavar="U,V")
    which.add_argument("--all-edges", action="store_true")
    p.add_argument("--t", metavar="P/Q", help="time used for ric (default 1/4, or smaller for Laplacian walks)")
    p.add_argument("--walk", choices=("uniform", "laplacian"), default="uniform")
    p.add_argument("--format", choices=("table", "csv", "json"), default="table")
    p.add_argument("--certify", action="store_true", help="fail with status 2 if any certificate is invalid")
    p.add_argument("--jobs", type=int, default=1)

    p = sub.add_parser("myers", help="diameter bound from the minimum edge curvature")
    _source_args(p)
    p.add_argument("--walk", choices=("uniform", "laplacian"), default="uniform")
    p.add_argument("--format", choices=("table", "csv", "json"), default="table")

    p = sub.add_parser("compare", help="ric, kappa_one, Jost-Liu and Forman/3 side by side")
    _source_args(p, allow_input=False)
    p.add_argument("--format", choices=("table", "csv", "json"), default="table")

    p = sub.add_parser("generate", help="write a built-in complex as an edge list")
    p.add_argument("name")
    p.add_argument("--output", required=True, metavar="F", help="destination file, '-' for stdout")
    return parser


def run_cli(argv: Sequence[str] | None = None, stdout: TextIO | None = None, stderr: TextIO | None = None) -> int:
    stdout = sys.stdout if stdout is None else stdout
    stderr = sys.stderr if stderr is None else stderr
    try:
        args = make_parser().parse_args(argv)
        if args.command == "generate":
            loaded = load_generated(args.name)
            text = serialize_edge_list(loaded.complex, loaded.labels)
            if args.output == "-":
                stdout.write(text)
            else:
                Path(args.output).write_text(text)
            return 0
        loaded = _load(args)
    except UsageError as exc:
        stderr.write(f"orcurv: error: {exc}\n")
        return 1
    except ParseError as exc:
        stderr.write(f"orcurv: input error: {exc}\n")
        return 1

    try:
        if args.command == "curvature":
            t0 = None
            if args.t is not None:
                try:
                    t0 = parse_rational(args.t)
                except ValueError as exc:
                    raise UsageError(str(exc)) from None
                if not 0 < t0 <= 1:
                    raise UsageError("--t must lie in (0, 1]")
            if args.edge:
                edges = [_resolve_edge(loaded, args.edge)]
            elif args.all_edges:
                edges = list(loaded.complex.edges)
            else:
                edges = loaded.focus
            report = build_report(
                loaded, edges, _walk(loaded, args.walk), t0, summary=args.all_edges, jobs=args.jobs
            )
            _emit(report, args.format, stdout)
            if args.certify and not all(r.certificate_valid for r in report.edges):
                stderr.write("orcurv: certificate verification failed\n")
                return 2
            return 0
        if args.command == "myers":
            walk = _walk(loaded, args.walk)
            m = myers_check(loaded.complex, walk)
            _emit(Report([], Summary(m.rho, m.bound, m.diameter, m.sharp)), args.format, stdout)
            return 0
        if args.command == "compare":
            report = build_report(loaded, loaded.focus, UNIFORM, None, summary=False)
            _emit(report, args.format, stdout, group=True)
            return 0
    except UsageError as exc:
        stderr.write(f"orcurv: error: {exc}\n")
        return 1
    except OrcurvError as exc:
        stderr.write(f"orcurv: computation error: {exc}\n")
        return 2
    return 1  # pragma: no cover - argparse requires a command


def main() -> None:
    sys.exit(run_cli())
