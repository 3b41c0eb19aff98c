"""Edge-list and OFF readers/writers, and the curvature report encodings.

Edge-list text: one ``u v [length]`` per line, ``#`` starts a comment,
``@face a b c ...`` declares a face and ``@vertex a`` an isolated vertex.
Labels are arbitrary whitespace-free strings; ids follow first appearance.
Rationals in reports are always ``"p/q"`` in lowest terms.
"""

from __future__ import annotations

import csv
import io
import json
import math
from dataclasses import asdict, dataclass, fields
from decimal import Decimal, localcontext
from fractions import Fraction
from typing import Sequence

from .complex import Complex2, build_complex, edge_key
from .errors import OrcurvError, ParseError


def format_rational(q: Fraction | int | None) -> str | None:
    if q is None:
        return None
    q = Fraction(q)
    return f"{q.numerator}/{q.denominator}"


def parse_rational(text: str) -> Fraction:
    """Exact value of ``"3/2"``, ``"7"``, ``"0.125"`` or ``"1e-3"``."""
    try:
        return Fraction(text.strip())
    except (ValueError, ZeroDivisionError):
        raise ValueError(f"not a rational number: {text!r}") from None


def default_labels(c: Complex2) -> list[str]:
    """1-based string labels, matching the numbering used for the built-in families."""
    return [str(i + 1) for i in range(c.n_vertices)]


def parse_edge_list(text: str) -> tuple[Complex2, list[str]]:
    ids: dict[str, int] = {}
    labels: list[str] = []

    def vid(label: str) -> int:
        if label not in ids:
            ids[label] = len(labels)
            labels.append(label)
        return ids[label]

    edges: dict[tuple[int, int], Fraction] = {}
    faces: list[tuple[int, ...]] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        tok = line.split()
        if tok[0] == "@face":
            if len(tok) < 4:
                raise ParseError(lineno, "a face needs at least 3 vertices")
            faces.append(tuple(vid(t) for t in tok[1:]))
            continue
        if tok[0] == "@vertex":
            for t in tok[1:]:
                vid(t)
            continue
        if tok[0].startswith("@"):
            raise ParseError(lineno, f"unknown directive {tok[0]}")
        if len(tok) not in (2, 3):
            raise ParseError(lineno, "expected 'u v [length]'")
        if tok[0] == tok[1]:
            raise ParseError(lineno, "loop")
        length = Fraction(1)
        if len(tok) == 3:
            try:
                length = parse_rational(tok[2])
            except ValueError as exc:
                raise ParseError(lineno, str(exc)) from None
            if length <= 0:
                raise ParseError(lineno, f"non-positive length {tok[2]}")
        key = edge_key(vid(tok[0]), vid(tok[1]))
        if key in edges:
            raise ParseError(lineno, f"duplicate edge {tok[0]} {tok[1]}")
        edges[key] = length

    try:
        c = build_complex(
            len(labels), [(u, v, l) for (u, v), l in edges.items()], faces if faces else None
        )
    except OrcurvError as exc:
        raise ParseError(0, str(exc)) from None
    return c, labels


def serialize_edge_list(c: Complex2, labels: Sequence[str] | None = None) -> str:
    labels = list(labels) if labels is not None else default_labels(c)
    out = [f"# {c.n_vertices} vertices, {c.n_edges} edges"]
    # declare every vertex up front so a re-parse assigns the same ids
    for start in range(0, c.n_vertices, 16):
        out.append("@vertex " + " ".join(labels[start : start + 16]))
    for u, v in c.edges:
        length = c.length(u, v)
        item = f"{labels[u]} {labels[v]}"
        if length != 1:
            item += f" {format_rational(length)}"
        out.append(item)
    for f in c.faces or ():
        out.append("@face " + " ".join(labels[v] for v in f))
    return "\n".join(out) + "\n"


def _sqrt_rational(q: Fraction) -> Fraction:
    # exact when q is a rational square, else a 40-digit decimal
    n, d = q.numerator, q.denominator
    rn, rd = math.isqrt(n), math.isqrt(d)
    if rn * rn == n and rd * rd == d:
        return Fraction(rn, rd)
    with localcontext() as ctx:
        ctx.prec = 40
        return Fraction((Decimal(n) / Decimal(d)).sqrt())


def parse_off(text: str, unit_lengths: bool = True) -> tuple[Complex2, list[str]]:
    """Read the OFF subset: header, counts, vertex lines, face lines.

    Edges come from face boundaries.  With ``unit_lengths=False`` each edge
    gets the Euclidean length of its decimal coordinates (exact when the
    squared length is a rational square).
    """
    lines = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if line:
            lines.append((lineno, line.split()))
    if not lines or not lines[0][1][0].endswith("OFF"):
        raise ParseError(lines[0][0] if lines else 1, "missing OFF header")
    head = lines[0][1][1:]
    pos = 1
    if not head:
        if len(lines) < 2:
            raise ParseError(1, "missing counts line")
        head = lines[1][1]
        pos = 2
    counts_line = lines[pos - 1][0]
    try:
        nv, nf = int(head[0]), int(head[1])
    except (ValueError, IndexError):
        raise ParseError(counts_line, "malformed counts line") from None
    if nv < 0 or nf < 0 or len(lines) < pos + nv + nf:
        raise ParseError(counts_line, "counts do not match the file")

    coords: list[tuple[Fraction, ...]] = []
    for lineno, tok in lines[pos : pos + nv]:
        if len(tok) < 3:
            raise ParseError(lineno, "vertex needs 3 coordinates")
        try:
            coords.append(tuple(parse_rational(t) for t in tok[:3]))
        except ValueError as exc:
            raise ParseError(lineno, str(exc)) from None

    faces: list[tuple[int, ...]] = []
    edges: set[tuple[int, int]] = set()
    for lineno, tok in lines[pos + nv : pos + nv + nf]:
        try:
            k = int(tok[0])
            face = tuple(int(t) for t in tok[1 : 1 + k])
        except ValueError:
            raise ParseError(lineno, "malformed face") from None
        if k < 3 or len(face) != k:
            raise ParseError(lineno, "face needs at least 3 indices")
        if any(not 0 <= v < nv for v in face):
            raise ParseError(lineno, "face index out of range")
        if len(set(face)) != k:
            raise ParseError(lineno, "face repeats a vertex")
        faces.append(face)
        edges.update(edge_key(face[i], face[(i + 1) % k]) for i in range(k))

    items = []
    for u, v in sorted(edges):
        if unit_lengths:
            items.append((u, v, 1))
        else:
            sq = sum(((a - b) ** 2 for a, b in zip(coords[u], coords[v])), Fraction(0))
            if sq == 0:
                raise ParseError(0, f"vertices {u} and {v} coincide")
            items.append((u, v, _sqrt_rational(sq)))
    return build_complex(nv, items, faces), [str(i) for i in range(nv)]


def parse_complex(text: str, *, unit_lengths: bool = True) -> tuple[Complex2, list[str]]:
    """Sniff OFF versus edge list from the first meaningful line."""
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip()
        if line:
            if line.split()[0].endswith("OFF"):
                return parse_off(text, unit_lengths)
            break
    return parse_edge_list(text)


@dataclass
class EdgeRecord:
    u: str
    v: str
    d: int
    d2: int
    ric: Fraction
    kappa_one: Fraction | None
    jost_liu: Fraction
    forman: int | None
    forman_over_3: Fraction | None
    t_used: Fraction
    certificate_valid: bool


@dataclass
class Summary:
    rho: Fraction
    myers_bound: Fraction | float
    diameter: Fraction
    sharp: bool


@dataclass
class Report:
    edges: list[EdgeRecord]
    summary: Summary | None = None


_RATIONAL_FIELDS = {"ric", "kappa_one", "jost_liu", "forman_over_3", "t_used"}


def _encode_value(name: str, value):
    if value is None:
        return None
    if name in _RATIONAL_FIELDS or name in ("rho", "diameter"):
        return format_rational(value)
    if name == "myers_bound":
        return "inf" if value == math.inf else format_rational(value)
    return value


def report_to_json(report: Report) -> str:
    doc = {
        "edges": [{k: _encode_value(k, v) for k, v in asdict(r).items()} for r in report.edges],
        "summary": None
        if report.summary is None
        else {k: _encode_value(k, v) for k, v in asdict(report.summary).items()},
    }
    return json.dumps(doc, indent=2)


def _decode_value(name: str, value):
    if value is None or value == "":
        return None
    if name in _RATIONAL_FIELDS or name in ("rho", "diameter"):
        return parse_rational(value)
    if name == "myers_bound":
        return math.inf if value == "inf" else parse_rational(value)
    if name in ("d", "d2", "forman"):
        return int(value)
    if name in ("certificate_valid", "sharp"):
        return value if isinstance(value, bool) else value == "true"
    return value


def report_from_json(text: str) -> Report:
    doc = json.loads(text)
    edges = [EdgeRecord(**{k: _decode_value(k, v) for k, v in r.items()}) for r in doc["edges"]]
    summary = None
    if doc.get("summary") is not None:
        summary = Summary(**{k: _decode_value(k, v) for k, v in doc["summary"].items()})
    return Report(edges, summary)


def _csv_cell(name: str, value) -> str:
    enc = _encode_value(name, value)
    if enc is None:
        return ""
    if isinstance(enc, bool):
        return "true" if enc else "false"
    return str(enc)


def report_to_csv(report: Report) -> str:
    """Edge rows, then a blank line and a one-row summary table when present."""
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    names = [f.name for f in fields(EdgeRecord)]
    writer.writerow(names)
    for r in report.edges:
        writer.writerow([_csv_cell(n, getattr(r, n)) for n in names])
    if report.summary is not None:
        snames = [f.name for f in fields(Summary)]
        buf.write("\n")
        writer.writerow(snames)
        writer.writerow([_csv_cell(n, getattr(report.summary, n)) for n in snames])
    return buf.getvalue()


def report_from_csv(text: str) -> Report:
    blocks = text.strip("\n").split("\n\n")
    rows = list(csv.DictReader(io.StringIO(blocks[0])))
    edges = [EdgeRecord(**{k: _decode_value(k, v) for k, v in r.items()}) for r in rows]
    summary = None
    if len(blocks) > 1:
        (srow,) = list(csv.DictReader(io.StringIO(blocks[1])))
        summary = Summary(**{k: _decode_value(k, v) for k, v in srow.items()})
    return Report(edges, summary)


def report_to_table(report: Report, *, group: bool = False) -> str:
    """Aligned text table; ``group=True`` collapses edges with identical values."""
    cols = ["edge", "d", "d'", "ric", "kappa_one", "jost_liu", "forman/3", "t", "cert"]
    rows = []
    for r in report.edges:
        rows.append([
            f"{r.u}-{r.v}",
            str(r.d),
            str(r.d2),
            str(r.ric),
            "-" if r.kappa_one is None else str(r.kappa_one),
            str(r.jost_liu),
            "-" if r.forman_over_3 is None else str(r.forman_over_3),
            str(r.t_used),
            {True: "ok", False: "FAIL"}[r.certificate_valid],
        ])
    if group:
        counts: dict[tuple, list] = {}
        for row in rows:
            key = tuple(row[1:])
            counts.setdefault(key, [row[0], 0])[1] += 1
        cols = ["edges"] + cols[1:]
        rows = [[f"{n}x ({first})"] + list(key) for key, (first, n) in counts.items()]
    widths = [max(len(c), *(len(r[i]) for r in rows)) if rows else len(c) for i, c in enumerate(cols)]
    lines = []
    if rows or report.summary is None:
        lines.append("  ".join(c.ljust(w) for c, w in zip(cols, widths)).rstrip())
    lines += ["  ".join(x.ljust(w) for x, w in zip(r, widths)).rstrip() for r in rows]
    if report.summary is not None:
        s = report.summary
        bound = "inf" if s.myers_bound == math.inf else str(s.myers_bound)
        lines.append(f"rho={s.rho}  myers_bound={bound}  diameter={s.diameter}  sharp={str(s.sharp).lower()}")
    return "\n".join(lines) + "\n"
