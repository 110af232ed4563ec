"""Scheme file format and report serialization.

File format: line 1 is ``n r``; then n rows of n whitespace-separated class
indices; ``#`` starts a comment anywhere.  Minimal and diff-friendly.  Class
labels are re-indexed contiguously on parse (with a NonContiguousClasses
warning when that changes anything), so write(parse(text)) is the canonical
form and parse/write round-trip byte-identically on canonical files.

Reports serialize as a single JSON document; exact numbers (surds, big
integers) render as strings, never floats.
"""

from __future__ import annotations

import json
import warnings

import numpy as np

from .core import CoherentConfig, RelationPartition
from .errors import BadDimensions, NonContiguousClasses, SchemeSyntaxError
from .families import ClassificationMatch, ParameterReport
from .spectra import MultiplicityPattern, SpectralTable


def parse_scheme(text: str) -> RelationPartition:
    rows: list[list[int]] = []
    header: tuple[int, int] | None = None
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        try:
            values = [int(tok) for tok in line.split()]
        except ValueError as exc:
            raise SchemeSyntaxError(lineno, f"non-integer token ({exc})") from None
        if header is None:
            if len(values) != 2:
                raise SchemeSyntaxError(lineno, "header must be 'n r'")
            header = (values[0], values[1])
            if header[0] < 1 or header[1] < 1:
                raise SchemeSyntaxError(lineno, "n and r must be positive")
            continue
        rows.append(values)
    if header is None:
        raise SchemeSyntaxError(1, "empty input")
    n, r = header
    if len(rows) != n or any(len(row) != n for row in rows):
        raise BadDimensions(f"expected {n} rows of {n} entries")
    cell = np.array(rows, dtype=np.int64)
    if cell.min() < 0:
        raise BadDimensions("negative class index")
    used = np.unique(cell)
    contiguous = len(used) == r and used[0] == 0 and used[-1] == r - 1
    if not contiguous:
        warnings.warn(
            f"class labels {used.tolist()} re-indexed to [0, {len(used)})",
            NonContiguousClasses,
            stacklevel=2,
        )
        return RelationPartition.from_cell(cell)
    return RelationPartition(n, r, cell)


def write_scheme(part: RelationPartition, comment: str | None = None) -> str:
    lines = []
    if comment:
        for chunk in comment.splitlines():
            lines.append(f"# {chunk}")
    lines.append(f"{part.n} {part.r}")
    width = len(str(part.r - 1))
    for row in part.cell:
        lines.append(" ".join(str(int(v)).rjust(width) for v in row))
    return "\n".join(lines) + "\n"


# ---------------------------------------------------------------------------
# JSON reports


def _table_doc(table: SpectralTable) -> dict:
    return {
        "valencies": list(table.valencies),
        "strata": [
            {"multiplicity": s.multiplicity, "eigenvalues": [str(v) for v in s.eigenvalues]}
            for s in table.strata
        ],
    }


def report_doc(r: ParameterReport) -> dict:
    doc: dict = {
        "case": r.case.tag.value,
        "a": r.case.a,
        "points": r.points,
        "verdict": {"status": r.verdict.status, "reason": r.verdict.reason,
                    "degenerate": r.verdict.degenerate},
    }
    doc["srg"] = list(r.srg.as_tuple()) if r.srg else None
    doc["row_sums"] = list(r.row_sums) if r.row_sums else None
    doc["exact_eigenvalues"] = _table_doc(r.exact_eigenvalues) if r.exact_eigenvalues else None
    doc["pattern"] = list(r.pattern.dims) if r.pattern else None
    doc["warnings"] = list(r.warnings)
    doc["notes"] = list(r.notes)
    return doc


def emit_report(r: ParameterReport, indent: int | None = 2) -> str:
    return json.dumps(report_doc(r), indent=indent)


def config_doc(cc: CoherentConfig) -> dict:
    from .core import is_association_scheme, is_commutative

    return {
        "points": cc.n,
        "rank": cc.rank,
        "homogeneous": cc.is_homogeneous,
        "commutative": is_commutative(cc),
        "association_scheme": is_association_scheme(cc),
        "diagonal_classes": sorted(cc.diagonal_classes),
        "converse": list(cc.converse),
        "valencies": list(cc.valencies),
    }


def classification_doc(matches: list[ClassificationMatch], *, points: int,
                       pattern: MultiplicityPattern, rank: int, seed: int) -> dict:
    return {
        "points": points,
        "pattern": list(pattern.dims),
        "rank": rank,
        "seed": seed,
        "matches": [
            {"case": str(m.case), "reports": [report_doc(rep) for rep in m.reports]}
            for m in matches
        ],
    }
