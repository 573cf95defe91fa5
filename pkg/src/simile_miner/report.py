"""Ranked frozen-simile tables in plain-text and CSV form."""

from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass
from pathlib import Path
from typing import Iterable

from .frozen import FrozenSimile

CSV_FIELDS = ("rank", "simile", "count", "authors", "tier", "evidence", "review_fraction")


@dataclass(frozen=True)
class ReportRow:
    rank: int
    couple: str
    count: int
    authors: int
    tier: str
    evidence: str
    review_fraction: float

    @property
    def display(self) -> str:
        return f"{self.couple} ({self.count})"


def load_frozen(path: str | Path) -> list[FrozenSimile]:
    out = []
    with open(path, encoding="utf-8") as fh:
        for line_no, line in enumerate(fh, 1):
            if not line.strip():
                continue
            try:
                out.append(FrozenSimile.from_record(json.loads(line)))
            except (ValueError, KeyError, TypeError) as exc:
                raise ValueError(f"{path}:{line_no}: bad frozen-simile record ({exc})") from None
    return out


def report_rows(frozen: Iterable[FrozenSimile], top_n: int | None = None) -> list[ReportRow]:
    ordered = sorted(frozen, key=lambda f: (-f.count, f.couple.display))
    if top_n is not None:
        ordered = ordered[:max(0, top_n)]
    return [ReportRow(rank, f.couple.display, f.count, len(f.stats.authors), f.tier.value,
                      f.evidence.value, f.review_fraction)
            for rank, f in enumerate(ordered, 1)]


def render_text(rows: list[ReportRow]) -> str:
    header = ("#", "simile", "authors", "tier", "evidence", "review")
    body = [(str(r.rank), r.display, str(r.authors), r.tier, r.evidence,
             f"{r.review_fraction:.2f}") for r in rows]
    widths = [max(len(row[i]) for row in [header, *body]) for i in range(len(header))]
    lines = ["  ".join(cell.ljust(w) for cell, w in zip(row, widths)).rstrip()
             for row in [header, *body]]
    return "\n".join(lines) + "\n"


def render_csv(rows: list[ReportRow]) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(CSV_FIELDS)
    for r in rows:
        w.writerow([r.rank, r.couple, r.count, r.authors, r.tier, r.evidence,
                    f"{r.review_fraction:.4f}"])
    return buf.getvalue()
