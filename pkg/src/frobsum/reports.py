"""Tabular scan reports with text / CSV / JSON rendering.

Exact rationals are carried as two columns: a decimal rendering to 12
significant digits and the exact num/den form.  CSV and JSON emit the same
cell values.
"""

from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass, field
from decimal import Decimal, localcontext
from fractions import Fraction
from typing import Dict, List, Sequence


def decimal_str(value, digits: int = 12) -> str:
    """Render a number to ``digits`` significant digits."""
    if isinstance(value, Fraction):
        with localcontext() as ctx:
            ctx.prec = digits
            return str(Decimal(value.numerator) / Decimal(value.denominator))
    if isinstance(value, int):
        return str(value)
    return f"{float(value):.{digits}g}"


def rational_cells(name: str, value: Fraction) -> Dict[str, str]:
    """The standard two-column rendering of an exact rational."""
    value = Fraction(value)
    return {
        name: decimal_str(value),
        f"{name}_exact": f"{value.numerator}/{value.denominator}",
    }


@dataclass
class ScanReport:
    """An ordered table of homogeneous rows plus free-form notes."""

    title: str
    columns: Sequence[str]
    rows: List[dict] = field(default_factory=list)
    notes: List[str] = field(default_factory=list)

    def add_row(self, **cells) -> None:
        unknown = set(cells) - set(self.columns)
        if unknown:
            raise KeyError(f"row has cells not in the header: {sorted(unknown)}")
        self.rows.append(cells)

    def _cell(self, row: dict, col: str):
        value = row.get(col, "")
        return "" if value is None else value

    def to_text(self) -> str:
        widths = {c: len(c) for c in self.columns}
        rendered = []
        for row in self.rows:
            cells = {c: str(self._cell(row, c)) for c in self.columns}
            rendered.append(cells)
            for c in self.columns:
                widths[c] = max(widths[c], len(cells[c]))
        lines = [f"# {self.title}"]
        lines.append("  ".join(c.ljust(widths[c]) for c in self.columns))
        for cells in rendered:
            lines.append("  ".join(cells[c].ljust(widths[c]) for c in self.columns))
        for note in self.notes:
            lines.append(f"note: {note}")
        return "\n".join(lines)

    def to_csv(self) -> str:
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(self.columns)
        for row in self.rows:
            writer.writerow([self._cell(row, c) for c in self.columns])
        return buf.getvalue()

    def to_json(self) -> str:
        payload = {
            "title": self.title,
            "columns": list(self.columns),
            "rows": [{c: self._cell(row, c) for c in self.columns} for row in self.rows],
            "notes": list(self.notes),
        }
        return json.dumps(payload, indent=2, default=str)

    def render(self, fmt: str = "text") -> str:
        if fmt == "text":
            return self.to_text()
        if fmt == "csv":
            return self.to_csv()
        if fmt == "json":
            return self.to_json()
        raise ValueError(f"unknown format {fmt!r}")
