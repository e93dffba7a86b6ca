"""Check records, tables and their CSV/JSON serialization.

Output is deterministic: no timestamps, floats at 17 significant digits,
rationals as "num/den" strings, tables and records kept in insertion order.
"""

from __future__ import annotations

import csv
import io
import json
import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Union

from . import __version__

Cell = Union[str, int, float, bool, None]
SOURCES = ("published", "trivial", "derived")


def cell(value) -> Cell:
    """Normalize a value for storage: rationals become 'num/den' strings."""
    if isinstance(value, Fraction):
        return f"{value.numerator}/{value.denominator}"
    if isinstance(value, bool) or value is None or isinstance(value, (str, int)):
        return value
    if isinstance(value, (tuple, list)):
        return ";".join(format_cell(cell(v)) for v in value)
    if isinstance(value, complex):
        return f"{format(value.real, '.17g')}{format(value.imag, '+.17g')}j"
    return float(value)


def format_cell(value: Cell) -> str:
    if value is None:
        return ""
    if isinstance(value, float):
        return format(value, ".17g")
    return str(value)


@dataclass(frozen=True)
class CheckRecord:
    name: str
    expected: Cell
    actual: Cell
    tolerance: Cell
    passed: bool
    source: str = "derived"

    def __post_init__(self):
        if self.source not in SOURCES:
            raise ValueError(f"source must be one of {SOURCES}")
        for attr in ("expected", "actual", "tolerance"):
            object.__setattr__(self, attr, cell(getattr(self, attr)))
        object.__setattr__(self, "passed", bool(self.passed))


def check_close(name: str, expected, actual, tol: float, source: str = "derived", relative: bool = False) -> CheckRecord:
    """Absolute (or relative) closeness check."""
    e, a = float(expected), float(actual)
    err = abs(a / e - 1) if relative else abs(a - e)
    ok = math.isfinite(a) and err <= tol
    return CheckRecord(name, expected, actual, tol, ok, source)


def check_equal(name: str, expected, actual, source: str = "derived") -> CheckRecord:
    return CheckRecord(name, expected, actual, 0, expected == actual, source)


@dataclass(frozen=True)
class Table:
    name: str
    header: tuple[str, ...]
    rows: tuple[tuple[Cell, ...], ...]

    @classmethod
    def build(cls, name: str, header: Iterable[str], rows: Iterable[Iterable]) -> "Table":
        return cls(name, tuple(header), tuple(tuple(cell(v) for v in row) for row in rows))


@dataclass(frozen=True)
class Report:
    command: tuple[str, ...]
    records: tuple[CheckRecord, ...] = ()
    tables: tuple[Table, ...] = ()
    version: str = __version__
    meta: dict = field(default_factory=dict, compare=False)

    @property
    def summary(self) -> dict[str, int]:
        passed = sum(r.passed for r in self.records)
        return {"total": len(self.records), "passed": passed, "failed": len(self.records) - passed}

    @property
    def ok(self) -> bool:
        return all(r.passed for r in self.records)

    def to_dict(self) -> dict:
        return {
            "version": self.version,
            "command": list(self.command),
            "summary": self.summary,
            "records": [
                {
                    "name": r.name,
                    "expected": r.expected,
                    "actual": r.actual,
                    "tolerance": r.tolerance,
                    "passed": r.passed,
                    "source": r.source,
                }
                for r in self.records
            ],
            "tables": [{"name": t.name, "header": list(t.header), "rows": [list(row) for row in t.rows]} for t in self.tables],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2, allow_nan=False) + "\n"

    @classmethod
    def from_json(cls, text: str) -> "Report":
        d = json.loads(text)
        records = tuple(
            CheckRecord(r["name"], r["expected"], r["actual"], r["tolerance"], r["passed"], r["source"]) for r in d["records"]
        )
        tables = tuple(Table(t["name"], tuple(t["header"]), tuple(tuple(row) for row in t["rows"])) for t in d["tables"])
        return cls(tuple(d["command"]), records, tables, d["version"])

    def to_csv(self) -> str:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["# xxcorr", self.version, " ".join(self.command)])
        for t in self.tables:
            w.writerow([f"# table: {t.name}"])
            w.writerow(t.header)
            for row in t.rows:
                w.writerow([format_cell(v) for v in row])
        if self.records:
            w.writerow(["# checks"])
            w.writerow(["name", "expected", "actual", "tolerance", "passed", "source"])
            for r in self.records:
                w.writerow([r.name, format_cell(r.expected), format_cell(r.actual), format_cell(r.tolerance), r.passed, r.source])
        s = self.summary
        w.writerow(["# summary", f"total={s['total']}", f"passed={s['passed']}", f"failed={s['failed']}"])
        return buf.getvalue()

    def render(self, fmt: str) -> str:
        if fmt == "json":
            return self.to_json()
        if fmt == "csv":
            return self.to_csv()
        raise ValueError(f"unknown format {fmt!r}")
