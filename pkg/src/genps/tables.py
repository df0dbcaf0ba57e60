"""Golden generating-function tables for n = 5 and their reproduction.

Data files (data/table*.csv) hold one row per 0/1 pattern: the pattern as
a bit string, the degree d of the counting polynomial, and the numerator
coefficients of the reduced generating function over (1-x)^(d+1),
constant term first, space separated.

table1: vertex counts by chi(a), b = 0.
table2: vertex counts for a = (1,1,1,1,1) by b.
table3: unsplittable (chain) counts for a = (1,1,1,1,1) by b.
"""

from __future__ import annotations

import csv
from dataclasses import dataclass
from importlib import resources

from .counting import RationalGenFunc, genfunc
from .vectors import InputError

N = 5
ONES = (1,) * N


@dataclass(frozen=True)
class TableRow:
    pattern: tuple[int, ...]
    degree: int
    numerator: tuple[int, ...]


@dataclass(frozen=True)
class GoldenTable:
    which: int
    rows: tuple[TableRow, ...]


@dataclass(frozen=True)
class TableDiff:
    which: int
    computed: GoldenTable
    mismatches: tuple[tuple[TableRow, TableRow], ...]  # (expected, got)

    @property
    def ok(self) -> bool:
        return not self.mismatches


def load_table(which: int) -> GoldenTable:
    if which not in (1, 2, 3):
        raise InputError("table number must be 1, 2 or 3")
    rows = []
    text = resources.files("genps.data").joinpath(f"table{which}.csv").read_text()
    for rec in csv.DictReader(text.splitlines()):
        rows.append(
            TableRow(
                pattern=tuple(int(c) for c in rec["pattern"]),
                degree=int(rec["degree"]),
                numerator=tuple(int(c) for c in rec["coefficients"].split()),
            )
        )
    return GoldenTable(which, tuple(rows))


def compute_row(which: int, pattern) -> TableRow:
    pattern = tuple(pattern)
    if which == 1:
        gf = genfunc(pattern, None, "vertices")
    elif which == 2:
        gf = genfunc(ONES, pattern, "vertices")
    elif which == 3:
        gf = genfunc(ONES, pattern, "unsplittable")
    else:
        raise InputError("table number must be 1, 2 or 3")
    return TableRow(pattern, gf.degree, gf.numerator)


def reproduce_table(which: int) -> TableDiff:
    """Recompute every row of the requested table and diff it against the
    embedded golden copy."""
    golden = load_table(which)
    computed = []
    mismatches = []
    for row in golden.rows:
        got = compute_row(which, row.pattern)
        computed.append(got)
        if got != row:
            mismatches.append((row, got))
    return TableDiff(which, GoldenTable(which, tuple(computed)), tuple(mismatches))


def row_to_genfunc(row: TableRow) -> RationalGenFunc:
    return RationalGenFunc(row.numerator, row.degree + 1, row.degree)
