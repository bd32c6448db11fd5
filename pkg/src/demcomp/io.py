"""CSV ingestion and report writing.

Matrix CSV: a header row of labels, then one row per alternative; cells are
decimals, fractions such as ``1/4``, or ``*``/empty for missing. Head-to-head
CSV uses the same layout with ``wins/total`` cells.
"""

from __future__ import annotations

import csv
import io
import math
import warnings
from collections.abc import Callable
from dataclasses import dataclass, field
from decimal import Decimal, InvalidOperation
from fractions import Fraction

import numpy as np

from . import dematel
from .errors import InputError, MismatchedMirror, ParseError
from .pcm import CompletePCM, IncompletePCM, PriorityVector, validate

MISSING_MARKERS = ("", "*")
PRECISION = 6


def _read_rows(text) -> list[list[str]]:
    if hasattr(text, "read"):
        text = text.read()
    # blank lines are skipped; a row of empty cells (",,") is kept
    rows = [row for row in csv.reader(io.StringIO(text)) if len(row) > 1 or any(c.strip() for c in row)]
    if not rows:
        raise ParseError("empty input")
    return rows


def _layout(rows: list[list[str]]) -> tuple[tuple[str, ...], list[list[str]]]:
    labels = tuple(c.strip() for c in rows[0])
    body = rows[1:]
    n = len(labels)
    if any(not lab for lab in labels):
        raise ParseError("empty label in header", row=1)
    if len(body) != n:
        raise ParseError(f"header names {n} alternatives but there are {len(body)} data rows")
    cells = []
    for r, row in enumerate(body, start=2):
        row = [c.strip() for c in row]
        if len(row) > n:
            if any(row[n:]):
                raise ParseError(f"expected {n} cells, found {len(row)}", row=r)
            row = row[:n]
        cells.append(row + [""] * (n - len(row)))
    return labels, cells


def parse_number(cell: str) -> tuple[float, float]:
    """Value of a numeric cell and the half-unit of its last printed digit."""
    if "/" in cell:
        num, _, den = cell.partition("/")
        frac = Fraction(Decimal(num.strip())) / Fraction(Decimal(den.strip()))
        return float(frac), 0.0
    dec = Decimal(cell)
    if not dec.is_finite():
        raise InvalidOperation(cell)
    exp = dec.as_tuple().exponent
    return float(dec), (0.5 * 10.0 ** exp if exp < 0 else 0.0)


def _numeric_grid(cells, allow_missing: bool):
    n = len(cells)
    grid = np.full((n, n), math.nan)
    resolution = np.zeros((n, n))
    for i, row in enumerate(cells):
        for j, cell in enumerate(row):
            if cell in MISSING_MARKERS:
                if not allow_missing:
                    raise ParseError("missing value", row=i + 2, col=j + 1)
                continue
            try:
                grid[i, j], resolution[i, j] = parse_number(cell)
            except (InvalidOperation, ValueError, ZeroDivisionError):
                raise ParseError(f"cannot parse {cell!r} as a number", row=i + 2, col=j + 1) from None
    return grid, resolution


def parse_pcm_csv(text, **validate_kwargs) -> IncompletePCM:
    """Parse a matrix CSV into a validated IncompletePCM.

    Reciprocity of two-sided pairs is checked up to the rounding implied by
    the printed digits, so files written at fixed precision read back.
    Extra keyword arguments go to ``pcm.validate``.
    """
    labels, cells = _layout(_read_rows(text))
    grid, resolution = _numeric_grid(cells, allow_missing=True)
    validate_kwargs.setdefault("resolution", resolution)
    return validate(grid, labels, **validate_kwargs)


def parse_matrix_csv(text) -> tuple[tuple[str, ...], np.ndarray]:
    """Fully populated numeric matrix with its labels (direct or total relations)."""
    labels, cells = _layout(_read_rows(text))
    grid, _ = _numeric_grid(cells, allow_missing=False)
    return labels, grid


def parse_direct_relation_csv(text) -> dematel.DirectRelationMatrix:
    labels, grid = parse_matrix_csv(text)
    return dematel.DirectRelationMatrix(grid, labels)


def parse_total_relation_csv(text) -> dematel.TotalRelationMatrix:
    labels, grid = parse_matrix_csv(text)
    return dematel.TotalRelationMatrix(grid, labels)


@dataclass(frozen=True)
class HeadToHeadTable:
    labels: tuple[str, ...]
    cells: dict[tuple[int, int], tuple[int, int]] = field(default_factory=dict)

    @property
    def n(self) -> int:
        return len(self.labels)


def _parse_record(cell: str, r: int, c: int) -> tuple[int, int]:
    wins, sep, total = cell.partition("/")
    try:
        if not sep:
            raise ValueError
        w, t = int(wins), int(total)
    except ValueError:
        raise ParseError(f"expected 'wins/total', got {cell!r}", row=r, col=c) from None
    if t < 1:
        raise ParseError(f"total must be positive in {cell!r}", row=r, col=c)
    if not 0 <= w <= t:
        raise ParseError(f"wins must lie in [0, total] in {cell!r}", row=r, col=c)
    return w, t


def parse_headtohead_csv(text, lenient: bool = False) -> HeadToHeadTable:
    """Sparse win/total records; one-sided cells are mirrored as (t - w)/t.

    Inconsistent mirrors raise MismatchedMirror, or with ``lenient`` are
    dropped with a warning.
    """
    labels, cells = _layout(_read_rows(text))
    n = len(labels)
    raw = {}
    for i, row in enumerate(cells):
        for j, cell in enumerate(row):
            if cell in MISSING_MARKERS:
                continue
            if i == j:
                raise ParseError("diagonal cell must be blank", row=i + 2, col=j + 1)
            raw[i, j] = _parse_record(cell, i + 2, j + 1)

    table = {}
    for i in range(n):
        for j in range(i + 1, n):
            a, b = raw.get((i, j)), raw.get((j, i))
            if a is None and b is None:
                continue
            if a is not None and b is not None and (a[1] != b[1] or a[0] + b[0] != a[1]):
                msg = (f"{labels[i]} vs {labels[j]}: {a[0]}/{a[1]} and {b[0]}/{b[1]} disagree")
                if not lenient:
                    raise MismatchedMirror(msg, row=i + 2, col=j + 1)
                warnings.warn(msg + "; pair dropped", stacklevel=2)
                continue
            if a is None:
                a = (b[1] - b[0], b[1])
            table[i, j] = a
            table[j, i] = (a[1] - a[0], a[1])
    return HeadToHeadTable(labels=labels, cells=table)


@dataclass(frozen=True)
class TransformConfig:
    """Map a (wins, total) record to a multiplicative preference.

    ``kind`` is ``"odds"`` (w / (t - w)), ``"smoothed"`` ((w + alpha) /
    (t - w + alpha)) or ``"custom"`` with ``func``. Any transform must satisfy
    f(w, t) * f(t - w, t) = 1.
    """

    kind: str = "smoothed"
    alpha: float = 1.0
    func: Callable[[int, int], float] | None = None

    def __post_init__(self):
        if self.kind not in ("odds", "smoothed", "custom"):
            raise ValueError(f"unknown transform {self.kind!r}")
        if self.kind == "smoothed" and not self.alpha > 0:
            raise ValueError("smoothing alpha must be positive")
        if self.kind == "custom" and self.func is None:
            raise ValueError("custom transform needs a function")

    def __call__(self, wins: int, total: int) -> float:
        losses = total - wins
        if self.kind == "odds":
            if wins == 0 or losses == 0:
                raise InputError(f"odds undefined for a {wins}/{total} record; use a smoothed transform")
            return wins / losses
        if self.kind == "smoothed":
            return (wins + self.alpha) / (losses + self.alpha)
        return float(self.func(wins, total))

    @classmethod
    def parse(cls, spec: str) -> "TransformConfig":
        """``odds`` or ``smoothed[:alpha]``."""
        name, _, arg = spec.partition(":")
        if name == "odds" and not arg:
            return cls(kind="odds")
        if name == "smoothed":
            try:
                return cls(kind="smoothed", alpha=float(arg) if arg else 1.0)
            except ValueError as exc:
                raise InputError(str(exc)) from None
        raise InputError(f"unknown transform {spec!r}; expected 'odds' or 'smoothed:<alpha>'")


def headtohead_to_pcm(table: HeadToHeadTable, cfg: TransformConfig = TransformConfig()) -> IncompletePCM:
    n = table.n
    grid = [[None] * n for _ in range(n)]
    for (i, j), (w, t) in table.cells.items():
        grid[i][j] = cfg(w, t)
    # the reciprocity contract is exact, so hold transforms to working precision
    return validate(grid, table.labels, reciprocity_tol=1e-9)


def _write(rows) -> str:
    buf = io.StringIO()
    csv.writer(buf, lineterminator="\n").writerows(rows)
    return buf.getvalue()


def write_ranking_report(pv: PriorityVector, labels) -> str:
    rows = [("rank", "label", "priority")]
    rows += [(k, labels[i], f"{pv.weights[i]:.4f}") for k, i in enumerate(pv.ranking, start=1)]
    return _write(rows)


def write_matrix_csv(m) -> str:
    if isinstance(m, IncompletePCM):
        body = [[f"{v:.{PRECISION}f}" if k else "*" for v, k in zip(row, krow)]
                for row, krow in zip(m.values, m.known)]
    elif isinstance(m, (CompletePCM, dematel.TotalRelationMatrix, dematel.DirectRelationMatrix)):
        body = [[f"{v:.{PRECISION}f}" for v in row] for row in m.values]
    else:
        raise TypeError(f"cannot write {type(m).__name__} as a matrix CSV")
    return _write([list(m.labels)] + body)


def write_prominence_csv(records, labels) -> str:
    rows = [("label", "R", "C", "prominence", "relation", "category")]
    rows += [(labels[rec.factor_index], f"{rec.r:.{PRECISION}f}", f"{rec.c:.{PRECISION}f}",
              f"{rec.prominence:.{PRECISION}f}", f"{rec.relation:.{PRECISION}f}", rec.category.value)
             for rec in records]
    return _write(rows)
