"""Bundled tennis head-to-head data (25 ATP champions since 1973).

``tennis_pcm`` is the published incomplete comparison matrix. It carries one
literal ``0`` (Ferrero vs Sampras, whose mirror is blank) and two-sided pairs
rounded to two decimals that are not exactly reciprocal, so loading it cleans
both: zeros become missing and two-sided pairs are reconciled to their
geometric consensus.
"""

from __future__ import annotations

import csv
import io
import warnings
from importlib import resources

import numpy as np

from .io import HeadToHeadTable, parse_headtohead_csv, parse_matrix_csv, parse_pcm_csv
from .pcm import IncompletePCM


def read_text(name: str) -> str:
    return resources.files("demcomp").joinpath("data", name).read_text(encoding="utf-8")


def tennis_pcm(quiet: bool = True) -> IncompletePCM:
    with warnings.catch_warnings():
        if quiet:
            warnings.simplefilter("ignore")
        return parse_pcm_csv(read_text("tennis_pcm.csv"), zero_as_missing=True, reconcile=True)


def tennis_pcm_raw() -> tuple[tuple[str, ...], np.ndarray]:
    """Published cells as floats, NaN where blank, no cleaning."""
    rows = list(csv.reader(io.StringIO(read_text("tennis_pcm.csv"))))
    labels = tuple(rows[0])
    grid = np.array([[float(c) if c else np.nan for c in row] for row in rows[1:]])
    return labels, grid


def tennis_completed() -> tuple[tuple[str, ...], np.ndarray]:
    return parse_matrix_csv(read_text("tennis_completed.csv"))


def tennis_ranking() -> list[tuple[str, float]]:
    rows = csv.DictReader(io.StringIO(read_text("tennis_ranking.csv")))
    return [(r["label"], float(r["priority"])) for r in rows]


def tennis_headtohead() -> HeadToHeadTable:
    return parse_headtohead_csv(read_text("tennis_headtohead.csv"))
