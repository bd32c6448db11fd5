"""Filling missing pairwise judgments from DEMATEL total-relation ratios.

The known comparisons are read as direct influences between alternatives,
DEMATEL propagates them along every indirect path, and each missing ratio is
recovered from the pair of total influences ``t_ij``, ``t_ji`` as the unique
positive reciprocal solution ``c_ij = sqrt(t_ij / t_ji)``.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

import numpy as np

from . import dematel
from .errors import Disconnected, NumericalError, ZeroTotalRelation
from .linalg import spectral_radius_estimate
from .pcm import CompletePCM, ConsistencyReport, IncompletePCM, components, consistency


class Mode(enum.Enum):
    PRESERVE_KNOWN = "preserve"
    OVERWRITE = "overwrite"


@dataclass(frozen=True)
class CompletionOptions:
    mode: Mode = Mode.PRESERVE_KNOWN
    series_check: bool = False
    series_terms: int = 200
    series_tol: float = 1e-9


@dataclass(frozen=True)
class CompletionReport:
    completed: CompletePCM
    filled_cells: tuple[tuple[int, int, float], ...]
    spectral_radius: float
    consistency: ConsistencyReport
    total: dematel.TotalRelationMatrix | None = None


def to_direct_relation(pcm: IncompletePCM) -> dematel.DirectRelationMatrix:
    """Known comparisons copied verbatim, diagonal included; missing cells -> 0."""
    d = np.where(pcm.known, pcm.values, 0.0)
    return dematel.DirectRelationMatrix(d, pcm.labels)


def from_total_relation(t: dematel.TotalRelationMatrix, pcm: IncompletePCM,
                        opts: CompletionOptions = CompletionOptions()) -> CompletePCM:
    tv = t.values
    target = ~pcm.known if opts.mode is Mode.PRESERVE_KNOWN else np.ones_like(pcm.known)
    np.fill_diagonal(target, False)
    need = target | target.T
    if np.any((tv <= 0) & need):
        i, j = np.argwhere((tv <= 0) & need)[0]
        raise ZeroTotalRelation(
            f"total relation between {pcm.labels[i]} and {pcm.labels[j]} is zero; "
            "the comparison graph is probably disconnected")

    out = np.where(pcm.known, pcm.values, np.nan)
    iu, ju = np.nonzero(np.triu(target, 1) | np.tril(target, -1).T)
    ratio = np.sqrt(tv[iu, ju] / tv[ju, iu])
    out[iu, ju] = ratio
    out[ju, iu] = 1.0 / ratio
    np.fill_diagonal(out, 1.0)
    out.setflags(write=False)
    return CompletePCM(labels=pcm.labels, values=out)


def complete(pcm: IncompletePCM, opts: CompletionOptions = CompletionOptions()) -> CompletionReport:
    comps = components(pcm)
    if len(comps) > 1:
        raise Disconnected(comps, pcm.labels)

    n_mat = dematel.normalize(to_direct_relation(pcm))
    rho = spectral_radius_estimate(n_mat)

    if opts.mode is Mode.PRESERVE_KNOWN and pcm.is_complete:
        # nothing to fill; skip the solve, which is singular for balanced inputs
        total = None
        completed = CompletePCM(labels=pcm.labels, values=pcm.values)
    else:
        total = dematel.total_relation(n_mat, pcm.labels)
        if opts.series_check:
            series = dematel.truncated_series(n_mat, opts.series_terms)
            gap = float(np.abs(series - total.values).max())
            if gap > opts.series_tol:
                raise NumericalError(f"closed form and truncated series differ by {gap:.3e}")
        completed = from_total_relation(total, pcm, opts)

    missing = ~pcm.known
    filled = tuple((int(i), int(j), float(completed.values[i, j])) for i, j in np.argwhere(missing))
    return CompletionReport(
        completed=completed,
        filled_cells=filled,
        spectral_radius=rho,
        consistency=consistency(completed),
        total=total,
    )
