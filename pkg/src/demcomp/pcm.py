"""Pairwise comparison matrices: validation, connectivity, consistency, priorities."""

from __future__ import annotations

import math
import warnings
from collections import deque
from dataclasses import dataclass, field

import numpy as np

from .errors import AsymmetricPattern, InputError, NonPositive, NonReciprocal
from .linalg import DEFAULT_MAX_ITER, DEFAULT_TOL, principal_eigenpair

# Saaty's random index by matrix order
RANDOM_INDEX = {1: 0.0, 2: 0.0, 3: 0.52, 4: 0.89, 5: 1.12, 6: 1.26, 7: 1.36, 8: 1.41, 9: 1.46, 10: 1.49}
CR_THRESHOLD = 0.1
INPUT_RECIPROCITY_TOL = 1e-6
RECIPROCITY_TOL = 1e-9


def default_labels(n: int) -> tuple[str, ...]:
    return tuple(f"A{i + 1}" for i in range(n))


def _frozen(a: np.ndarray) -> np.ndarray:
    a = np.array(a)
    a.setflags(write=False)
    return a


@dataclass(frozen=True, eq=False)
class IncompletePCM:
    """Reciprocal comparison matrix with an explicit mask of known cells.

    ``values`` holds NaN wherever ``known`` is False.
    """

    labels: tuple[str, ...]
    values: np.ndarray
    known: np.ndarray

    @property
    def n(self) -> int:
        return len(self.labels)

    @property
    def missing_pairs(self) -> list[tuple[int, int]]:
        i, j = np.nonzero(np.triu(~self.known, 1))
        return list(zip(i.tolist(), j.tolist()))

    @property
    def is_complete(self) -> bool:
        return bool(self.known.all())

    def to_grid(self) -> list[list[float | None]]:
        return [[float(v) if k else None for v, k in zip(row, krow)]
                for row, krow in zip(self.values, self.known)]

    def __eq__(self, other):
        if not isinstance(other, IncompletePCM):
            return NotImplemented
        return (self.labels == other.labels and np.array_equal(self.known, other.known)
                and np.array_equal(self.values[self.known], other.values[other.known]))


@dataclass(frozen=True, eq=False)
class CompletePCM:
    """Fully populated matrix; reciprocal to 1e-9 with an exact unit diagonal."""

    labels: tuple[str, ...]
    values: np.ndarray

    def __post_init__(self):
        m = _frozen(np.asarray(self.values, dtype=float))
        if m.ndim != 2 or m.shape != (len(self.labels), len(self.labels)):
            raise InputError(f"{len(self.labels)} labels for a matrix of shape {m.shape}")
        if not np.all(np.isfinite(m)) or np.any(m <= 0):
            raise NonPositive("complete comparison matrix needs positive finite cells")
        if np.any(np.diag(m) != 1.0) or np.abs(m * m.T - 1.0).max() > RECIPROCITY_TOL:
            raise NonReciprocal("matrix is not reciprocal")
        object.__setattr__(self, "labels", tuple(self.labels))
        object.__setattr__(self, "values", m)

    @property
    def n(self) -> int:
        return len(self.labels)

    def reciprocity_error(self) -> float:
        return float(np.abs(self.values * self.values.T - 1.0).max())

    def __eq__(self, other):
        if not isinstance(other, CompletePCM):
            return NotImplemented
        return self.labels == other.labels and np.array_equal(self.values, other.values)


@dataclass(frozen=True)
class ConsistencyReport:
    n: int
    lambda_max: float
    ci: float
    ri: float
    cr: float
    acceptable: bool
    ri_extrapolated: bool = False


@dataclass(frozen=True)
class PriorityVector:
    weights: np.ndarray
    ranking: tuple[int, ...] = field(default=())

    def __post_init__(self):
        w = _frozen(np.asarray(self.weights, dtype=float))
        object.__setattr__(self, "weights", w)
        if not self.ranking:
            object.__setattr__(self, "ranking", rank_order(w))


def rank_order(weights) -> tuple[int, ...]:
    """Indices by descending weight; equal weights keep ascending index order."""
    return tuple(int(i) for i in np.argsort(-np.asarray(weights, dtype=float), kind="stable"))


def _cell(value):
    if value is None:
        return math.nan
    return float(value)


def validate(
    raw,
    labels=None,
    *,
    autofill: bool = True,
    reciprocity_tol: float = INPUT_RECIPROCITY_TOL,
    resolution=None,
    reconcile: bool = False,
    zero_as_missing: bool = False,
) -> IncompletePCM:
    """Build an IncompletePCM from a square grid of numbers and None/NaN.

    Blank diagonal cells become 1; one-sided pairs get the reciprocal mirror
    when ``autofill`` is on. Two-sided pairs must multiply to 1 within
    ``reciprocity_tol`` (widened per cell by ``resolution``, the half-unit of
    the last printed digit, when given). Pairs that pass but are off by more
    than 1e-9 are replaced by their geometric consensus
    ``sqrt(m_ij / m_ji)`` so the result is reciprocal to working precision.
    ``reconcile=True`` skips the tolerance check, so every pair off by more
    than 1e-9 gets the consensus however far apart the two cells are. ``zero_as_missing`` turns literal zeros into missing cells,
    with a warning, instead of raising NonPositive.
    """
    grid = np.array([[_cell(v) for v in row] for row in raw], dtype=float) \
        if not isinstance(raw, np.ndarray) else np.array(raw, dtype=float)
    if grid.ndim != 2 or grid.shape[0] != grid.shape[1]:
        raise InputError(f"comparison grid must be square, got shape {grid.shape}")
    n = grid.shape[0]
    if n < 2:
        raise InputError("at least 2 alternatives are required")
    labels = default_labels(n) if labels is None else tuple(str(x) for x in labels)
    if len(labels) != n:
        raise InputError(f"{len(labels)} labels for {n} alternatives")
    if len(set(labels)) != n:
        raise InputError("labels must be unique")
    res = np.zeros((n, n)) if resolution is None else np.asarray(resolution, dtype=float)

    if np.any(np.isinf(grid)):
        raise NonPositive("comparison values must be finite")
    if zero_as_missing:
        zeros = np.argwhere(grid == 0.0)
        for i, j in zeros:
            warnings.warn(f"zero comparison at ({labels[i]}, {labels[j]}) treated as missing", stacklevel=2)
            grid[i, j] = math.nan
    bad = np.argwhere(grid <= 0.0)
    if len(bad):
        i, j = bad[0]
        raise NonPositive(f"non-positive comparison {grid[i, j]} at ({labels[i]}, {labels[j]})")

    diag = np.diag(grid)
    if np.any(~np.isnan(diag) & (np.abs(diag - 1.0) > reciprocity_tol + np.diag(res))):
        raise NonReciprocal("diagonal entries must equal 1")
    np.fill_diagonal(grid, 1.0)

    values = grid.copy()
    for i in range(n):
        for j in range(i + 1, n):
            a, b = grid[i, j], grid[j, i]
            a_known, b_known = not math.isnan(a), not math.isnan(b)
            if a_known and b_known:
                dev = abs(a * b - 1.0)
                if dev <= RECIPROCITY_TOL:
                    continue
                if not reconcile and dev > reciprocity_tol + res[i, j] * b + res[j, i] * a:
                    raise NonReciprocal(
                        f"({labels[i]}, {labels[j]}) = {a:g} and ({labels[j]}, {labels[i]}) = {b:g} "
                        f"multiply to {a * b:.6g}, not 1")
                values[i, j] = math.sqrt(a / b)
                values[j, i] = 1.0 / values[i, j]
            elif a_known or b_known:
                if not autofill:
                    raise AsymmetricPattern(f"only one of ({labels[i]}, {labels[j]}) and its mirror is given")
                if a_known:
                    values[j, i] = 1.0 / a
                else:
                    values[i, j] = 1.0 / b

    known = ~np.isnan(values)
    return IncompletePCM(labels=labels, values=_frozen(values), known=_frozen(known))


def complete_pcm(values, labels=None) -> CompletePCM:
    """Wrap a fully populated reciprocal matrix, checking reciprocity at 1e-9."""
    m = np.array(values, dtype=float)
    if m.ndim != 2 or m.shape[0] != m.shape[1] or m.shape[0] < 2:
        raise InputError(f"expected a square matrix of order >= 2, got shape {m.shape}")
    return CompletePCM(labels=default_labels(m.shape[0]) if labels is None else tuple(labels), values=m)


def from_weights(weights, labels=None) -> CompletePCM:
    """Consistent matrix w_i / w_j."""
    w = np.asarray(weights, dtype=float)
    m = w[:, None] / w[None, :]
    np.fill_diagonal(m, 1.0)
    return CompletePCM(labels=default_labels(len(w)) if labels is None else tuple(labels), values=m)


def components(pcm: IncompletePCM) -> list[list[int]]:
    """Connected components of the comparison graph, each sorted, by smallest member."""
    adj = pcm.known.copy()
    np.fill_diagonal(adj, False)
    seen = [False] * pcm.n
    comps = []
    for start in range(pcm.n):
        if seen[start]:
            continue
        seen[start] = True
        queue, comp = deque([start]), []
        while queue:
            v = queue.popleft()
            comp.append(v)
            for u in np.flatnonzero(adj[v]):
                if not seen[u]:
                    seen[u] = True
                    queue.append(int(u))
        comps.append(sorted(comp))
    return comps


def connectivity(pcm: IncompletePCM) -> bool:
    return len(components(pcm)) == 1


def random_index(n: int) -> tuple[float, bool]:
    """RI for order ``n`` and whether it was clamped from the n = 10 entry."""
    if n > 10:
        return RANDOM_INDEX[10], True
    return RANDOM_INDEX[n], False


def consistency(pcm: CompletePCM, tol: float = DEFAULT_TOL, max_iter: int = DEFAULT_MAX_ITER) -> ConsistencyReport:
    n = pcm.n
    lam = principal_eigenpair(pcm.values, tol=tol, max_iter=max_iter).value
    ci = (lam - n) / (n - 1)
    ri, clamped = random_index(n)
    if ri > 0:
        cr = ci / ri
    else:
        cr = 0.0 if abs(ci) <= 1e-9 else math.inf
    return ConsistencyReport(n=n, lambda_max=lam, ci=ci, ri=ri, cr=cr,
                             acceptable=cr < CR_THRESHOLD, ri_extrapolated=clamped)


def priorities(pcm: CompletePCM, tol: float = DEFAULT_TOL, max_iter: int = DEFAULT_MAX_ITER) -> PriorityVector:
    pair = principal_eigenpair(pcm.values, tol=tol, max_iter=max_iter)
    return PriorityVector(weights=pair.vector)
