"""Dense matrix numerics: pivoted Gaussian elimination and power iteration.

Matrices are plain float64 numpy arrays; ``as_matrix`` is the single entry
point that enforces shape and finiteness.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import NoConvergence, SingularMatrix

DEFAULT_TOL = 1e-12
DEFAULT_MAX_ITER = 10_000
PIVOT_RTOL = 1e-12


def as_matrix(a, *, square: bool = False) -> np.ndarray:
    m = np.array(a, dtype=float)
    if m.ndim == 1:
        m = m.reshape(-1, 1)
    if m.ndim != 2 or m.shape[0] < 1 or m.shape[1] < 1:
        raise ValueError(f"expected a non-empty 2-d matrix, got shape {m.shape}")
    if square and m.shape[0] != m.shape[1]:
        raise ValueError(f"expected a square matrix, got shape {m.shape}")
    if not np.all(np.isfinite(m)):
        raise ValueError("matrix entries must be finite")
    return m


def inf_norm(a) -> float:
    """Max absolute row sum."""
    a = np.atleast_2d(np.asarray(a, dtype=float))
    return float(np.abs(a).sum(axis=1).max())


def solve_linear(a, b) -> np.ndarray:
    """Solve ``A X = B`` by Gaussian elimination with partial pivoting.

    ``b`` may be a vector or an n x m matrix; the result has the same shape.
    Raises SingularMatrix when a pivot falls below 1e-12 times the largest
    absolute entry of ``A``.
    """
    a = as_matrix(a, square=True).copy()
    b_in = np.asarray(b, dtype=float)
    vector = b_in.ndim == 1
    x = as_matrix(b_in).copy()
    n = a.shape[0]
    if x.shape[0] != n:
        raise ValueError(f"row count mismatch: A is {n}x{n}, B has {x.shape[0]} rows")

    scale = np.abs(a).max()
    threshold = PIVOT_RTOL * scale
    if scale == 0.0:
        raise SingularMatrix("matrix is identically zero")

    for k in range(n):
        p = k + int(np.argmax(np.abs(a[k:, k])))
        if abs(a[p, k]) < threshold:
            raise SingularMatrix(f"pivot {abs(a[p, k]):.3e} in column {k} below {threshold:.3e}")
        if p != k:
            a[[k, p]] = a[[p, k]]
            x[[k, p]] = x[[p, k]]
        factors = a[k + 1:, k] / a[k, k]
        a[k + 1:, k:] -= np.outer(factors, a[k, k:])
        x[k + 1:] -= np.outer(factors, x[k])

    for k in range(n - 1, -1, -1):
        x[k] = (x[k] - a[k, k + 1:] @ x[k + 1:]) / a[k, k]

    return x.ravel() if vector else x


def inverse(a) -> np.ndarray:
    a = as_matrix(a, square=True)
    return solve_linear(a, np.eye(a.shape[0]))


@dataclass(frozen=True)
class EigenPair:
    value: float
    vector: np.ndarray
    iterations: int
    residual: float


def principal_eigenpair(a, tol: float = DEFAULT_TOL, max_iter: int = DEFAULT_MAX_ITER) -> EigenPair:
    """Perron eigenpair of a positive matrix by power iteration.

    Starts from the uniform vector and keeps the iterate sum-normalised, so
    the eigenvalue estimate is simply the sum of ``A v``. Stops once two
    successive estimates differ by less than ``tol``.
    """
    a = as_matrix(a, square=True)
    if tol <= 0 or max_iter < 1:
        raise ValueError("tol must be > 0 and max_iter >= 1")
    if np.any(a <= 0):
        raise ValueError("power iteration here requires a strictly positive matrix")

    n = a.shape[0]
    v = np.full(n, 1.0 / n)
    lam = np.inf
    for it in range(1, max_iter + 1):
        y = a @ v
        lam_new = float(y.sum())
        v = y / lam_new
        converged = abs(lam_new - lam) < tol
        lam = lam_new
        if converged:
            break

    residual = float(np.abs(a @ v - lam * v).max())
    if not converged and residual > tol * max(1.0, abs(lam)):
        raise NoConvergence(f"power iteration did not converge in {max_iter} steps (residual {residual:.3e})")
    v = v / v.sum()
    v.setflags(write=False)
    return EigenPair(value=lam, vector=v, iterations=it, residual=residual)


def spectral_radius_estimate(a, tol: float = DEFAULT_TOL, max_iter: int = DEFAULT_MAX_ITER) -> float:
    """Spectral radius of a non-negative matrix.

    Iterates on the shifted matrix ``A/s + cI`` (s the largest row sum, c a
    quarter of the mean row sum of ``A/s``) from the all-ones vector. The
    shift removes periodicity and keeps every iterate strictly positive, so
    the Collatz-Wielandt ratios min/max of ``(Bx)_i / x_i`` bracket the Perron
    root at each step; iteration stops when the bracket is narrower than
    ``tol``. For reducible inputs where the bracket closes slowly the upper
    bound is returned, which errs on the safe side for convergence guards.
    """
    a = as_matrix(a, square=True)
    if np.any(a < 0):
        raise ValueError("spectral_radius_estimate requires a non-negative matrix")
    s = inf_norm(a)
    if s == 0.0:
        return 0.0
    a = a / s
    shift = 0.25 * float(a.sum(axis=1).mean())
    b = a + shift * np.eye(a.shape[0])
    x = np.ones(a.shape[0])
    upper = np.inf
    for _ in range(max_iter):
        y = b @ x
        ratios = y / x
        lower, prev_upper, upper = float(ratios.min()), upper, float(ratios.max())
        if upper - lower < tol:
            return max(0.0, s * (0.5 * (upper + lower) - shift))
        # upper bound is non-increasing; stagnation means a reducible tail
        if prev_upper - upper < tol * tol:
            break
        x = y / y.max()
    return max(0.0, s * (upper - shift))
