"""Floating-point eigenvalues for display and cross-checking.

A cyclic Jacobi iteration: unconditionally convergent on symmetric input
and highly accurate at these sizes.  Never used for membership decisions;
those belong to the exact engine.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .core import SignedGraph

_OFF_TOL = 1e-12
_GROUP_TOL = 1e-7


@dataclass(frozen=True)
class NumericSpectrum:
    values: tuple[float, ...]  # sorted descending
    tol: float


def jacobi_eigenvalues(matrix: np.ndarray, off_tol: float = _OFF_TOL) -> np.ndarray:
    """Eigenvalues of a symmetric matrix by cyclic Jacobi sweeps, sorted
    descending.  Stops when the off-diagonal Frobenius norm drops below
    off_tol (scaled by the matrix norm)."""
    a = np.array(matrix, dtype=np.float64)
    n = a.shape[0]
    if n == 0:
        return np.zeros(0)
    if n == 1:
        return np.array([a[0, 0]])
    scale = max(np.abs(a).max(), 1.0)
    for _ in range(60):
        off = np.sqrt(max(np.sum(a * a) - np.sum(np.diag(a) ** 2), 0.0))
        if off <= off_tol * scale:
            break
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = a[p, q]
                if apq == 0.0:
                    continue
                theta = (a[q, q] - a[p, p]) / (2.0 * apq)
                t = 1.0 if theta == 0.0 else (
                    np.sign(theta) / (abs(theta) + np.sqrt(theta * theta + 1.0)))
                c = 1.0 / np.sqrt(t * t + 1.0)
                s = t * c
                rp = c * a[p, :] - s * a[q, :]
                rq = s * a[p, :] + c * a[q, :]
                a[p, :], a[q, :] = rp, rq
                cp = c * a[:, p] - s * a[:, q]
                cq = s * a[:, p] + c * a[:, q]
                a[:, p], a[:, q] = cp, cq
                a[p, q] = a[q, p] = 0.0
    return np.sort(np.diag(a))[::-1]


def eigenvalues(g: SignedGraph, tol: float = _GROUP_TOL) -> NumericSpectrum:
    if tol <= 0:
        raise ValueError("tol must be positive")
    vals = jacobi_eigenvalues(g.sign.astype(np.float64))
    return NumericSpectrum(values=tuple(float(v) for v in vals), tol=tol)


def _group(values, tol):
    groups = []
    for v in values:
        if groups and abs(v - groups[-1][0] / groups[-1][1]) <= tol:
            total, count = groups[-1]
            groups[-1] = (total + v, count + 1)
        else:
            groups.append((v, 1))
    return [(total / count, count) for total, count in groups]


def pretty_spectrum(spectrum: NumericSpectrum) -> str:
    """Exponent notation grouped by multiplicity, e.g. "{-1^3, 1^2, -2.7016,
    3.7016}"; clusters are ordered by absolute value, negative first."""
    groups = _group(sorted(spectrum.values), spectrum.tol)
    groups.sort(key=lambda g: (round(abs(g[0]), 6), g[0] > 0))
    parts = []
    for value, count in groups:
        if abs(value - round(value)) <= spectrum.tol:
            text = str(int(round(value)))
        else:
            text = f"{value:.4f}"
        if count > 1:
            text += f"^{count}"
        parts.append(text)
    return "{" + ", ".join(parts) + "}"
