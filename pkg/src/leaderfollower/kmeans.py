"""Seeded k-means: k-means++ initialization, Lloyd iterations, several restarts."""

from __future__ import annotations

import numpy as np

N_RESTARTS = 10
MAX_ITER = 100
TOL = 1e-9


def _rng(seed: int, restart: int) -> np.random.Generator:
    return np.random.default_rng(np.random.SeedSequence([seed % 2**64, restart]))


def _sq_dists(x: np.ndarray, centers: np.ndarray) -> np.ndarray:
    d = (
        np.sum(x * x, axis=1)[:, None]
        - 2.0 * x @ centers.T
        + np.sum(centers * centers, axis=1)[None, :]
    )
    return np.maximum(d, 0.0)


def kmeans_plusplus(x: np.ndarray, k: int, rng: np.random.Generator) -> np.ndarray:
    n = x.shape[0]
    centers = np.empty((k, x.shape[1]))
    centers[0] = x[rng.integers(n)]
    closest = np.sum((x - centers[0]) ** 2, axis=1)
    for j in range(1, k):
        total = closest.sum()
        if total > 0:
            idx = rng.choice(n, p=closest / total)
        else:
            idx = rng.integers(n)
        centers[j] = x[idx]
        closest = np.minimum(closest, np.sum((x - centers[j]) ** 2, axis=1))
    return centers


def _fill_empty(x, labels, centers, k) -> bool:
    """Move the worst-fitting point of a multi-point cluster into each empty one."""
    repaired = False
    for j in range(k):
        counts = np.bincount(labels, minlength=k)
        if counts[j] > 0:
            continue
        err = np.sum((x - centers[labels]) ** 2, axis=1)
        err[counts[labels] <= 1] = -1.0
        far = int(np.argmax(err))
        if err[far] < 0:
            break  # fewer points than clusters
        labels[far] = j
        centers[j] = x[far]
        repaired = True
    return repaired


def _lloyd(x, centers, k, max_iter, tol):
    for _ in range(max_iter):
        labels = np.argmin(_sq_dists(x, centers), axis=1)
        repaired = _fill_empty(x, labels, centers, k)
        new = np.array([x[labels == j].mean(axis=0) for j in range(k)])
        shift = float(np.max(np.linalg.norm(new - centers, axis=1)))
        centers = new
        if shift < tol and not repaired:
            break
    labels = np.argmin(_sq_dists(x, centers), axis=1)
    _fill_empty(x, labels, centers, k)
    wcss = float(sum(np.sum((x[labels == j] - x[labels == j].mean(axis=0)) ** 2)
                     for j in range(k) if np.any(labels == j)))
    return labels, wcss


def canonical_labels(labels) -> list[int]:
    """Renumber cluster ids by order of first appearance (smallest member row)."""
    remap: dict[int, int] = {}
    return [remap.setdefault(int(c), len(remap)) for c in labels]


def kmeans(points, k: int, seed: int, n_restarts: int = N_RESTARTS,
           max_iter: int = MAX_ITER, tol: float = TOL) -> list[int]:
    """Cluster the rows of ``points`` into ``k`` groups.

    Each restart draws from its own RNG stream derived from ``(seed, restart)``;
    the restart with the lowest within-cluster sum of squares wins, earliest
    first on ties. Returned ids are canonical (ordered by smallest member row).
    """
    x = np.asarray(points, dtype=float)
    if x.ndim == 1:
        x = x[:, None]
    n = x.shape[0]
    if not 1 <= k <= n:
        raise ValueError(f"k must be in 1..{n} (number of rows), got {k}")
    if k == 1:
        return [0] * n
    best_labels, best_wcss = None, np.inf
    for r in range(n_restarts):
        centers = kmeans_plusplus(x, k, _rng(seed, r))
        labels, wcss = _lloyd(x, centers, k, max_iter, tol)
        if wcss < best_wcss:
            best_labels, best_wcss = labels, wcss
    return canonical_labels(best_labels)
