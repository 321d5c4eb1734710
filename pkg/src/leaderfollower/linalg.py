"""Dense symmetric eigensolver based on cyclic Jacobi rotations."""

from __future__ import annotations

import numpy as np

from .errors import ConvergenceError

MAX_SWEEPS = 100
RESIDUAL_TOL = 1e-8
STALL_TOL = 1e-11


def _round_robin(n: int) -> list[tuple[np.ndarray, np.ndarray]]:
    """Partition all index pairs of ``0..n-1`` into rounds of disjoint pairs.

    Classic tournament schedule: with an even number of players each round
    pairs everyone once, and ``m - 1`` rounds cover every pair exactly once.
    A dummy player pads odd ``n``.
    """
    m = n + (n % 2)
    players = list(range(m))
    rounds = []
    for _ in range(m - 1):
        ps, qs = [], []
        for i in range(m // 2):
            a, b = players[i], players[m - 1 - i]
            if a < n and b < n:
                ps.append(min(a, b))
                qs.append(max(a, b))
        rounds.append((np.array(ps, dtype=np.intp), np.array(qs, dtype=np.intp)))
        players = [players[0], players[-1]] + players[1:-1]
    return rounds


def _off_norm(a: np.ndarray) -> float:
    off = a - np.diag(np.diag(a))
    return float(np.linalg.norm(off))


def jacobi_eigh(m, max_sweeps: int = MAX_SWEEPS, tol: float = 1e-14):
    """All eigenpairs of a real symmetric matrix.

    Rotations within one round act on disjoint index pairs, so they commute
    and are applied together as whole-row / whole-column updates. A sweep is
    one pass over all rounds, i.e. every off-diagonal pair is rotated once.

    Returns
    -------
    eigenvalues : ndarray, shape (n,)
        Ascending.
    eigenvectors : ndarray, shape (n, n)
        Orthonormal columns, ``eigenvectors[:, i]`` pairs with ``eigenvalues[i]``.

    Raises
    ------
    ValueError
        If ``m`` is not square and exactly symmetric.
    ConvergenceError
        If the off-diagonal mass is still above tolerance after ``max_sweeps``.
    """
    a = np.array(m, dtype=float)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise ValueError(f"expected a square matrix, got shape {a.shape}")
    if not np.array_equal(a, a.T):
        raise ValueError("matrix is not symmetric")
    n = a.shape[0]
    v = np.eye(n)
    if n <= 1:
        return np.diag(a).copy(), v

    scale = np.linalg.norm(a)
    rounds = _round_robin(n)
    converged = scale == 0.0
    prev_off = np.inf
    for _ in range(max_sweeps):
        if converged:
            break
        for p, q in rounds:
            apq = a[p, q]
            app, aqq = a[p, p], a[q, q]
            # entries invisible next to both diagonal entries are dropped
            tiny = 100.0 * np.abs(apq)
            negligible = (np.abs(app) + tiny == np.abs(app)) & (np.abs(aqq) + tiny == np.abs(aqq))
            if negligible.any():
                a[p[negligible], q[negligible]] = 0.0
                a[q[negligible], p[negligible]] = 0.0
                apq = np.where(negligible, 0.0, apq)
            active = apq != 0.0
            if not active.any():
                continue
            safe = np.where(active, apq, 1.0)
            theta = (aqq - app) / (2.0 * safe)
            t = np.where(theta >= 0, 1.0, -1.0) / (np.abs(theta) + np.sqrt(theta * theta + 1.0))
            t = np.where(active, t, 0.0)
            c = 1.0 / np.sqrt(t * t + 1.0)
            s = t * c
            cc, ss = c[:, None], s[:, None]

            rp, rq = a[p, :].copy(), a[q, :].copy()
            a[p, :] = cc * rp - ss * rq
            a[q, :] = ss * rp + cc * rq
            cp, cq = a[:, p].copy(), a[:, q].copy()
            a[:, p] = cp * c - cq * s
            a[:, q] = cp * s + cq * c
            a[p, q] = 0.0
            a[q, p] = 0.0

            vp, vq = v[:, p].copy(), v[:, q].copy()
            v[:, p] = vp * c - vq * s
            v[:, q] = vp * s + vq * c
        off = _off_norm(a)
        # at the rounding floor a sweep no longer halves the off-diagonal mass
        converged = off <= tol * scale or (off <= STALL_TOL * scale and off > 0.5 * prev_off)
        prev_off = off

    if not converged:
        raise ConvergenceError(
            f"Jacobi did not converge in {max_sweeps} sweeps "
            f"(off-diagonal norm {_off_norm(a):.3e})",
            residual=_off_norm(a),
        )
    w = np.diag(a).copy()
    order = np.argsort(w, kind="stable")
    return w[order], v[:, order]


def eigen_smallest_k(m, k: int):
    """The ``k`` smallest eigenpairs of symmetric ``m``, eigenvalues ascending.

    The residual ``max |m v - lambda v|`` is checked against
    ``1e-8 * max(1, ||m||_inf)`` before returning.
    """
    a = np.asarray(m, dtype=float)
    n = a.shape[0] if a.ndim == 2 else 0
    if not 1 <= k <= n:
        raise ValueError(f"k must be in 1..{n}, got {k}")
    w, v = jacobi_eigh(a)
    w, v = w[:k], v[:, :k]
    residual = float(np.max(np.abs(a @ v - v * w))) if n else 0.0
    bound = RESIDUAL_TOL * max(1.0, float(np.max(np.sum(np.abs(a), axis=1))))
    if residual > bound:
        raise ConvergenceError(
            f"eigen residual {residual:.3e} exceeds {bound:.3e}", residual=residual
        )
    return w, v
