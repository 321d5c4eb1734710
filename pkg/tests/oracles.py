"""Independent reference computations used only by the tests.

Nothing here shares code with the library paths they check.
"""

import itertools
import math

import numpy as np


def floyd_warshall(n, edges):
    """All-pairs hop distances as a dense matrix (inf when unreachable)."""
    d = np.full((n, n), math.inf)
    np.fill_diagonal(d, 0.0)
    for u, v in edges:
        if u != v:
            d[u, v] = d[v, u] = 1.0
    for k in range(n):
        d = np.minimum(d, d[:, k:k + 1] + d[k:k + 1, :])
    return d


def centrality_oracle(n, edges):
    return [int(x) for x in floyd_warshall(n, edges).sum(axis=0)]


def pair_error_matrix(truth, pred):
    """The misclassification sum taken literally over a full N x N indicator matrix.

    The inner index starts at i, so the diagonal is included; it is always 0.
    """
    n = len(truth)
    m = np.zeros((n, n), dtype=int)
    for i in range(n):
        for j in range(n):
            m[i, j] = int((truth[i] == truth[j]) != (pred[i] == pred[j]))
    return int(sum(m[i, j] for i in range(n) for j in range(i, n)))


def best_two_partition(points):
    """Exhaustive minimum-WCSS split of 1-D/2-D points into two non-empty groups."""
    pts = np.asarray(points, dtype=float).reshape(len(points), -1)
    n = len(pts)
    best = None
    for mask in range(1, 2 ** (n - 1)):
        a = [i for i in range(n) if mask >> i & 1]
        b = [i for i in range(n) if not mask >> i & 1]
        w = sum(float(np.sum((pts[g] - pts[g].mean(axis=0)) ** 2)) for g in (a, b))
        if best is None or w < best[0]:
            best = (w, frozenset(a), frozenset(b))
    return {best[1], best[2]}


def blocks_of(labels):
    out = {}
    for v, c in enumerate(labels):
        out.setdefault(c, set()).add(v)
    return {frozenset(s) for s in out.values()}


def edges_of_cliques(*cliques):
    return [e for c in cliques for e in itertools.combinations(c, 2)]
