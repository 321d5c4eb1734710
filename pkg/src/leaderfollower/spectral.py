"""RatioCut spectral clustering baseline.

Unnormalized Laplacian, its ``k`` lowest eigenvectors as node coordinates,
then k-means on the rows. Unlike leader-follower, ``k`` must be supplied.
"""

from __future__ import annotations

import numpy as np

from .graph import Graph
from .kmeans import kmeans
from .linalg import eigen_smallest_k
from .partition import Partition


def laplacian(g: Graph) -> np.ndarray:
    """``L = Deg - A`` as a dense float matrix."""
    n = g.node_count
    lap = np.zeros((n, n))
    for u, nbrs in enumerate(g.adjacency):
        lap[u, list(nbrs)] = -1.0
        lap[u, u] = len(nbrs)
    return lap


def spectral_embedding(g: Graph, k: int) -> np.ndarray:
    _, vecs = eigen_smallest_k(laplacian(g), k)
    return vecs


def spectral_cluster(g: Graph, k: int, seed: int) -> Partition:
    if not 1 <= k <= g.node_count:
        raise ValueError(f"k must be in 1..{g.node_count}, got {k}")
    labels = kmeans(spectral_embedding(g, k), k, seed)
    return Partition.from_labels(labels)
