"""Planted clique-community benchmarks.

An instance is a set of disjoint cliques plus uniformly drawn edges between
different cliques. One member of each clique (its protected follower) never
receives an outside edge, so every clique keeps a loyal follower no matter how
many cross edges are added.

Random draws happen in a fixed order from one seeded stream: community sizes,
then the protected follower of each community, then the cross edges (redrawn
as a whole when a connected graph is required and the draw is disconnected).
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import GenerationError
from .graph import Graph, from_edges, is_connected
from .partition import Partition

MAX_CONNECT_RETRIES = 1000


@dataclass(frozen=True)
class PlantedSpec:
    num_communities: int
    size_min: int
    size_max: int
    inter_edges: int
    seed: int = 0
    require_connected: bool = True

    def check(self) -> None:
        if self.num_communities < 1:
            raise GenerationError("need at least one community")
        if not 2 <= self.size_min <= self.size_max:
            raise GenerationError(
                f"community sizes need 2 <= min <= max, got {self.size_min}..{self.size_max}"
            )
        if self.inter_edges < 0:
            raise GenerationError("inter_edges must be non-negative")


@dataclass(frozen=True)
class PlantedInstance:
    graph: Graph
    truth: Partition
    protected_followers: tuple[int, ...]
    sizes: tuple[int, ...]


@dataclass(frozen=True)
class Violation:
    community: int
    prop: str  # "clique" or "loyal_follower"
    witnesses: tuple

    def __str__(self) -> str:
        if self.prop == "clique":
            return f"community {self.community}: not a clique, missing edges {list(self.witnesses)}"
        return f"community {self.community}: no loyal follower (every member has an outside neighbour)"


def allowed_cross_pairs(sizes, protected) -> tuple[np.ndarray, np.ndarray]:
    """All node pairs eligible for a cross edge, as two index arrays."""
    community = np.repeat(np.arange(len(sizes)), sizes)
    eligible = np.ones(community.size, dtype=bool)
    eligible[list(protected)] = False
    nodes = np.flatnonzero(eligible)
    i, j = np.triu_indices(nodes.size, k=1)
    keep = community[nodes[i]] != community[nodes[j]]
    return nodes[i[keep]], nodes[j[keep]]


def max_inter_edges(sizes) -> int:
    """Number of allowed cross pairs when each community protects one node."""
    free = [s - 1 for s in sizes]
    total = sum(free)
    return (total * total - sum(f * f for f in free)) // 2


def generate(spec: PlantedSpec) -> PlantedInstance:
    """Draw a planted instance; fully determined by ``spec``."""
    spec.check()
    rng = np.random.default_rng(np.random.SeedSequence(spec.seed % 2**64))
    k = spec.num_communities
    sizes = [int(s) for s in rng.integers(spec.size_min, spec.size_max + 1, size=k)]
    starts = np.concatenate([[0], np.cumsum(sizes)[:-1]]).astype(int)
    protected = tuple(int(starts[c] + rng.integers(sizes[c])) for c in range(k))
    n = sum(sizes)

    limit = max_inter_edges(sizes)
    if spec.inter_edges > limit:
        raise GenerationError(
            f"{spec.inter_edges} inter-community edges requested but at most {limit} "
            f"are allowed for community sizes {sizes}"
        )
    if spec.require_connected and k > 1 and spec.inter_edges < k - 1:
        raise GenerationError(
            f"{k} communities cannot be connected with {spec.inter_edges} cross edges"
        )

    intra = [
        (int(starts[c]) + a, int(starts[c]) + b)
        for c in range(k)
        for a in range(sizes[c])
        for b in range(a + 1, sizes[c])
    ]
    src, dst = allowed_cross_pairs(sizes, protected)
    attempts = MAX_CONNECT_RETRIES if spec.require_connected else 1
    for _ in range(attempts):
        pick = rng.choice(src.size, size=spec.inter_edges, replace=False)
        cross = list(zip(src[pick].tolist(), dst[pick].tolist()))
        g = from_edges(n, intra + cross)
        if not spec.require_connected or is_connected(g):
            break
    else:
        raise GenerationError(
            f"no connected draw in {MAX_CONNECT_RETRIES} attempts; "
            "increase inter_edges or allow disconnected graphs"
        )

    truth = Partition(tuple(int(c) for c in np.repeat(np.arange(k), sizes)), k)
    return PlantedInstance(g, truth, protected, tuple(sizes))


def validate(g: Graph, truth: Partition) -> list[Violation]:
    """Check that every block of ``truth`` is a clique with a loyal follower."""
    if truth.node_count != g.node_count:
        raise GenerationError(
            f"partition covers {truth.node_count} nodes, graph has {g.node_count}"
        )
    comm = truth.community_of
    violations = []
    for c, block in enumerate(truth.blocks()):
        missing = []
        for i, u in enumerate(block):
            nbrs = set(g.adjacency[u])
            missing.extend((u, v) for v in block[i + 1:] if v not in nbrs)
        if missing:
            violations.append(Violation(c, "clique", tuple(missing)))
        outside = [
            (u, next((v for v in g.adjacency[u] if comm[v] != c), None)) for u in block
        ]
        if all(v is not None for _, v in outside):
            violations.append(Violation(c, "loyal_follower", tuple(outside)))
    return violations
