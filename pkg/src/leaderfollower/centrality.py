"""Distance centrality: the sum of hop distances from a node to every other node.

Everything here is exact integer arithmetic, so equal centralities compare
equal and the strict comparisons in leader detection are well defined.
"""

from __future__ import annotations

from .errors import DisconnectedGraphError, GraphError
from .graph import Graph


def bfs_distances(g: Graph, source: int) -> list[int]:
    """Hop distances from ``source`` to every node of a connected graph.

    Raises
    ------
    DisconnectedGraphError
        If some node cannot be reached from ``source``.
    """
    n = g.node_count
    if not 0 <= source < n:
        raise GraphError(f"source {source} outside 0..{n - 1}")
    adj = g.adjacency
    dist = [-1] * n
    dist[source] = 0
    frontier = [source]
    d = 0
    reached = 1
    # level-synchronous BFS; plain lists beat deque here
    while frontier:
        d += 1
        nxt = []
        for u in frontier:
            for v in adj[u]:
                if dist[v] < 0:
                    dist[v] = d
                    nxt.append(v)
        reached += len(nxt)
        frontier = nxt
    if reached != n:
        raise DisconnectedGraphError(dist.index(-1))
    return dist


def distance_centrality(g: Graph, u: int) -> int:
    """``D(u)``, the sum of shortest-path hop counts from ``u``."""
    return sum(bfs_distances(g, u))


def distance_centrality_all(g: Graph) -> list[int]:
    """``D(u)`` for every node, one BFS per source (O(|V||E|) total)."""
    if g.node_count == 0:
        raise GraphError("distance centrality of an empty graph is undefined")
    return [sum(bfs_distances(g, u)) for u in range(g.node_count)]
