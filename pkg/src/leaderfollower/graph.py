"""Undirected simple graphs on contiguous integer nodes, plus edge-list I/O."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from typing import Iterable, TextIO

from .errors import GraphError, ParseError


@dataclass(frozen=True)
class Graph:
    """Immutable undirected simple graph.

    Nodes are ``0..node_count-1``. ``adjacency[v]`` is a strictly increasing
    tuple of the neighbours of ``v``. Build instances with :func:`from_edges`.
    """

    node_count: int
    adjacency: tuple[tuple[int, ...], ...]
    edge_count: int

    def neighbors(self, v: int) -> tuple[int, ...]:
        return self.adjacency[v]

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    def edges(self):
        """Yield every edge once as ``(u, v)`` with ``u < v``."""
        for u, nbrs in enumerate(self.adjacency):
            for v in nbrs:
                if u < v:
                    yield u, v

    def has_edge(self, u: int, v: int) -> bool:
        nbrs = self.adjacency[u]
        # adjacency lists are sorted; bisect would be faster for hubs but
        # degrees here are small
        return v in nbrs

    def subgraph(self, nodes: Iterable[int]) -> tuple["Graph", list[int]]:
        """Induced subgraph on ``nodes``.

        Returns the subgraph (relabelled to ``0..len(nodes)-1`` in ascending
        order of the original ids) and the list mapping new ids to old ids.
        """
        old_ids = sorted(set(nodes))
        new_id = {old: new for new, old in enumerate(old_ids)}
        edges = [
            (new_id[u], new_id[v])
            for u in old_ids
            for v in self.adjacency[u]
            if u < v and v in new_id
        ]
        return from_edges(len(old_ids), edges), old_ids

    def relabel(self, perm: list[int]) -> "Graph":
        """Return the graph with node ``v`` renamed to ``perm[v]``."""
        if sorted(perm) != list(range(self.node_count)):
            raise GraphError("relabel needs a permutation of 0..node_count-1")
        return from_edges(self.node_count, [(perm[u], perm[v]) for u, v in self.edges()])


@dataclass
class NodeIdMap:
    """Bijection between external string labels and internal node ids."""

    internal_to_external: list[str] = field(default_factory=list)
    external_to_internal: dict[str, int] = field(default_factory=dict)

    def add(self, label: str) -> int:
        idx = self.external_to_internal.get(label)
        if idx is None:
            idx = len(self.internal_to_external)
            self.external_to_internal[label] = idx
            self.internal_to_external.append(label)
        return idx

    def __len__(self) -> int:
        return len(self.internal_to_external)

    def __getitem__(self, label: str) -> int:
        return self.external_to_internal[label]

    def label(self, idx: int) -> str:
        return self.internal_to_external[idx]

    @classmethod
    def identity(cls, n: int) -> "NodeIdMap":
        """Labels ``"0".."n-1"`` for graphs that have no external names."""
        m = cls()
        for i in range(n):
            m.add(str(i))
        return m


def from_edges(n: int, edges: Iterable[tuple[int, int]]) -> Graph:
    """Build a :class:`Graph` on ``n`` nodes.

    Duplicate edges (in either orientation) and self-loops are dropped
    silently. An endpoint outside ``0..n-1`` raises :class:`GraphError`.
    """
    if n < 0:
        raise GraphError(f"node count must be non-negative, got {n}")
    nbr_sets: list[set[int]] = [set() for _ in range(n)]
    for edge in edges:
        u, v = edge
        if not (0 <= u < n and 0 <= v < n):
            raise GraphError(f"edge {tuple(edge)} has an endpoint outside 0..{n - 1}")
        if u == v:
            continue
        nbr_sets[u].add(v)
        nbr_sets[v].add(u)
    adjacency = tuple(tuple(sorted(s)) for s in nbr_sets)
    edge_count = sum(len(a) for a in adjacency) // 2
    return Graph(n, adjacency, edge_count)


def connected_components(g: Graph) -> list[list[int]]:
    """Connected components as sorted node lists, ordered by smallest member."""
    seen = [False] * g.node_count
    components = []
    for start in range(g.node_count):
        if seen[start]:
            continue
        seen[start] = True
        comp = [start]
        queue = deque([start])
        while queue:
            u = queue.popleft()
            for v in g.adjacency[u]:
                if not seen[v]:
                    seen[v] = True
                    comp.append(v)
                    queue.append(v)
        comp.sort()
        components.append(comp)
    return components


def is_connected(g: Graph) -> bool:
    return g.node_count > 0 and len(connected_components(g)) == 1


def load_edge_list(stream: TextIO) -> tuple[Graph, NodeIdMap]:
    """Parse a TAB-separated edge list.

    Blank lines and lines starting with ``#`` are skipped. Labels get ids in
    order of first appearance.
    """
    ids = NodeIdMap()
    edges = []
    for lineno, raw in enumerate(stream, start=1):
        line = raw.rstrip("\r\n")
        if not line.strip() or line.lstrip().startswith("#"):
            continue
        fields = line.split("\t")
        if len(fields) != 2 or not fields[0] or not fields[1]:
            raise ParseError(f"expected '<label>\\t<label>', got {line!r}", lineno)
        edges.append((ids.add(fields[0]), ids.add(fields[1])))
    if len(ids) == 0:
        raise ParseError("edge list is empty")
    return from_edges(len(ids), edges), ids


def write_edge_list(g: Graph, ids: NodeIdMap | None, stream: TextIO) -> None:
    """Write ``g`` as a TAB-separated edge list.

    Each edge is written as ``min<TAB>max`` of its two labels (string order)
    and the lines are sorted, so equal graphs serialize identically.
    """
    if ids is None:
        ids = NodeIdMap.identity(g.node_count)
    lines = []
    for u, v in g.edges():
        a, b = sorted((ids.label(u), ids.label(v)))
        lines.append(f"{a}\t{b}\n")
    lines.sort()
    stream.write("".join(lines))
