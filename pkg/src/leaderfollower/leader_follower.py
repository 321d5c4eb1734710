"""Leader-follower community detection.

A node is a *leader* when at least one neighbour has a strictly larger
distance centrality; every other node is a *loyal follower*. Leaders are then
visited in order of increasing centrality and each one claims its still
unclaimed follower neighbours. Leaders that end up claiming nobody are folded
into the community most of their follower neighbours belong to.

The number of communities is never an input; it falls out of the procedure.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from typing import Sequence

from .centrality import distance_centrality_all
from .errors import GraphError, LeaderFollowerError
from .graph import Graph, connected_components
from .partition import Partition, merge

UNASSIGNED = -1


@dataclass(frozen=True)
class RoleLabeling:
    is_leader: tuple[bool, ...]
    # ordered by (centrality, node index)
    leaders_sorted: tuple[int, ...]

    @property
    def leaders(self) -> frozenset[int]:
        return frozenset(self.leaders_sorted)

    @property
    def followers(self) -> list[int]:
        return [v for v, lead in enumerate(self.is_leader) if not lead]


def classify_roles(g: Graph, dc: Sequence[int]) -> RoleLabeling:
    """Tag each node Leader or Follower from its centrality ``dc``."""
    if len(dc) != g.node_count:
        raise GraphError(f"centrality vector has {len(dc)} entries for {g.node_count} nodes")
    is_leader = tuple(
        any(dc[v] < dc[u] for u in g.adjacency[v]) for v in range(g.node_count)
    )
    leaders = sorted((dc[v], v) for v in range(g.node_count) if is_leader[v])
    return RoleLabeling(is_leader, tuple(v for _, v in leaders))


def _majority(labels) -> int:
    # ties go to the smallest leader id
    counts = Counter(labels)
    best = max(counts.values())
    return min(lab for lab, c in counts.items() if c == best)


def assign_membership(g: Graph, roles: RoleLabeling) -> list[int]:
    """Run the assignment procedure and return the membership map.

    ``result[v]`` is the leader whose community ``v`` joined. The graph must be
    connected and ``roles`` must contain at least one leader.
    """
    if not roles.leaders_sorted:
        raise LeaderFollowerError("assignment needs at least one leader")
    adj = g.adjacency
    is_leader = roles.is_leader
    member = [v if is_leader[v] else UNASSIGNED for v in range(g.node_count)]

    # seed communities: each leader claims its unclaimed follower neighbours
    claimed = {}
    for leader in roles.leaders_sorted:
        count = 0
        for u in adj[leader]:
            if not is_leader[u] and member[u] == UNASSIGNED:
                member[u] = leader
                count += 1
        claimed[leader] = count

    # fold followerless leaders into a neighbouring community, updating in place
    pending = {v for v in roles.leaders_sorted if claimed[v] == 0}
    for leader in roles.leaders_sorted:
        if leader not in pending:
            continue
        pending.discard(leader)
        follower_votes = [
            member[u] for u in adj[leader] if not is_leader[u] and member[u] != UNASSIGNED
        ]
        if follower_votes:
            member[leader] = _majority(follower_votes)
            continue
        votes = [
            member[u]
            for u in adj[leader]
            if member[u] != UNASSIGNED and member[u] not in pending
        ]
        member[leader] = _majority(votes) if votes else UNASSIGNED

    # anything left joins the majority of its assigned neighbours
    unassigned = [v for v in range(g.node_count) if member[v] == UNASSIGNED]
    while unassigned:
        snapshot = list(member)
        still = []
        for v in unassigned:
            votes = [snapshot[u] for u in adj[v] if snapshot[u] != UNASSIGNED]
            if votes:
                member[v] = _majority(votes)
            else:
                still.append(v)
        if len(still) == len(unassigned):
            raise GraphError("assignment cannot progress; is the graph connected?")
        unassigned = still
    return member


def assign_communities(g: Graph, roles: RoleLabeling) -> Partition:
    """Communities of a connected graph given its leader/follower roles.

    With no leaders at all (every centrality equal, e.g. a clique) the whole
    graph is one community.
    """
    if not roles.leaders_sorted:
        return Partition((0,) * g.node_count, 1 if g.node_count else 0)
    return Partition.from_labels(assign_membership(g, roles))


def detect_component(g: Graph) -> Partition:
    """Leader-follower partition of a connected graph."""
    if g.node_count == 1:
        return Partition((0,), 1)
    dc = distance_centrality_all(g)
    return assign_communities(g, classify_roles(g, dc))


def detect(g: Graph) -> Partition:
    """Leader-follower communities of any non-empty graph.

    Each connected component is handled on its own, since distances between
    components are infinite.
    """
    if g.node_count == 0:
        raise GraphError("cannot detect communities in an empty graph")
    parts = []
    for comp in connected_components(g):
        if len(comp) == g.node_count:
            parts.append((comp, detect_component(g)))
        else:
            sub, nodes = g.subgraph(comp)
            parts.append((nodes, detect_component(sub)))
    return merge(parts, g.node_count)
