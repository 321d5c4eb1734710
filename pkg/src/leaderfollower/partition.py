"""Disjoint node partitions in canonical form, and the partition TSV format."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence, TextIO

from .errors import ParseError, PartitionError
from .graph import NodeIdMap


@dataclass(frozen=True)
class Partition:
    """Assignment of every node to a community id.

    Ids are contiguous ``0..num_communities-1`` and numbered by ascending
    smallest member, so two partitions with the same blocks compare equal.
    """

    community_of: tuple[int, ...]
    num_communities: int

    @classmethod
    def from_labels(cls, labels: Sequence) -> "Partition":
        """Canonicalize arbitrary hashable per-node labels."""
        remap: dict = {}
        out = []
        for lab in labels:
            if lab not in remap:
                remap[lab] = len(remap)
            out.append(remap[lab])
        return cls(tuple(out), len(remap))

    @classmethod
    def from_blocks(cls, n: int, blocks: Iterable[Iterable[int]]) -> "Partition":
        labels = [None] * n
        for b, block in enumerate(blocks):
            for v in block:
                if labels[v] is not None:
                    raise PartitionError(f"node {v} appears in more than one block")
                labels[v] = b
        missing = [v for v, lab in enumerate(labels) if lab is None]
        if missing:
            raise PartitionError(f"blocks do not cover nodes {missing[:10]}")
        return cls.from_labels(labels)

    @property
    def node_count(self) -> int:
        return len(self.community_of)

    def blocks(self) -> list[list[int]]:
        out: list[list[int]] = [[] for _ in range(self.num_communities)]
        for v, c in enumerate(self.community_of):
            out[c].append(v)
        return out

    def permuted(self, perm: Sequence[int]) -> "Partition":
        """The same partition after renaming node ``v`` to ``perm[v]``."""
        labels = [0] * len(perm)
        for v, c in enumerate(self.community_of):
            labels[perm[v]] = c
        return Partition.from_labels(labels)


def merge(parts: Sequence[tuple[Sequence[int], Partition]], n: int) -> Partition:
    """Combine partitions of disjoint node subsets into one partition of ``n``.

    ``parts`` pairs each local partition with the list of global node ids its
    local nodes stand for.
    """
    labels: list = [None] * n
    for k, (nodes, part) in enumerate(parts):
        for local, glob in enumerate(nodes):
            labels[glob] = (k, part.community_of[local])
    if any(lab is None for lab in labels):
        raise PartitionError("merged partitions do not cover every node")
    return Partition.from_labels(labels)


def write_partition(part: Partition, ids: NodeIdMap, stream: TextIO) -> None:
    """Write ``label<TAB>community_id`` lines sorted by label.

    Ids are renumbered by first appearance in that order, so the file does not
    depend on how labels were mapped to internal node ids.
    """
    rows = sorted((ids.label(v), c) for v, c in enumerate(part.community_of))
    remap: dict[int, int] = {}
    stream.write("".join(f"{label}\t{remap.setdefault(c, len(remap))}\n" for label, c in rows))


def read_partition(stream: TextIO) -> dict[str, str]:
    """Read a partition file into ``{label: community}`` (ids kept as text)."""
    out: dict[str, str] = {}
    for lineno, raw in enumerate(stream, start=1):
        line = raw.rstrip("\r\n")
        if not line.strip() or line.lstrip().startswith("#"):
            continue
        fields = line.split("\t")
        if len(fields) != 2 or not fields[0] or not fields[1]:
            raise ParseError(f"expected '<label>\\t<community>', got {line!r}", lineno)
        if fields[0] in out:
            raise ParseError(f"label {fields[0]!r} listed twice", lineno)
        out[fields[0]] = fields[1]
    if not out:
        raise ParseError("partition file is empty")
    return out


def align_partitions(a: dict[str, str], b: dict[str, str]) -> tuple[Partition, Partition]:
    """Turn two label->community maps over the same labels into Partitions."""
    if a.keys() != b.keys():
        only_a = sorted(a.keys() - b.keys())[:5]
        only_b = sorted(b.keys() - a.keys())[:5]
        raise PartitionError(f"node sets differ (only in first: {only_a}, only in second: {only_b})")
    labels = sorted(a)
    return (
        Partition.from_labels([a[x] for x in labels]),
        Partition.from_labels([b[x] for x in labels]),
    )
