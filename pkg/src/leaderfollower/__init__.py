"""Leader-follower community detection with a spectral clustering baseline."""

from .centrality import bfs_distances, distance_centrality, distance_centrality_all
from .errors import (
    ConvergenceError,
    DisconnectedGraphError,
    GenerationError,
    GraphError,
    LeaderFollowerError,
    ParseError,
    PartitionError,
)
from .graph import Graph, NodeIdMap, connected_components, from_edges, load_edge_list, write_edge_list
from .leader_follower import RoleLabeling, assign_communities, classify_roles, detect
from .metrics import ScoreReport, pair_error, score
from .partition import Partition, read_partition, write_partition
from .planted import PlantedInstance, PlantedSpec, generate, validate
from .spectral import laplacian, spectral_cluster

__version__ = "0.1.0"
