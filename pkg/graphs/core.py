# Graph representation, connectivity and bridges
import logging
from dataclasses import dataclass, field
from functools import cached_property
from typing import Dict, Iterable, List, Tuple

import networkx as nx
import numpy as np
from scipy.sparse import coo_matrix
from scipy.sparse.csgraph import connected_components as _csgraph_components

from errors import GraphError, UnknownEdgeError

logger = logging.getLogger(__name__)

Edge = Tuple[int, int]
EdgeSet = Tuple[Edge, ...]


def canonical_edge(u: int, v: int) -> Edge:
    return (u, v) if u < v else (v, u)


def canonical_edge_set(edges: Iterable[Edge]) -> EdgeSet:
    """Canonical (u < v), deduplicated and sorted form of an edge collection"""
    return tuple(sorted({canonical_edge(int(u), int(v)) for u, v in edges}))


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph on nodes 0..n-1 with a canonical edge list.

    Immutable; every mutating operation returns a new Graph.
    """

    n: int
    edges: EdgeSet = field(default=())

    def __post_init__(self):
        if self.n < 0:
            raise GraphError(f"node count must be nonnegative, got {self.n}")
        previous = None
        for u, v in self.edges:
            if u == v:
                raise GraphError(f"self-loop at node {u}")
            if not 0 <= u < v < self.n:
                raise GraphError(f"edge ({u}, {v}) is not canonical for n={self.n}")
            if previous is not None and (u, v) <= previous:
                raise GraphError("edge list must be sorted and free of duplicates")
            previous = (u, v)

    @classmethod
    def from_pairs(cls, n: int, pairs: Iterable[Edge]) -> "Graph":
        """Build a graph from arbitrary pairs, dropping self-loops and merging duplicates"""
        return cls(n, canonical_edge_set((u, v) for u, v in pairs if u != v))

    @property
    def m(self) -> int:
        return len(self.edges)

    @cached_property
    def adjacency(self) -> Tuple[Tuple[int, ...], ...]:
        neighbors: List[List[int]] = [[] for _ in range(self.n)]
        for u, v in self.edges:
            neighbors[u].append(v)
            neighbors[v].append(u)
        return tuple(tuple(sorted(nbrs)) for nbrs in neighbors)

    @cached_property
    def edge_index(self) -> Dict[Edge, int]:
        return {e: i for i, e in enumerate(self.edges)}

    @cached_property
    def edge_array(self) -> np.ndarray:
        """Edges as an (m, 2) integer array"""
        return np.array(self.edges, dtype=np.int64).reshape(-1, 2)

    def degrees(self) -> np.ndarray:
        return np.array([len(nbrs) for nbrs in self.adjacency], dtype=np.int64)

    def has_edge(self, u: int, v: int) -> bool:
        return canonical_edge(u, v) in self.edge_index

    def to_networkx(self) -> nx.Graph:
        nxg = nx.Graph()
        nxg.add_nodes_from(range(self.n))
        nxg.add_edges_from(self.edges)
        return nxg


def from_networkx(nxg: nx.Graph) -> Graph:
    """Convert a networkx graph, relabelling nodes 0..n-1 in sorted node order"""
    nodes = sorted(nxg.nodes())
    index = {node: i for i, node in enumerate(nodes)}
    return Graph.from_pairs(len(nodes), ((index[u], index[v]) for u, v in nxg.edges()))


@dataclass(frozen=True)
class ComponentMap:
    """Node-to-component labelling; component ids ordered by smallest member"""

    label: np.ndarray
    sizes: np.ndarray

    @property
    def num_components(self) -> int:
        return len(self.sizes)

    def members(self, component: int) -> np.ndarray:
        return np.flatnonzero(self.label == component)

    def same_component(self, u: int, v: int) -> bool:
        return bool(self.label[u] == self.label[v])


def connected_components(g: Graph) -> ComponentMap:
    if g.n == 0:
        return ComponentMap(np.zeros(0, dtype=np.int64), np.zeros(0, dtype=np.int64))
    rows, cols = g.edge_array[:, 0], g.edge_array[:, 1]
    adjacency = coo_matrix((np.ones(g.m), (rows, cols)), shape=(g.n, g.n))
    _, raw = _csgraph_components(adjacency, directed=False)

    # Relabel so component ids follow the order of their smallest member
    _, first_seen = np.unique(raw, return_index=True)
    order = np.argsort(first_seen)
    relabel = np.empty_like(order)
    relabel[order] = np.arange(len(order))
    label = relabel[raw].astype(np.int64)
    sizes = np.bincount(label, minlength=len(order)).astype(np.int64)
    return ComponentMap(label, sizes)


def largest_connected_component(g: Graph) -> Tuple[Graph, Dict[int, int]]:
    """Induced subgraph on the largest component, ids compacted to 0..n'-1.

    Ties between equal-size components go to the one holding the smallest id.
    """
    if g.n == 0:
        raise GraphError("graph has no nodes")
    comps = connected_components(g)
    if comps.num_components == 1:
        return g, {v: v for v in range(g.n)}

    # argmax returns the first maximum, i.e. the component with the smallest member
    keep = int(np.argmax(comps.sizes))
    members = comps.members(keep)
    mapping = {int(old): new for new, old in enumerate(members)}
    edges = [(mapping[u], mapping[v]) for u, v in g.edges if u in mapping]
    logger.info(f"Largest component keeps {len(members)}/{g.n} nodes, {len(edges)}/{g.m} edges")
    return Graph(len(members), tuple(edges)), mapping


def find_bridges(g: Graph) -> EdgeSet:
    """Bridges via iterative DFS low-link (Tarjan), independent of numerics"""
    disc = [-1] * g.n
    low = [0] * g.n
    bridges = []
    timer = 0
    adjacency = g.adjacency

    for root in range(g.n):
        if disc[root] != -1:
            continue
        disc[root] = low[root] = timer
        timer += 1
        # frames: (node, parent, next neighbour position)
        stack = [(root, -1, 0)]
        while stack:
            node, parent, pos = stack[-1]
            nbrs = adjacency[node]
            if pos < len(nbrs):
                stack[-1] = (node, parent, pos + 1)
                child = nbrs[pos]
                if child == parent:
                    continue
                if disc[child] == -1:
                    disc[child] = low[child] = timer
                    timer += 1
                    stack.append((child, node, 0))
                else:
                    low[node] = min(low[node], disc[child])
            else:
                stack.pop()
                if parent != -1:
                    low[parent] = min(low[parent], low[node])
                    if low[node] > disc[parent]:
                        bridges.append(canonical_edge(parent, node))

    return tuple(sorted(bridges))


def remove_edge(g: Graph, e: Edge) -> Graph:
    e = canonical_edge(*e)
    if e not in g.edge_index:
        raise UnknownEdgeError(e)
    return Graph(g.n, tuple(x for x in g.edges if x != e))


def remove_edges(g: Graph, edges: Iterable[Edge]) -> Graph:
    drop = set()
    for e in edges:
        e = canonical_edge(*e)
        if e not in g.edge_index:
            raise UnknownEdgeError(e)
        drop.add(e)
    return Graph(g.n, tuple(x for x in g.edges if x not in drop))


def relabel_edges(edges: Iterable[Edge], mapping: Dict[int, int]) -> List[Edge]:
    """Translate edges through a node map, keeping their order.

    An endpoint missing from ``mapping`` raises UnknownEdgeError with the edge
    as given.
    """
    relabelled = []
    for u, v in edges:
        if u not in mapping or v not in mapping:
            raise UnknownEdgeError(canonical_edge(u, v))
        relabelled.append(canonical_edge(mapping[u], mapping[v]))
    return relabelled


def invert_mapping(mapping: Dict[int, int]) -> Dict[int, int]:
    return {new: old for old, new in mapping.items()}


def preprocess(g: Graph) -> Tuple[Graph, Dict[int, int]]:
    """Benchmark preprocessing: keep only the largest connected component"""
    return largest_connected_component(g)
