# Deterministic generators for the graph families of the exact-solution study
import logging

import networkx as nx

from errors import GraphError
from graphs.core import Graph, from_networkx

logger = logging.getLogger(__name__)


def gen_grid(rows: int, cols: int) -> Graph:
    """rows x cols 4-neighbour lattice, node id = row * cols + col"""
    if rows < 1 or cols < 1:
        raise GraphError(f"grid dimensions must be positive, got {rows}x{cols}")
    # grid_2d_graph labels nodes (row, col); sorted order is row-major
    return from_networkx(nx.grid_2d_graph(rows, cols))


def gen_hotdog(rows: int, cols: int) -> Graph:
    """Grid with one pendant node on the middle row of each outer column.

    The left pendant gets id rows*cols, the right one rows*cols + 1.
    """
    if rows < 1 or cols < 1:
        raise GraphError(f"hotdog dimensions must be positive, got {rows}x{cols}")
    if rows % 2 == 0:
        raise GraphError(f"hotdog needs an odd row count for a middle row, got {rows}")
    grid = gen_grid(rows, cols)
    middle = rows // 2
    left, right = rows * cols, rows * cols + 1
    pendants = [(middle * cols, left), (middle * cols + cols - 1, right)]
    return Graph.from_pairs(rows * cols + 2, list(grid.edges) + pendants)


def gen_barabasi_albert(k_attach: int, n_max: int, seed: int) -> Graph:
    """Preferential attachment: each new node attaches to k_attach existing nodes"""
    if k_attach < 1 or n_max <= k_attach:
        raise GraphError(f"need 1 <= k_attach < n_max, got k_attach={k_attach}, n_max={n_max}")
    return from_networkx(nx.barabasi_albert_graph(n_max, k_attach, seed=seed))


def gen_watts_strogatz(n: int, deg: int, p: float, seed: int) -> Graph:
    """Small-world ring lattice with rewiring.

    ``deg`` counts ring neighbours on each side, so lattice degree is 2*deg.
    """
    if deg < 1 or n <= deg:
        raise GraphError(f"need 1 <= deg < n, got n={n}, deg={deg}")
    if not 0.0 <= p <= 1.0:
        raise GraphError(f"rewiring probability must be in [0, 1], got {p}")
    if 2 * deg >= n:
        # every node already reaches all others within deg steps on the ring
        return from_networkx(nx.complete_graph(n))
    return from_networkx(nx.watts_strogatz_graph(n, 2 * deg, p, seed=seed))
