# Laplacian pseudoinverse and its maintenance under edge deletion
import logging
from dataclasses import dataclass
from typing import Optional, Tuple

import numpy as np
from scipy.linalg import eigh

from config import config
from errors import BridgeEdgeError, GraphError, InputError, UnknownEdgeError
from graphs.core import (
    ComponentMap,
    Edge,
    EdgeSet,
    Graph,
    canonical_edge,
    connected_components,
    find_bridges,
    remove_edge,
)
from spectral.laplacian import DenseSymMatrix, laplacian

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class PseudoinverseState:
    """L^+ of the current graph together with its component map.

    linv is block diagonal up to permutation: entries across components are 0.
    """

    linv: DenseSymMatrix
    comps: ComponentMap

    @property
    def n(self) -> int:
        return self.linv.shape[0]


def _block_pinv(block: np.ndarray, cutoff: float) -> np.ndarray:
    """Moore-Penrose pseudoinverse of one symmetric Laplacian block"""
    if block.shape[0] == 1:
        return np.zeros((1, 1))
    eigvals, eigvecs = eigh(block)
    keep = eigvals > cutoff * max(eigvals[-1], 0.0)
    inv = np.zeros_like(eigvals)
    inv[keep] = 1.0 / eigvals[keep]
    pinv = (eigvecs * inv) @ eigvecs.T
    return (pinv + pinv.T) / 2


def pseudoinverse_from_laplacian(lap: DenseSymMatrix, comps: ComponentMap,
                                 cutoff: Optional[float] = None) -> PseudoinverseState:
    """Assemble L^+ blockwise from the per-component pseudoinverses"""
    cutoff = config.EIG_CUTOFF if cutoff is None else cutoff
    n = lap.shape[0]
    linv = np.zeros((n, n))
    for c in range(comps.num_components):
        members = comps.members(c)
        idx = np.ix_(members, members)
        linv[idx] = _block_pinv(lap[idx], cutoff)
    return PseudoinverseState(linv, comps)


def pseudoinverse(g: Graph, cutoff: Optional[float] = None) -> PseudoinverseState:
    return pseudoinverse_from_laplacian(laplacian(g), connected_components(g), cutoff)


def effective_resistance(st: PseudoinverseState, u: int, v: int) -> float:
    """r(u, v) from L^+; +inf across components"""
    if u == v:
        raise InputError(f"effective resistance needs two distinct nodes, got {u} twice")
    if not st.comps.same_component(u, v):
        return float('inf')
    linv = st.linv
    return float(linv[u, u] - 2 * linv[u, v] + linv[v, v])


def sherman_morrison_downdate(st: PseudoinverseState, a: int, b: int,
                              bridge_tol: Optional[float] = None) -> PseudoinverseState:
    """L^+ after deleting the non-bridge edge (a, b).

    L' = L - d d^T with d = e_a - e_b, so L'^+ = L^+ + (L^+ d)(L^+ d)^T / (1 - r(a, b)).
    """
    bridge_tol = config.BRIDGE_TOL if bridge_tol is None else bridge_tol
    x = st.linv[:, a] - st.linv[:, b]
    denominator = 1.0 - (x[a] - x[b])
    if abs(denominator) < bridge_tol:
        raise BridgeEdgeError(
            f"edge ({a}, {b}) is a bridge (1 - r = {denominator:.3e}); use bridge_split_update"
        )
    linv = st.linv + np.outer(x, x) / denominator
    return PseudoinverseState((linv + linv.T) / 2, st.comps)


def bridge_split_update(st: PseudoinverseState, g_after: Graph, a: int, b: int,
                        cutoff: Optional[float] = None) -> PseudoinverseState:
    """L^+ after deleting the bridge (a, b): recompute the two new blocks only,
    every other block is copied unchanged.
    """
    cutoff = config.EIG_CUTOFF if cutoff is None else cutoff
    comps = connected_components(g_after)
    if comps.same_component(a, b):
        raise GraphError(f"edge ({a}, {b}) was not a bridge: endpoints still connected")

    old_block = st.comps.members(st.comps.label[a])
    linv = st.linv.copy()
    linv[np.ix_(old_block, old_block)] = 0.0

    lap = laplacian(g_after)
    sizes = []
    for endpoint in (a, b):
        members = comps.members(comps.label[endpoint])
        idx = np.ix_(members, members)
        linv[idx] = _block_pinv(lap[idx], cutoff)
        sizes.append(len(members))

    logger.debug(f"Bridge ({a}, {b}) split a block of {len(old_block)} into {sizes[0]} + {sizes[1]}")
    return PseudoinverseState(linv, comps)


def apply_edge_deletion(st: PseudoinverseState, g: Graph, e: Edge,
                        bridges: Optional[EdgeSet] = None) -> Tuple[PseudoinverseState, Graph]:
    """Delete ``e`` from ``g`` and update L^+ on the matching path.

    Bridges are classified combinatorially, never from r(a, b) ~ 1.
    """
    e = canonical_edge(*e)
    if not g.has_edge(*e):
        raise UnknownEdgeError(e)
    if bridges is None:
        bridges = find_bridges(g)
    g_after = remove_edge(g, e)
    if e in bridges:
        new_state = bridge_split_update(st, g_after, *e)
    else:
        new_state = sherman_morrison_downdate(st, *e)
    return new_state, g_after


def moore_penrose_residuals(lap: DenseSymMatrix, linv: DenseSymMatrix) -> Tuple[float, float]:
    """max|L L^+ L - L| and max|L^+ L L^+ - L^+|"""
    first = np.max(np.abs(lap @ linv @ lap - lap)) if lap.size else 0.0
    second = np.max(np.abs(linv @ lap @ linv - linv)) if lap.size else 0.0
    return float(first), float(second)
