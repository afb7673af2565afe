# Robustness measures: total effective resistance, forest index, total harmonic resistance
import logging
from enum import Enum

import numpy as np

from errors import DimensionMismatchError, DisconnectedGraphError, InputError
from graphs.core import Graph
from spectral.laplacian import DenseSymMatrix, forest_matrix
from spectral.pseudoinverse import PseudoinverseState, pseudoinverse

logger = logging.getLogger(__name__)


class MeasureKind(str, Enum):
    TOTAL_EFFECTIVE_RESISTANCE = 'rr'
    FOREST_INDEX = 'fi'
    TOTAL_HARMONIC_RESISTANCE = 'thr'

    @classmethod
    def parse(cls, value) -> "MeasureKind":
        try:
            return cls(value.lower() if isinstance(value, str) else value)
        except ValueError:
            raise InputError(f"unknown measure '{value}', expected one of rr, fi, thr")


def _pairwise_upper(matrix: DenseSymMatrix) -> np.ndarray:
    """Values m[u,u] - 2 m[u,v] + m[v,v] for all u < v, flattened"""
    diag = np.diag(matrix)
    distances = diag[:, None] + diag[None, :] - 2 * matrix
    return distances[np.triu_indices(matrix.shape[0], k=1)]


def total_effective_resistance(st: PseudoinverseState) -> float:
    """R_r = n * tr(L^+), connected graphs only"""
    if st.comps.num_components != 1:
        raise DisconnectedGraphError(
            f"total effective resistance is infinite on a graph with {st.comps.num_components} components"
        )
    return float(st.n * np.trace(st.linv))


def total_effective_resistance_pairwise(st: PseudoinverseState) -> float:
    if st.comps.num_components != 1:
        raise DisconnectedGraphError("total effective resistance is infinite on a disconnected graph")
    return float(np.sum(_pairwise_upper(st.linv)))


def total_harmonic_resistance(st: PseudoinverseState) -> float:
    """R_h = sum over u < v of 1 / r(u, v); pairs in different components add 0.

    Only same-component pairs are visited, so no infinite terms appear.
    """
    total = 0.0
    for c in np.flatnonzero(st.comps.sizes > 1):
        members = st.comps.members(c)
        block = st.linv[np.ix_(members, members)]
        # numpy's pairwise summation keeps O(n^2) term counts accurate
        total += float(np.sum(1.0 / _pairwise_upper(block)))
    return total


def forest_distance(omega: DenseSymMatrix, u: int, v: int) -> float:
    if u == v:
        raise InputError(f"forest distance needs two distinct nodes, got {u} twice")
    return float(omega[u, u] - 2 * omega[u, v] + omega[v, v])


def forest_index(g: Graph) -> float:
    """R_f = n * tr(Omega) - n"""
    omega = forest_matrix(g)
    return float(g.n * np.trace(omega) - g.n)


def forest_index_pairwise(omega: DenseSymMatrix) -> float:
    return float(np.sum(_pairwise_upper(omega)))


def augment_graph(g: Graph) -> Graph:
    """G plus a universal vertex u* = n adjacent to every original node"""
    star = [(v, g.n) for v in range(g.n)]
    return Graph.from_pairs(g.n + 1, list(g.edges) + star)


def forest_index_augmented(st_star: PseudoinverseState, n: int) -> float:
    """R_f(G) = n * tr(L^+_{G*}) - (n + 1) * L^+_{G*}[u*, u*] with u* = n"""
    if st_star.n != n + 1:
        raise DimensionMismatchError(
            f"augmented pseudoinverse has dimension {st_star.n}, expected {n + 1}"
        )
    linv = st_star.linv
    return float(n * np.trace(linv) - (n + 1) * linv[n, n])


def measure_value(g: Graph, kind: MeasureKind) -> float:
    """Evaluate a measure from scratch"""
    kind = MeasureKind.parse(kind)
    if kind is MeasureKind.FOREST_INDEX:
        return forest_index(g)
    st = pseudoinverse(g)
    if kind is MeasureKind.TOTAL_HARMONIC_RESISTANCE:
        return total_harmonic_resistance(st)
    return total_effective_resistance(st)
