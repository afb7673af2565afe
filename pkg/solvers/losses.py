# Marginal losses of deleting one edge, for THR and FI
import logging
from typing import Collection, Optional, Tuple

import numpy as np

from config import config
from errors import InputError, UnknownEdgeError
from graphs.core import Edge, Graph, canonical_edge
from measures.robustness import total_harmonic_resistance
from spectral.pseudoinverse import PseudoinverseState, apply_edge_deletion

logger = logging.getLogger(__name__)


def thr_candidate(st: PseudoinverseState, g: Graph, e: Edge,
                  bridges: Optional[Collection[Edge]] = None,
                  current_value: Optional[float] = None) -> Tuple[float, PseudoinverseState, Graph]:
    """Loss of deleting ``e`` plus the updated state and graph, for reuse"""
    e = canonical_edge(*e)
    if not g.has_edge(*e):
        raise UnknownEdgeError(e)
    if current_value is None:
        current_value = total_harmonic_resistance(st)
    new_state, g_after = apply_edge_deletion(st, g, e, bridges)
    return current_value - total_harmonic_resistance(new_state), new_state, g_after


def thr_loss(st: PseudoinverseState, g: Graph, e: Edge,
             bridges: Optional[Collection[Edge]] = None,
             current_value: Optional[float] = None) -> float:
    """R_h(G) - R_h(G - e), always >= 0"""
    loss, _, _ = thr_candidate(st, g, e, bridges, current_value)
    return loss


def fi_loss(st_star: PseudoinverseState, a: int, b: int, n: int) -> float:
    """R_f(G - (a, b)) - R_f(G) in O(n) from the augmented graph's L^+.

    u* keeps a second path between a and b, so 1 - r_{G*}(a, b) stays positive.
    """
    if a == n or b == n:
        raise InputError(f"edge ({a}, {b}) touches the universal vertex {n}")
    if a == b:
        raise InputError(f"edge ({a}, {b}) is a self-loop")
    linv = st_star.linv
    column_diff = linv[:, a] - linv[:, b]
    denominator = 1.0 - (column_diff[a] - column_diff[b])
    if denominator <= config.FI_MIN_DENOMINATOR:
        raise InputError(f"augmented resistance of ({a}, {b}) is {1 - denominator:.6f}, expected < 1")
    squared_norm = float(np.dot(column_diff, column_diff))
    universal_term = float(column_diff[n]) ** 2
    return (n * squared_norm - (n + 1) * universal_term) / denominator
