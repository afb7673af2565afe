# Laplacian and forest matrix construction, dense matrix dumps
import io
import logging

import numpy as np
from scipy.linalg import cho_factor, cho_solve

from graphs.core import Graph
from utils.file_manager import file_manager

logger = logging.getLogger(__name__)

# Dense symmetric matrices (L, L^+, Omega) are plain float64 ndarrays
DenseSymMatrix = np.ndarray


def laplacian(g: Graph) -> DenseSymMatrix:
    """L = D - A"""
    lap = np.zeros((g.n, g.n))
    if g.m:
        u, v = g.edge_array[:, 0], g.edge_array[:, 1]
        lap[u, v] = -1.0
        lap[v, u] = -1.0
        np.fill_diagonal(lap, g.degrees())
    return lap


def forest_matrix(g: Graph) -> DenseSymMatrix:
    """Omega = (L + I)^-1, via Cholesky since L + I is SPD"""
    shifted = laplacian(g) + np.eye(g.n)
    omega = cho_solve(cho_factor(shifted, lower=True), np.eye(g.n))
    return (omega + omega.T) / 2


def format_matrix(matrix: DenseSymMatrix) -> str:
    """Row-major dump, one row per line, 17 significant digits"""
    buffer = io.StringIO()
    np.savetxt(buffer, np.atleast_2d(matrix), fmt='%.17g', delimiter=' ')
    return buffer.getvalue()


def write_matrix(matrix: DenseSymMatrix, path: str) -> str:
    return file_manager.write_text(path, format_matrix(matrix))
