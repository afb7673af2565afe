# Closeness-quantile scoring of deletion sets
import logging
from dataclasses import dataclass
from typing import Optional, Sequence, Tuple

import networkx as nx
import numpy as np
from scipy.stats import rankdata

from config import RANKING_METHODS, config
from errors import DisconnectedGraphError, InputError, UnknownEdgeError
from graphs.core import EdgeSet, Graph

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class CentralityRanking:
    closeness: np.ndarray
    quantile: np.ndarray
    method: str = 'strict'


def closeness_centrality(g: Graph) -> np.ndarray:
    """c(v) = (n - 1) / sum_u d(v, u) on a connected graph"""
    if g.n < 2:
        raise InputError("closeness centrality needs at least two nodes")
    nxg = g.to_networkx()
    if not nx.is_connected(nxg):
        raise DisconnectedGraphError("closeness scoring is defined on the connected input graph")
    values = nx.closeness_centrality(nxg)
    return np.array([values[v] for v in range(g.n)])


def rank_to_quantile(closeness: Sequence[float], method: Optional[str] = None) -> CentralityRanking:
    """Turn closeness values into quantile scores in [0, 1].

    strict:     ordinal rank, ties by ascending node id, (n - 1 - i) / (n - 1)
    average:    same with tied nodes sharing their mean position
    percentile: share of nodes strictly less central, |{u : c(u) < c(v)}| / n
    """
    method = method or config.SCORE_RANKING
    if method not in RANKING_METHODS:
        raise InputError(f"unknown ranking method '{method}', expected one of {', '.join(RANKING_METHODS)}")
    closeness = np.asarray(closeness, dtype=float)
    n = len(closeness)
    if n < 2:
        raise InputError("ranking needs at least two nodes")

    if method == 'percentile':
        # 'min' rank on ascending closeness - 1 counts the strictly smaller values
        below = rankdata(closeness, method='min') - 1
        quantile = below / n
    else:
        # ordinal ranks of -c break ties by position, i.e. by node id
        position = rankdata(-closeness, method='ordinal' if method == 'strict' else 'average') - 1
        quantile = (n - 1 - position) / (n - 1)
    return CentralityRanking(closeness, quantile.astype(float), method)


def edge_set_score(ranking: CentralityRanking, s: EdgeSet) -> float:
    """Mean over edges of the mean endpoint quantile"""
    if not s:
        raise InputError("cannot score an empty edge set")
    n = len(ranking.quantile)
    for u, v in s:
        if not (0 <= u < n and 0 <= v < n):
            raise UnknownEdgeError((u, v))
    q = ranking.quantile
    return float(np.mean([(q[u] + q[v]) / 2 for u, v in s]))


def score_solution_family(g: Graph, solutions: Sequence[EdgeSet],
                          method: Optional[str] = None,
                          ranking: Optional[CentralityRanking] = None) -> Tuple[float, float, float]:
    """(min, mean, max) of the solution scores, unrounded"""
    if not solutions:
        raise InputError("cannot score an empty solution family")
    if ranking is None:
        ranking = rank_to_quantile(closeness_centrality(g), method)
    scores = np.array([edge_set_score(ranking, s) for s in solutions])
    logger.debug(f"Scored {len(solutions)} solution(s) with {ranking.method} ranking")
    return float(scores.min()), float(scores.mean()), float(scores.max())


def round_scores(scores: Tuple[float, float, float], digits: int = 2) -> Tuple[float, float, float]:
    """Presentation rounding for reports"""
    return tuple(round(x, digits) for x in scores)
