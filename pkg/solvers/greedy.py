# Greedy k-GRoDel solvers (lazy and eager) for THR and FI
import heapq
import logging
from collections import OrderedDict
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from typing import Any, Callable, List, Optional, Sequence, Tuple

from config import config
from errors import InputError, UsageError
from graphs.core import Edge, Graph, find_bridges
from measures.robustness import (
    MeasureKind,
    augment_graph,
    forest_index_augmented,
    total_harmonic_resistance,
)
from solvers.losses import fi_loss, thr_candidate
from spectral.pseudoinverse import apply_edge_deletion, pseudoinverse, sherman_morrison_downdate

logger = logging.getLogger(__name__)


@dataclass
class SolveTrace:
    """Result of a greedy run; value_after[r] is the measure of G_{r+1}"""

    measure: MeasureKind
    k: int
    initial_value: float
    picked: List[Edge] = field(default_factory=list)
    value_after: List[float] = field(default_factory=list)
    loss: List[float] = field(default_factory=list)
    exhausted: bool = False
    evaluations: int = 0


@dataclass(order=True)
class LazyQueueEntry:
    """Heap entry; orders by largest cached loss, then smallest edge"""

    sort_key: Tuple[float, Edge] = field(init=False, repr=False)
    edge: Edge
    cached_loss: float
    round_stamp: int

    def __post_init__(self):
        self.sort_key = (-self.cached_loss, self.edge)


class _HarmonicObjective:
    """THR: L^+ of the current graph, losses by O(n^2) recomputation of R_h"""

    def __init__(self, g: Graph):
        self.graph = g
        self.state = pseudoinverse(g)
        self.value = total_harmonic_resistance(self.state)
        self.bridges = set(find_bridges(g))

    def candidates(self) -> Sequence[Edge]:
        return self.graph.edges

    def evaluate(self, e: Edge) -> Tuple[float, Any]:
        loss, new_state, g_after = thr_candidate(self.state, self.graph, e, self.bridges, self.value)
        return loss, (new_state, g_after)

    def apply(self, e: Edge, payload: Optional[Any]) -> float:
        if payload is None:
            new_state, g_after = apply_edge_deletion(self.state, self.graph, e, self.bridges)
        else:
            new_state, g_after = payload
        self.state, self.graph = new_state, g_after
        self.bridges = set(find_bridges(g_after))
        self.value = total_harmonic_resistance(new_state)
        return self.value


class _ForestObjective:
    """FI: L^+ of the augmented graph G*, losses in O(n) per edge.

    Deleting an original edge never disconnects G*, so every update is a
    Sherman-Morrison downdate.
    """

    def __init__(self, g: Graph):
        self.graph = g
        self.n = g.n
        self.state = pseudoinverse(augment_graph(g))
        self.value = forest_index_augmented(self.state, self.n)
        self.remaining = list(g.edges)

    def candidates(self) -> Sequence[Edge]:
        return self.remaining

    def evaluate(self, e: Edge) -> Tuple[float, Any]:
        return fi_loss(self.state, e[0], e[1], self.n), None

    def apply(self, e: Edge, payload: Optional[Any]) -> float:
        self.state = sherman_morrison_downdate(self.state, *e)
        self.remaining.remove(e)
        self.value = forest_index_augmented(self.state, self.n)
        return self.value


def _make_objective(g: Graph, kind: MeasureKind):
    if kind is MeasureKind.TOTAL_HARMONIC_RESISTANCE:
        return _HarmonicObjective(g)
    if kind is MeasureKind.FOREST_INDEX:
        return _ForestObjective(g)
    raise UsageError("k-GRoDel is solved for thr or fi; rr is infinite once the graph splits")


class _Evaluator:
    """Runs loss evaluations, optionally on a thread pool, keeping input order"""

    def __init__(self, objective, threads: int, cache_size: int):
        self.objective = objective
        self.pool = ThreadPoolExecutor(max_workers=threads) if threads > 1 else None
        self.cache: "OrderedDict[Edge, Any]" = OrderedDict()
        self.cache_size = cache_size
        self.batch_size = 8 * threads
        self.count = 0

    def evaluate(self, edges: Sequence[Edge]) -> List[float]:
        losses = []
        # batches bound the number of candidate states alive at once
        for start in range(0, len(edges), self.batch_size):
            losses.extend(self._evaluate_batch(edges[start:start + self.batch_size]))
        return losses

    def _evaluate_batch(self, edges: Sequence[Edge]) -> List[float]:
        mapper: Callable = self.pool.map if self.pool else map
        results = list(mapper(self.objective.evaluate, edges))
        self.count += len(edges)
        losses = []
        for e, (loss, payload) in zip(edges, results):
            if loss < -1e-9:
                logger.warning(f"Negative loss {loss:.3e} for edge {e}")
            if payload is not None and self.cache_size > 0:
                self.cache[e] = payload
                self.cache.move_to_end(e)
                while len(self.cache) > self.cache_size:
                    self.cache.popitem(last=False)
            losses.append(loss)
        return losses

    def take_payload(self, e: Edge) -> Optional[Any]:
        payload = self.cache.pop(e, None)
        self.cache.clear()
        return payload

    def close(self):
        if self.pool:
            self.pool.shutdown()


def _pick_eager(evaluator: _Evaluator, tie_tol: float) -> Tuple[Edge, float]:
    edges = list(evaluator.objective.candidates())
    losses = evaluator.evaluate(edges)
    best = max(losses)
    # smallest edge among the (near-)maximal losses
    for e, loss in zip(edges, losses):
        if loss >= best - tie_tol:
            return e, loss
    raise AssertionError("unreachable")


def _pick_lazy(heap: List[LazyQueueEntry], evaluator: _Evaluator,
               round_stamp: int, tie_tol: float) -> Tuple[Edge, float]:
    while True:
        top = heapq.heappop(heap)
        # gather every entry tied with the top within tolerance
        group = [top]
        while heap and heap[0].cached_loss >= top.cached_loss - tie_tol:
            group.append(heapq.heappop(heap))

        stale = [entry for entry in group if entry.round_stamp < round_stamp]
        if not stale:
            winner = min(group, key=lambda entry: entry.edge)
            for entry in group:
                if entry is not winner:
                    heapq.heappush(heap, entry)
            return winner.edge, winner.cached_loss

        fresh_losses = evaluator.evaluate([entry.edge for entry in stale])
        for entry in group:
            if entry.round_stamp == round_stamp:
                heapq.heappush(heap, entry)
        for entry, loss in zip(stale, fresh_losses):
            heapq.heappush(heap, LazyQueueEntry(entry.edge, loss, round_stamp))


def greedy_solve(g: Graph, k: int, measure: MeasureKind,
                 lazy: bool = True,
                 threads: int = 1,
                 strict: bool = True,
                 tie_tol: Optional[float] = None,
                 cache_size: Optional[int] = None) -> SolveTrace:
    """Delete k edges one at a time, each round taking the edge of largest loss.

    With ``lazy`` the candidates sit in a max-queue keyed by their most recent
    loss and only stale top entries are re-evaluated. Ties go to the smallest
    canonical edge.
    """
    kind = MeasureKind.parse(measure)
    tie_tol = config.TIE_TOL if tie_tol is None else tie_tol
    cache_size = config.STATE_CACHE if cache_size is None else cache_size
    if k < 0:
        raise InputError(f"k must be nonnegative, got {k}")
    exhausted = False
    if k > g.m:
        if strict:
            raise InputError(f"k={k} exceeds the edge count m={g.m}")
        logger.warning(f"k={k} exceeds m={g.m}; deleting all edges")
        k, exhausted = g.m, True

    objective = _make_objective(g, kind)
    trace = SolveTrace(kind, k, objective.value, exhausted=exhausted)
    evaluator = _Evaluator(objective, threads, cache_size)
    algorithm = 'lazy' if lazy else 'eager'
    logger.info(f"Greedy {kind.value} ({algorithm}): n={g.n}, m={g.m}, k={k}, initial={objective.value:.10g}")

    try:
        heap: List[LazyQueueEntry] = []
        if lazy and k > 0:
            edges = list(objective.candidates())
            heap = [LazyQueueEntry(e, loss, 0) for e, loss in zip(edges, evaluator.evaluate(edges))]
            heapq.heapify(heap)

        previous = objective.value
        for r in range(k):
            if lazy:
                edge, loss = _pick_lazy(heap, evaluator, r, tie_tol)
            else:
                edge, loss = _pick_eager(evaluator, tie_tol)
            value = objective.apply(edge, evaluator.take_payload(edge))
            if abs(abs(value - previous) - loss) > config.TOL * max(1.0, abs(value)):
                logger.warning(f"Round {r + 1}: loss {loss:.10g} disagrees with value change {value - previous:.10g}")
            previous = value
            trace.picked.append(edge)
            trace.value_after.append(value)
            trace.loss.append(loss)
            logger.info(f"Round {r + 1}/{k}: deleted {edge}, loss {loss:.10g}, value {value:.10g}")
    finally:
        evaluator.close()

    trace.evaluations = evaluator.count
    return trace


def eager_greedy_solve(g: Graph, k: int, measure: MeasureKind, threads: int = 1,
                       strict: bool = True, tie_tol: Optional[float] = None) -> SolveTrace:
    """Reference greedy evaluating every remaining edge in every round"""
    return greedy_solve(g, k, measure, lazy=False, threads=threads, strict=strict, tie_tol=tie_tol)
