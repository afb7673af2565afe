# Exhaustive k-GRoDel solver for small instances
import itertools
import logging
import math
from collections import deque
from concurrent.futures import Executor, Future, ThreadPoolExecutor
from functools import partial
from typing import Any, Callable, Deque, Iterable, Iterator, List, Optional, Sequence, Tuple

from config import config
from errors import BudgetExceededError, InputError, UsageError
from graphs.core import EdgeSet, Graph
from measures.robustness import MeasureKind, measure_value

logger = logging.getLogger(__name__)

CHUNK_SIZE = 2048
IN_FLIGHT_PER_THREAD = 2


def _objective(g: Graph, kind: MeasureKind) -> float:
    """Value to maximize: -R_h for THR, R_f for FI"""
    value = measure_value(g, kind)
    return -value if kind is MeasureKind.TOTAL_HARMONIC_RESISTANCE else value


def _evaluate_chunk(g: Graph, kind: MeasureKind, chunk: Sequence[Tuple[int, ...]]) -> List[float]:
    values = []
    for combo in chunk:
        dropped = set(combo)
        kept = tuple(e for i, e in enumerate(g.edges) if i not in dropped)
        values.append(_objective(Graph(g.n, kept), kind))
    return values


def _chunks(iterable: Iterator, size: int) -> Iterator[Tuple]:
    while True:
        chunk = tuple(itertools.islice(iterable, size))
        if not chunk:
            return
        yield chunk


def _ordered_map(pool: Executor, fn: Callable, items: Iterable, window: int) -> Iterator[Tuple[Any, Any]]:
    """Yield (item, fn(item)) in input order with at most ``window`` items in flight"""
    pending: Deque[Tuple[Any, Future]] = deque()
    for item in items:
        pending.append((item, pool.submit(fn, item)))
        if len(pending) >= window:
            head, future = pending.popleft()
            yield head, future.result()
    while pending:
        head, future = pending.popleft()
        yield head, future.result()


def exact_optimum(g: Graph, k: int, measure: MeasureKind,
                  budget: Optional[int] = None,
                  tie_tol: Optional[float] = None,
                  threads: int = 1) -> Tuple[List[EdgeSet], float]:
    """Enumerate all k-subsets of edges; returns every optimal set and the optimal value.

    THR is minimized, FI maximized. Each set is sorted and so is the list.
    """
    kind = MeasureKind.parse(measure)
    if kind is MeasureKind.TOTAL_EFFECTIVE_RESISTANCE:
        raise UsageError("k-GRoDel is solved for thr or fi; rr is infinite once the graph splits")
    if k < 0 or k > g.m:
        raise InputError(f"k={k} must lie in [0, m={g.m}]")
    budget = config.EXACT_BUDGET if budget is None else budget
    tie_tol = config.TIE_TOL if tie_tol is None else tie_tol

    candidates = math.comb(g.m, k)
    if candidates > budget:
        raise BudgetExceededError(f"C({g.m}, {k}) = {candidates} subsets exceed the budget of {budget}")
    logger.info(f"Exact {kind.value}: enumerating {candidates} subsets of {g.m} edges on {threads} thread(s)")

    best = -math.inf
    optima: List[Tuple[float, Tuple[int, ...]]] = []

    def consume(chunk, values):
        nonlocal best, optima
        for combo, value in zip(chunk, values):
            if value > best + tie_tol:
                best = value
                optima = [(value, combo)]
            elif value >= best - tie_tol:
                optima.append((value, combo))
                best = max(best, value)

    chunks = _chunks(itertools.combinations(range(g.m), k), CHUNK_SIZE)
    if threads > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            # consumed in submission order, so the result is scheduling independent
            evaluate = partial(_evaluate_chunk, g, kind)
            for chunk, values in _ordered_map(pool, evaluate, chunks, IN_FLIGHT_PER_THREAD * threads):
                consume(chunk, values)
    else:
        for chunk in chunks:
            consume(chunk, _evaluate_chunk(g, kind, chunk))

    solutions = sorted(
        tuple(g.edges[i] for i in combo) for value, combo in optima if value >= best - tie_tol
    )
    optimum = -best if kind is MeasureKind.TOTAL_HARMONIC_RESISTANCE else best
    logger.info(f"Exact {kind.value}: {len(solutions)} optimal set(s), value {optimum:.10g}")
    return solutions, optimum


def exact_solve(g: Graph, k: int, measure: MeasureKind,
                budget: Optional[int] = None,
                tie_tol: Optional[float] = None,
                threads: int = 1) -> List[EdgeSet]:
    """All optimal k-edge deletion sets, ties within ``tie_tol``"""
    solutions, _ = exact_optimum(g, k, measure, budget, tie_tol, threads)
    return solutions
