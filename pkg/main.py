import argparse
import logging
import os
import sys
import time
from contextlib import contextmanager
from typing import Dict, List, Optional, Tuple

# Import configuration
from config import config

from data_validation.report import GraphMeta, MeasureReport, RunReport, ScoreSummary, TraceReport
from errors import GrodelError, InputError, UsageError
from graphs.core import Graph, invert_mapping, preprocess, relabel_edges, remove_edges
from graphs.edge_list import format_edge_list, read_edge_list, read_edge_set
from graphs.generators import gen_barabasi_albert, gen_grid, gen_hotdog, gen_watts_strogatz
from measures.robustness import MeasureKind, measure_value
from scoring.centrality import closeness_centrality, rank_to_quantile, round_scores, score_solution_family
from solvers.exact import exact_optimum
from solvers.greedy import greedy_solve
from utils.dot import format_dot
from utils.file_manager import file_manager

logger = logging.getLogger(__name__)

ALGORITHMS = ('exact', 'greedy', 'greedy-eager')


class _Parser(argparse.ArgumentParser):
    """argparse exits with 2 on bad usage; usage errors here map to exit code 1"""

    def error(self, message):
        raise UsageError(f"{self.prog}: {message}")


@contextmanager
def _timed(timings: Dict[str, float], phase: str):
    start = time.perf_counter()
    yield
    timings[phase] = round((time.perf_counter() - start) * 1000.0, 3)


def _emit(text: str, out: Optional[str]) -> None:
    if out:
        file_manager.write_text(out, text)
    else:
        sys.stdout.write(text)


def _load_graph(path: str, use_lcc: bool, timings: Dict[str, float]) -> Tuple[Graph, Dict[int, int]]:
    """Read an edge list; returns the working graph and the input-to-working id map"""
    with _timed(timings, 'load'):
        graph = read_edge_list(path)
        if use_lcc:
            return preprocess(graph)
    return graph, {v: v for v in range(graph.n)}


def _parse_grid(value: Optional[str]):
    if value is None:
        return None
    try:
        rows, cols = (int(x) for x in value.lower().split('x'))
    except ValueError:
        raise UsageError(f"--grid expects ROWSxCOLS, got '{value}'")
    return rows, cols


def cmd_generate(args) -> int:
    family = args.family
    if family == 'grid':
        graph = gen_grid(args.rows, args.cols)
    elif family == 'hotdog':
        graph = gen_hotdog(args.rows, args.cols)
    elif family == 'ba':
        graph = gen_barabasi_albert(args.k_attach, args.n_max, args.seed)
    else:
        graph = gen_watts_strogatz(args.n, args.deg, args.p, args.seed)
    logger.info(f"Generated {family}: n={graph.n}, m={graph.m}")
    _emit(format_edge_list(graph), args.out)
    return 0


def cmd_measure(args) -> int:
    timings: Dict[str, float] = {}
    kind = MeasureKind.parse(args.measure)
    graph, mapping = _load_graph(args.input, not args.no_lcc, timings)
    meta = GraphMeta(n=graph.n, m=graph.m, source=args.input)
    deleted = []
    if args.delete:
        deleted = read_edge_set(args.delete, graph, mapping)
        graph = remove_edges(graph, deleted)
        logger.info(f"Deleted {len(deleted)} edge(s) from {args.delete}")
    with _timed(timings, 'measure'):
        value = measure_value(graph, kind)
    print(repr(value))

    report = MeasureReport(
        graph=meta,
        measure=kind.value,
        value=value,
        deleted=sorted(relabel_edges(deleted, invert_mapping(mapping))),
        tol=args.tol,
        timings_ms=timings,
    )
    out = args.out or file_manager.create_safe_filename(os.path.basename(args.input)) + '.measure.json'
    file_manager.write_text(out, report.model_dump_json(indent=2) + '\n')
    return 0


def cmd_solve(args) -> int:
    timings: Dict[str, float] = {}
    kind = MeasureKind.parse(args.measure)
    if kind is MeasureKind.TOTAL_EFFECTIVE_RESISTANCE:
        raise UsageError("solve supports --measure thr or fi")
    k = config.DEFAULT_K if args.k is None else args.k
    threads = config.get_threads(args.threads)
    graph, mapping = _load_graph(args.input, not args.no_lcc, timings)
    if k > graph.m:
        raise InputError(f"k={k} exceeds the edge count m={graph.m}")
    # reports use the ids of the input file
    input_ids = invert_mapping(mapping)

    with _timed(timings, 'initial'):
        initial_value = measure_value(graph, kind)

    trace_report = None
    with _timed(timings, 'solve'):
        if args.algo == 'exact':
            solutions, _ = exact_optimum(graph, k, kind, tie_tol=config.TIE_TOL, threads=threads)
        else:
            trace = greedy_solve(graph, k, kind, lazy=args.algo == 'greedy', threads=threads)
            solutions = [tuple(sorted(trace.picked))]
            trace_report = TraceReport(
                picked=relabel_edges(trace.picked, input_ids),
                value_after=trace.value_after,
                loss=trace.loss,
                exhausted=trace.exhausted,
                evaluations=trace.evaluations,
            )

    scores = None
    if args.score and k > 0:
        with _timed(timings, 'score'):
            method = args.ranking or config.SCORE_RANKING
            summary = round_scores(score_solution_family(graph, solutions, method))
            scores = ScoreSummary(min=summary[0], mean=summary[1], max=summary[2], ranking=method)

    report = RunReport(
        graph=GraphMeta(n=graph.n, m=graph.m, source=args.input),
        measure=kind.value,
        algorithm=args.algo,
        k=k,
        initial_value=initial_value,
        solutions=[sorted(relabel_edges(s, input_ids)) for s in solutions],
        trace=trace_report,
        scores=scores,
        seed=args.seed,
        tol=args.tol,
        timings_ms=timings,
    )
    _emit(report.model_dump_json(indent=2) + '\n', args.out)
    return 0


def cmd_score(args) -> int:
    graph, mapping = _load_graph(args.input, not args.no_lcc, {})
    edge_set = read_edge_set(args.edges, graph, mapping)
    method = args.ranking or config.SCORE_RANKING
    ranking = rank_to_quantile(closeness_centrality(graph), method)
    lo, mean, hi = score_solution_family(graph, [edge_set], ranking=ranking)
    print(f"{lo!r} {mean!r} {hi!r}")
    return 0


def cmd_export_dot(args) -> int:
    graph, mapping = _load_graph(args.input, not args.no_lcc, {})
    edge_set = read_edge_set(args.edges, graph, mapping) if args.edges else ()
    input_ids = invert_mapping(mapping)
    text = format_dot(graph, edge_set, _parse_grid(args.grid), node_ids=[input_ids[v] for v in range(graph.n)])
    out = args.out or file_manager.create_safe_filename(os.path.basename(args.input)) + '.dot'
    file_manager.write_text(out, text)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog='grodel', description='Edge deletion attacks on graph robustness (k-GRoDel)')
    parser.add_argument('-v', '--verbose', action='store_true', help='debug logging')
    sub = parser.add_subparsers(dest='command', required=True, parser_class=_Parser)

    gen = sub.add_parser('generate', help='write a generated graph as an edge list')
    gen.add_argument('family', choices=('grid', 'hotdog', 'ba', 'ws'))
    gen.add_argument('--rows', type=int, default=3)
    gen.add_argument('--cols', type=int, default=5)
    gen.add_argument('--k-attach', type=int, default=3)
    gen.add_argument('--n-max', type=int, default=18)
    gen.add_argument('--n', type=int, default=16)
    gen.add_argument('--deg', type=int, default=3)
    gen.add_argument('--p', type=float, default=0.7)
    gen.add_argument('--seed', type=int, default=config.SEED)
    gen.add_argument('--out')
    gen.set_defaults(handler=cmd_generate)

    measure = sub.add_parser('measure', help='print a robustness measure of a graph')
    measure.add_argument('input')
    measure.add_argument('--measure', default='thr', choices=('thr', 'fi', 'rr'))
    measure.add_argument('--no-lcc', action='store_true', help='skip largest-component extraction')
    measure.add_argument('--tol', type=float, default=config.TOL)
    measure.add_argument('--delete', metavar='EDGES', help='edge-set file (input ids) to delete before measuring')
    measure.add_argument('--out', help='JSON report path (default <input>.measure.json)')
    measure.set_defaults(handler=cmd_measure)

    solve = sub.add_parser('solve', help='find k edges whose deletion hurts robustness most')
    solve.add_argument('input')
    solve.add_argument('--measure', default='thr', choices=('thr', 'fi'))
    solve.add_argument('--algo', default='greedy', choices=ALGORITHMS)
    solve.add_argument('-k', type=int, default=None, help=f'budget (default {config.DEFAULT_K})')
    solve.add_argument('--seed', type=int, default=config.SEED)
    solve.add_argument('--tol', type=float, default=config.TOL)
    solve.add_argument('--threads', type=int, default=None, help='worker threads (env GRODEL_THREADS)')
    solve.add_argument('--score', action='store_true', help='add closeness-quantile scores')
    solve.add_argument('--ranking', choices=('strict', 'average', 'percentile'))
    solve.add_argument('--no-lcc', action='store_true', help='skip largest-component extraction')
    solve.add_argument('--out', help='JSON report path (default stdout)')
    solve.set_defaults(handler=cmd_solve)

    score = sub.add_parser('score', help='closeness-quantile score of an edge set')
    score.add_argument('input')
    score.add_argument('edges')
    score.add_argument('--ranking', choices=('strict', 'average', 'percentile'))
    score.add_argument('--no-lcc', action='store_true', help='skip largest-component extraction')
    score.set_defaults(handler=cmd_score)

    dot = sub.add_parser('export-dot', help='DOT rendering with highlighted edges')
    dot.add_argument('input')
    dot.add_argument('edges', nargs='?')
    dot.add_argument('--grid', help='ROWSxCOLS layout for grid graphs')
    dot.add_argument('--no-lcc', action='store_true', help='skip largest-component extraction')
    dot.add_argument('--out')
    dot.set_defaults(handler=cmd_export_dot)

    return parser


def main(argv: Optional[List[str]] = None) -> int:
    try:
        args = build_parser().parse_args(argv)
    except UsageError as e:
        sys.stderr.write(f"{e.detail}\n")
        return e.exit_code

    # Configure logging
    logging.basicConfig(level=logging.DEBUG if args.verbose else config.get_log_level(), stream=sys.stderr)
    config.validate_config()
    if getattr(args, 'tol', None) is not None:
        config.TOL = args.tol

    try:
        return args.handler(args)
    except GrodelError as e:
        logging.error(f"{args.command}: {e.detail}")
        return e.exit_code
    except Exception as e:
        logging.error(f"{args.command} failed: {str(e)}")
        return 2


if __name__ == '__main__':
    sys.exit(main())
