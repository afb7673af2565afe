# Edge-list ingestion and canonical writer
import logging
import os
from typing import IO, Dict, List, Optional, Union

from errors import EdgeListParseError, InputError, UnknownEdgeError
from graphs.core import Edge, EdgeSet, Graph, canonical_edge, canonical_edge_set
from utils.file_manager import file_manager

logger = logging.getLogger(__name__)

COMMENT_PREFIXES = ('#', '%')

TextSource = Union[str, bytes, IO]


def _as_text(source: TextSource) -> str:
    if hasattr(source, 'read'):
        source = source.read()
    if isinstance(source, bytes):
        try:
            source = source.decode('utf-8')
        except UnicodeDecodeError as e:
            raise EdgeListParseError(f"input is not valid UTF-8: {e}")
    return source


def _parse_pairs(text: str) -> List[Edge]:
    pairs = []
    for line_number, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith(COMMENT_PREFIXES):
            continue
        fields = line.split()
        if len(fields) < 2:
            raise EdgeListParseError(f"expected two node ids, got '{line}'", line_number)
        try:
            u, v = int(fields[0]), int(fields[1])
        except ValueError:
            raise EdgeListParseError(f"node ids must be integers, got '{line}'", line_number)
        if u < 0 or v < 0:
            raise EdgeListParseError(f"node ids must be nonnegative, got '{line}'", line_number)
        # a third column (weight) is ignored
        pairs.append((u, v))
    return pairs


def from_edge_list(source: TextSource) -> Graph:
    """Parse whitespace separated 'u v [weight]' lines into a simple graph.

    Self-loops are dropped, reversed and repeated edges merged and weights
    ignored; n is one more than the largest id seen.
    """
    pairs = _parse_pairs(_as_text(source))
    if not pairs:
        raise EdgeListParseError("edge list is empty")
    n = 1 + max(max(u, v) for u, v in pairs)
    graph = Graph.from_pairs(n, pairs)
    dropped = len(pairs) - graph.m
    if dropped:
        logger.info(f"Dropped {dropped} self-loop or duplicate lines")
    return graph


def format_edge_list(g: Union[Graph, EdgeSet]) -> str:
    edges = g.edges if isinstance(g, Graph) else canonical_edge_set(g)
    return ''.join(f"{u} {v}\n" for u, v in edges)


def read_edge_list(path: str) -> Graph:
    if not os.path.isfile(path):
        raise InputError(f"edge list not found: {path}")
    with open(path, 'rb') as f:
        graph = from_edge_list(f)
    logger.info(f"Read {path}: n={graph.n}, m={graph.m}")
    return graph


def parse_edge_set(source: TextSource, g: Graph, mapping: Optional[Dict[int, int]] = None) -> EdgeSet:
    """Parse a solution-set file and check every edge against ``g``.

    With ``mapping`` the file holds input ids, translated into ``g``'s ids
    (as returned by largest_connected_component).
    """
    edges = []
    for u, v in _parse_pairs(_as_text(source)):
        a, b = (mapping.get(u), mapping.get(v)) if mapping is not None else (u, v)
        if a is None or b is None or a == b or not g.has_edge(a, b):
            raise UnknownEdgeError(canonical_edge(u, v))
        edges.append((a, b))
    return canonical_edge_set(edges)


def read_edge_set(path: str, g: Graph, mapping: Optional[Dict[int, int]] = None) -> EdgeSet:
    if not os.path.isfile(path):
        raise InputError(f"edge set file not found: {path}")
    with open(path, 'rb') as f:
        return parse_edge_set(f, g, mapping)


def write_edge_list(g: Graph, path: str) -> str:
    return file_manager.write_text(path, format_edge_list(g))
