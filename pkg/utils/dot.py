# Graphviz DOT export with highlighted deletion sets
from typing import Iterable, Optional, Sequence, Tuple

from graphs.core import Edge, Graph, canonical_edge_set
from utils.file_manager import file_manager

HIGHLIGHT = 'color="blue", penwidth=4'


def format_dot(g: Graph, highlight: Iterable[Edge] = (),
               grid: Optional[Tuple[int, int]] = None, name: str = 'G',
               node_ids: Optional[Sequence[int]] = None) -> str:
    """DOT text with nodes and edges in canonical order.

    ``highlight`` uses g's ids. ``node_ids[v]`` is the name printed for node v
    (input ids after component extraction). With ``grid=(rows, cols)`` nodes
    whose printed id is below rows*cols get pinned positions (id = row*cols + col,
    row 0 at the bottom) and any extra nodes are left free.
    """
    marked = set(canonical_edge_set(highlight))
    label = list(range(g.n)) if node_ids is None else list(node_ids)
    lines = [f'graph "{name}" {{', '  node [shape=circle, label="", width=0.2];']
    for v in range(g.n):
        node = label[v]
        if grid is not None and node < grid[0] * grid[1]:
            row, col = divmod(node, grid[1])
            lines.append(f'  {node} [pos="{col},{row}!"];')
        else:
            lines.append(f'  {node};')
    for u, v in g.edges:
        attributes = f' [{HIGHLIGHT}]' if (u, v) in marked else ''
        lines.append(f'  {label[u]} -- {label[v]}{attributes};')
    lines.append('}')
    return '\n'.join(lines) + '\n'


def write_dot(g: Graph, path: str, highlight: Iterable[Edge] = (),
              grid: Optional[Tuple[int, int]] = None) -> str:
    return file_manager.write_text(path, format_dot(g, highlight, grid))
