# Graph builders and the identity-check corpus shared by the test modules
import networkx as nx
import numpy as np

from graphs.core import Graph, from_networkx
from graphs.generators import gen_barabasi_albert, gen_grid, gen_hotdog, gen_watts_strogatz


def graph_from(n, edges):
    return Graph.from_pairs(n, edges)


def disjoint_union(*graphs):
    edges, offset = [], 0
    for g in graphs:
        edges.extend((u + offset, v + offset) for u, v in g.edges)
        offset += g.n
    return Graph.from_pairs(offset, edges)


def path(n):
    return graph_from(n, [(i, i + 1) for i in range(n - 1)])


def cycle(n):
    return graph_from(n, [(i, (i + 1) % n) for i in range(n)])


def complete(n):
    return graph_from(n, [(u, v) for u in range(n) for v in range(u + 1, n)])


def star(n):
    return graph_from(n, [(0, v) for v in range(1, n)])


def random_tree(n, seed):
    rng = np.random.default_rng(seed)
    return from_networkx(nx.from_prufer_sequence([int(x) for x in rng.integers(0, n, size=n - 2)]))


def cycle_with_pendant():
    # 4-cycle 0-1-2-3 plus pendant edge (3, 4)
    return graph_from(5, [(0, 1), (1, 2), (2, 3), (0, 3), (3, 4)])


def identity_corpus():
    """Named test graphs: every generator, trees, cycles and disconnected unions, n <= 30"""
    corpus = []
    for rows, cols in [(1, 2), (2, 2), (2, 3), (3, 3), (3, 4), (3, 5), (4, 4), (2, 7), (5, 5)]:
        corpus.append((f"grid{rows}x{cols}", gen_grid(rows, cols)))
    for rows, cols in [(1, 1), (1, 3), (3, 3), (3, 4), (5, 4)]:
        corpus.append((f"hotdog{rows}x{cols}", gen_hotdog(rows, cols)))
    for k_attach, n_max, seeds in [(1, 10, range(3)), (2, 12, range(3)), (3, 18, range(4))]:
        for seed in seeds:
            corpus.append((f"ba{k_attach}-{n_max}-s{seed}", gen_barabasi_albert(k_attach, n_max, seed)))
    for n, deg, p, seeds in [(16, 3, 0.7, range(4)), (12, 1, 0.5, range(3)), (20, 2, 0.3, range(3)), (10, 2, 0.0, [0])]:
        for seed in seeds:
            corpus.append((f"ws{n}-{deg}-{p}-s{seed}", gen_watts_strogatz(n, deg, p, seed)))
    for n in (2, 3, 5, 8):
        corpus.append((f"path{n}", path(n)))
    corpus.append(("star4", star(4)))
    corpus.append(("star7", star(7)))
    corpus.append(("binary-tree", from_networkx(nx.balanced_tree(2, 3))))
    for n, seed in [(10, 0), (15, 1), (20, 2)]:
        corpus.append((f"tree{n}-s{seed}", random_tree(n, seed)))
    for n in (3, 4, 5, 10):
        corpus.append((f"cycle{n}", cycle(n)))
    corpus.append(("k4", complete(4)))
    corpus.append(("k5", complete(5)))
    corpus.append(("cycle-pendant", cycle_with_pendant()))
    corpus.append(("p3+k2", disjoint_union(path(3), path(2))))
    corpus.append(("k3+k3", disjoint_union(complete(3), complete(3))))
    corpus.append(("grid2x3+c4", disjoint_union(gen_grid(2, 3), cycle(4))))
    corpus.append(("pendant+isolated", disjoint_union(cycle_with_pendant(), Graph(1))))
    corpus.append(("empty4", Graph(4)))
    corpus.append(("ws12+p4", disjoint_union(gen_watts_strogatz(12, 1, 0.5, 7), path(4))))
    return corpus
