import random
from fractions import Fraction
from itertools import combinations

import networkx as nx
import pytest

from atomgraph.graph import Graph

ACCEPTANCE_RESULTS = {}


def nx_to_graph(h):
    nodes = sorted(h.nodes())
    pos = {v: i for i, v in enumerate(nodes)}
    return Graph.from_index_edges(len(nodes), [(pos[u], pos[v]) for u, v in h.edges()])


def atlas(max_n, min_n=1):
    """All graphs on min_n..max_n vertices up to isomorphism (networkx atlas, n <= 7)."""
    return [nx_to_graph(h) for h in nx.graph_atlas_g() if min_n <= h.number_of_nodes() <= max_n]


def random_graph(rng, n, p=None):
    p = rng.random() if p is None else p
    edges = [(i, j) for i, j in combinations(range(n), 2) if rng.random() < p]
    return Graph.from_index_edges(n, edges)


def random_graphs(seed, count, max_n, min_n=1):
    rng = random.Random(seed)
    return [random_graph(rng, rng.randint(min_n, max_n)) for _ in range(count)]


def random_distribution(rng, k, denom=12):
    """k nonnegative rationals summing to 1."""
    cuts = sorted(rng.randint(0, denom) for _ in range(k - 1))
    parts = [b - a for a, b in zip([0] + cuts, cuts + [denom])]
    return [Fraction(x, denom) for x in parts]


# -- brute-force oracles shared across modules ---------------------------------

def brute_cliques(g):
    """Inclusion-maximal cliques by enumerating every vertex subset."""
    cliques = [set(s) for r in range(1, g.n + 1) for s in combinations(range(g.n), r)
               if all(g.has_edge(a, b) for a, b in combinations(s, 2))]
    return sorted(tuple(sorted(c)) for c in cliques if not any(c < d for d in cliques))


def brute_alpha(g, w=None):
    w = [1] * g.n if w is None else w
    best = 0
    for r in range(g.n + 1):
        for s in combinations(range(g.n), r):
            if not any(g.has_edge(a, b) for a, b in combinations(s, 2)):
                best = max(best, sum(w[i] for i in s))
    return best


def brute_zero_one(g):
    cliques = brute_cliques(g)
    for mask in range(1 << g.n):
        if all(sum((mask >> v) & 1 for v in C) == 1 for C in cliques):
            return [(mask >> v) & 1 for v in range(g.n)]
    return None


@pytest.fixture
def record_acceptance():
    def record(number, title, passed, elapsed):
        ACCEPTANCE_RESULTS[number] = (title, passed, elapsed)
    return record


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(ACCEPTANCE_RESULTS):
        title, passed, elapsed = ACCEPTANCE_RESULTS[number]
        status = "PASS" if passed else "FAIL"
        terminalreporter.write_line(f"criterion {number:2d} {status}  {elapsed:8.3f}s  {title}")
