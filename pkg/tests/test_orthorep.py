import math
import random
from fractions import Fraction
from itertools import combinations

import pytest
from hypothesis import given, settings

from atomgraph import exactla as la
from atomgraph.graph import Graph, bowtie_graph, complete_graph, cycle_graph, empty_graph
from atomgraph.orthorep import (OrthoRep, construct_flior, kcbs_umbrella, rep_from_dict,
                                rep_from_vectors, rep_to_dict, verify_faithful,
                                verify_linear_independence)

from conftest import random_graphs
from test_graph import graphs


def independent_orthogonality_check(g, vectors):
    """Faithfulness recomputed from raw dot products, without the cached Gram matrix."""
    for i, j in combinations(range(g.n), 2):
        dot = sum(Fraction(a) * Fraction(b) for a, b in zip(vectors[i], vectors[j]))
        if g.has_edge(i, j) != (dot == 0):
            return False
    return True


class TestConstruction:
    def test_single_vertex(self):
        rep = construct_flior(Graph(["v"], []))
        assert rep.dimension == 1 and rep.vectors[0] != (0,)

    def test_triangle_is_orthogonal_basis(self):
        rep = construct_flior(complete_graph(3))
        assert rep.dimension == 3
        assert all(rep.gram[i][j] == 0 for i, j in combinations(range(3), 2))
        assert verify_linear_independence(rep)

    def test_pentagon(self):
        g = cycle_graph(5)
        rep = construct_flior(g)
        assert rep.dimension == 5
        assert verify_faithful(g, rep) and verify_linear_independence(rep)
        assert independent_orthogonality_check(g, rep.vectors)

    def test_vectors_are_primitive_integers(self):
        rep = construct_flior(bowtie_graph())
        for v in rep.vectors:
            assert all(x.denominator == 1 for x in v)
            assert math.gcd(*(int(x) for x in v)) == 1

    def test_deterministic(self):
        for g in (cycle_graph(5), bowtie_graph(), empty_graph(4)):
            assert construct_flior(g).vectors == construct_flior(g).vectors

    def test_empty_graph_is_rejected(self):
        with pytest.raises(ValueError):
            construct_flior(Graph([], []))

    @given(graphs(max_n=8))
    @settings(max_examples=80, deadline=None)
    def test_property(self, g):
        rep = construct_flior(g)
        assert rep.dimension == g.n
        assert verify_faithful(g, rep)
        assert verify_linear_independence(rep)
        assert independent_orthogonality_check(g, rep.vectors)

    def test_seeded_random_graphs(self):
        for g in random_graphs(seed=3, count=25, max_n=10):
            rep = construct_flior(g)
            assert independent_orthogonality_check(g, rep.vectors)
            assert la.rank(rep.vectors) == g.n


class TestVerifiers:
    def test_faithful_examples(self):
        k2 = complete_graph(2)
        e2 = empty_graph(2)
        assert verify_faithful(k2, rep_from_vectors(k2, [(1, 0), (0, 1)]))
        assert not verify_faithful(k2, rep_from_vectors(k2, [(1, 0), (1, 1)]))
        assert not verify_faithful(e2, rep_from_vectors(e2, [(1, 0), (0, 1)]))

    def test_zero_and_repeated_vectors_are_not_faithful(self):
        e2 = empty_graph(2)
        assert not verify_faithful(e2, rep_from_vectors(e2, [(0, 0), (1, 1)]))
        assert not verify_faithful(e2, rep_from_vectors(e2, [(1, 1), (1, 1)]))

    def test_independence_examples(self):
        k3 = complete_graph(3)
        assert verify_linear_independence(rep_from_vectors(k3, la.identity(3)))
        e2 = empty_graph(2)
        assert not verify_linear_independence(rep_from_vectors(e2, [(1, 0), (2, 0)]))

    def test_shape_validation(self):
        with pytest.raises(ValueError):
            OrthoRep(complete_graph(2), ((1, 0),))
        with pytest.raises(ValueError):
            OrthoRep(complete_graph(2), ((1, 0), (0, 1, 0)))


class TestKCBSUmbrella:
    def test_geometry(self):
        rep, psi = kcbs_umbrella()
        vs = rep.vectors
        assert rep.dimension == 3 and psi == (0.0, 0.0, 1.0)
        for v in vs:
            assert abs(math.sqrt(sum(x * x for x in v)) - 1) < 1e-12
        for i in range(5):
            u, v = vs[i], vs[(i + 1) % 5]
            assert abs(sum(a * b for a, b in zip(u, v))) < 1e-12

    def test_non_neighbours_are_not_orthogonal(self):
        rep, _ = kcbs_umbrella()
        vs = rep.vectors
        for i in range(5):
            u, v = vs[i], vs[(i + 2) % 5]
            assert abs(sum(a * b for a, b in zip(u, v))) > 0.1

    def test_quantum_value(self):
        rep, psi = kcbs_umbrella()
        overlaps = [sum(a * b for a, b in zip(v, psi)) ** 2 for v in rep.vectors]
        assert abs(sum(overlaps) - math.sqrt(5)) < 1e-9
        for p in overlaps:
            assert abs(p - 1 / math.sqrt(5)) < 1e-12


class TestSerialization:
    def test_exact_round_trip(self):
        rng = random.Random(5)
        for g in random_graphs(seed=rng.randrange(100), count=10, max_n=6) + [bowtie_graph()]:
            rep = construct_flior(g)
            obj = rep_to_dict(rep)
            assert obj["dimension"] == g.n
            back = rep_from_dict(g, obj)
            assert back.vectors == rep.vectors
            assert rep_to_dict(back) == obj

    def test_float_output_is_normalized(self):
        rep = construct_flior(cycle_graph(5))
        obj = rep_to_dict(rep, as_float=True)
        for v in obj["vectors"].values():
            assert abs(sum(float(x) ** 2 for x in v) - 1) < 1e-12

    def test_missing_vector(self):
        with pytest.raises(ValueError):
            rep_from_dict(complete_graph(2), {"dimension": 2, "vectors": {"0": ["1/1", "0/1"]}})

    def test_dimension_mismatch(self):
        with pytest.raises(ValueError):
            rep_from_dict(complete_graph(2), {"dimension": 3, "vectors": {
                "0": ["1/1", "0/1"], "1": ["0/1", "1/1"]}})
