"""Acceptance criteria 1 to 10, each under its own runtime bound.

Every test records PASS/FAIL with its elapsed time; the summary lines are
printed at the end of the pytest run by ``conftest.pytest_terminal_summary``.
"""

import math
import random
import time
from fractions import Fraction as F

from atomgraph.contextuality import (VERDICT_01, VERDICT_KS, cabello18_graph, cabello18_vectors,
                                     evaluate_S, kcbs_scenario, ks_check, nc_inequality,
                                     verify_cabello18)
from atomgraph.extension import context_extension, realize_extension
from atomgraph.fixtures import fig1_projectors, fig2_projectors
from atomgraph.graph import (bowtie_graph, context_counts, complete_graph, cycle_graph,
                             graph_isomorphic, is_isomorphism, maximal_cliques, total_contexts,
                             weighted_independence)
from atomgraph.orthorep import construct_flior, verify_faithful, verify_linear_independence
from atomgraph.pba import atom_graph, atoms, generate_pba, pba_isomorphic, symbolic_from_atom_graph
from atomgraph.states import (extend_state_to_pba, extend_substate, find_state_with_value,
                              is_state, pure_state, quantum_state_eval, restrict_pba_state,
                              restrict_to_base, verify_pba_state, zero_one_state)

from conftest import atlas, brute_zero_one, random_graphs


def check(record, number, title, limit, body):
    start = time.perf_counter()
    passed = False
    try:
        body()
        passed = True
    finally:
        elapsed = time.perf_counter() - start
        ok = passed and elapsed < limit
        record(number, f"{title} (limit {limit:g}s)", ok, elapsed)
    assert elapsed < limit, f"criterion {number} took {elapsed:.2f}s, limit {limit}s"


def zero_one_states(g):
    """All 0-1 states by enumeration of {0,1}^V."""
    cliques = maximal_cliques(g)
    return [[(mask >> v) & 1 for v in range(g.n)] for mask in range(1 << g.n)
            if all(sum((mask >> v) & 1 for v in C) == 1 for C in cliques)]


def random_graph_state(rng, vertices_01):
    """Random rational convex combination of enumerated 0-1 states."""
    k = rng.randint(1, 4)
    picks = [rng.choice(vertices_01) for _ in range(k)]
    weights = [F(rng.randint(1, 9)) for _ in range(k)]
    total = sum(weights)
    return [sum(w * z[v] for w, z in zip(weights, picks)) / total for v in range(len(picks[0]))]


def test_criterion_01_kcbs_classical_bound(record_acceptance):
    def body():
        value, witness = weighted_independence(cycle_graph(5), [1] * 5)
        assert value == 2 and isinstance(value, F)
        assert len(witness) == 2
    check(record_acceptance, 1, "pentagon alpha with unit weights is exactly 2", 0.1, body)


def test_criterion_02_kcbs_quantum_value(record_acceptance):
    def body():
        s = kcbs_scenario()
        assert abs(s.quantum_value - math.sqrt(5)) < 1e-9
        assert s.classical_bound == 2 and s.violation
    check(record_acceptance, 2, "KCBS quantum value sqrt(5) within 1e-9, violation flagged", 0.1, body)


def test_criterion_03_statement_equivalence_and_bound(record_acceptance):
    def body():
        graphs = atlas(6)
        assert len(graphs) == 208
        for g in graphs:
            report = ks_check(g)
            cg = context_counts(g)
            c = total_contexts(g)
            z = brute_zero_one(g)
            s1 = weighted_independence(g, cg)[0] == c
            s2 = z is not None
            s3 = s2 and sum(w * x for w, x in zip(cg, z)) == report.alpha_cg
            s4 = find_state_with_value(g, cg, report.alpha_cg) is not None
            assert s1 == s2 == s3 == s4, (g, (s1, s2, s3, s4))
            assert report.statements == (s1, s2, s3, s4)
            assert report.verdict == (VERDICT_01 if s1 else VERDICT_KS)
        for g in random_graphs(seed=2024, count=500, max_n=12):
            alpha, c, gap = nc_inequality(g)
            assert alpha <= c and gap >= 0
    check(record_acceptance, 3, "four statements agree on all graphs <= 6 vertices; "
          "alpha <= c on 500 random graphs <= 12", 120, body)


def test_criterion_04_flior(record_acceptance):
    def body():
        graphs = atlas(7)
        assert len(graphs) == 1252
        for g in graphs + random_graphs(seed=2025, count=100, max_n=10):
            rep = construct_flior(g)
            assert rep.dimension == g.n
            assert verify_faithful(g, rep), g
            assert verify_linear_independence(rep), g
    check(record_acceptance, 4, "FLIOR verified on all graphs <= 7 vertices and 100 random <= 10",
          120, body)


def test_criterion_05_realization(record_acceptance):
    def body():
        for g in atlas(4) + [cycle_graph(5)]:
            res = realize_extension(g)
            ag = atom_graph(res.algebra)
            ext = context_extension(g)
            canonical = {i: ext.index(label) for i, label in enumerate(ag.labels)}
            assert is_isomorphism(ag, ext, canonical)
            assert graph_isomorphic(ag, ext) is not None
        ag = atom_graph(realize_extension(cycle_graph(5)).algebra)
        cliques = maximal_cliques(ag)
        assert ag.n == 10 and len(cliques) == 5 and all(len(C) == 3 for C in cliques)
    check(record_acceptance, 5, "realized atom graph equals G^e on all graphs <= 4 vertices and C5",
          300, body)


def test_criterion_06_state_bijection(record_acceptance):
    def body():
        rng = random.Random(6)
        fixtures = []
        for make in (fig1_projectors, fig2_projectors):
            names, projs = make()
            fixtures.append(generate_pba(projs, names))
        fixtures.append(realize_extension(cycle_graph(5)).algebra)
        for b in fixtures:
            ag = atom_graph(b)
            corners = zero_one_states(ag)
            for _ in range(100):
                p = random_graph_state(rng, corners)
                assert is_state(ag, p)
                s = extend_state_to_pba(b, p)
                assert verify_pba_state(b, s)
                assert restrict_pba_state(b, s) == p
            d = b.elements[0].dim
            for _ in range(100):
                psi = [F(rng.randint(-5, 5)) for _ in range(d)]
                if not any(psi):
                    psi[0] = F(1)
                s = quantum_state_eval(b.elements, pure_state(psi))
                assert verify_pba_state(b, s)
                assert extend_state_to_pba(b, restrict_pba_state(b, s)) == s
    check(record_acceptance, 6, "state extension and restriction are inverse on three algebras",
          60, body)


def test_criterion_07_substate_extension(record_acceptance):
    def body():
        rng = random.Random(7)
        for g in (cycle_graph(5), complete_graph(3)):
            ext = context_extension(g)
            seen = {}
            for _ in range(100):
                q = [F(rng.randint(0, 10), 10) for _ in range(g.n)]
                worst = max(sum(q[v] for v in C) for C in maximal_cliques(g))
                if worst > 1:
                    q = [x / worst for x in q]
                p = extend_substate(g, q)
                assert is_state(ext, p)
                assert restrict_to_base(g, p) == q
                seen.setdefault(tuple(q), set()).add(tuple(p))
            images = [next(iter(v)) for v in seen.values()]
            assert all(len(v) == 1 for v in seen.values())
            assert len(set(images)) == len(images)
    check(record_acceptance, 7, "substates of C5 and K3 extend injectively to states on G^e",
          10, body)


def test_criterion_08_fig2_regression(record_acceptance):
    def body():
        names, projs = fig2_projectors()
        b = generate_pba(projs, names)
        assert len(b) == 12
        assert len(atoms(b)) == 5
        assert graph_isomorphic(atom_graph(b), bowtie_graph()) is not None
        assert pba_isomorphic(symbolic_from_atom_graph(bowtie_graph()), b)
    check(record_acceptance, 8, "five-ray projectors: 12 elements, 5 atoms, bowtie, symbolic match",
          5, body)


def test_criterion_09_cabello18(record_acceptance):
    def body():
        assert verify_cabello18(cabello18_vectors())
        g = cabello18_graph()
        assert zero_one_state(g) is None
        alpha, c, gap = nc_inequality(g)
        assert gap > 0
        report = ks_check(g)
        assert report.verdict == VERDICT_KS and report.gap == gap
    check(record_acceptance, 9, "Cabello-18 verifies, has no 0-1 state, positive gap", 30, body)


def test_criterion_10_kcbs_is_state_dependent(record_acceptance):
    def body():
        g = cycle_graph(5)
        ext = context_extension(g)
        all_added = [0] * g.n + [1] * (ext.n - g.n)
        assert is_state(ext, all_added)
        assert evaluate_S(ext, all_added) == total_contexts(ext)
        r_ext = ks_check(ext)
        assert r_ext.verdict == VERDICT_01 and r_ext.zero_one == all_added
        r = ks_check(g)
        assert r.verdict == VERDICT_KS and r.zero_one is None
    check(record_acceptance, 10, "ks_check finds the all-added 0-1 state on C5^e and none on C5",
          1, body)
