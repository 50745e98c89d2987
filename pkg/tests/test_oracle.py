import json

import pytest

from k4t.complex import BuildOptions, InteractionVertex as V, build_complex, prune_isolated, structurally_isolated
from k4t.oracle import (
    CheckReport,
    GenParams,
    check_binary_structure,
    check_clause_agreement,
    check_clique_independence,
    check_counts,
    check_isolation_lemma,
    check_star_complex,
    differential_edge_oracle,
    gen_random_tree,
    make_corpus,
    reports_json,
    roundtrip_check,
    run_suites,
)
from k4t.tree import core_tree, homeo_reduce, parse_tree

from conftest import BINARY, DIR2_CHILD, PATH, ROOT_DEG4, TWO_CORE


class TestGenerator:
    def test_zero_cores_is_path(self):
        t = gen_random_tree(GenParams(seed=1, core_count=0))
        assert t.cores() == []
        assert max(t.degree(v) for v in range(len(t))) <= 2

    def test_binary(self):
        t = gen_random_tree(GenParams(seed=7, core_count=5, binary_only=True))
        internal = [v for v in range(len(t)) if v != t.root and t.degree(v) > 1]
        assert len(internal) == 5
        assert all(t.degree(v) == 3 for v in internal)

    @pytest.mark.parametrize("cores,maxdeg", [(1, 3), (4, 4), (12, 6), (20, 8)])
    def test_core_count_and_degree_cap(self, cores, maxdeg):
        for seed in range(10):
            t = gen_random_tree(GenParams(seed, cores, maxdeg))
            assert len(t.cores()) == cores
            assert max(t.degree(v) for v in t.cores()) <= maxdeg

    def test_deterministic(self):
        p = GenParams(seed=99, core_count=6, subdivision_rate=0.4)
        assert str(gen_random_tree(p)) == str(gen_random_tree(p))
        assert [str(t) for t in make_corpus(3, 20)] == [str(t) for t in make_corpus(3, 20)]

    def test_subdivision_invisible(self):
        for seed in range(10):
            plain = gen_random_tree(GenParams(seed, 5))
            sub = gen_random_tree(GenParams(seed, 5, subdivision_rate=0.6))
            assert len(sub) >= len(plain)
            assert homeo_reduce(sub) == homeo_reduce(plain)
            assert build_complex(sub).unlabeled() == build_complex(plain).unlabeled()

    @pytest.mark.parametrize("kwargs", [dict(max_degree=2), dict(core_count=-1),
                                        dict(subdivision_rate=1.5),
                                        dict(binary_only=True, max_degree=2)])
    def test_bad_params(self, kwargs):
        with pytest.raises(ValueError):
            GenParams(**kwargs)


class TestChecks:
    def test_isolation_examples(self):
        trees = [parse_tree(t) for t in (TWO_CORE, BINARY, PATH)]
        rep = check_isolation_lemma(trees)
        assert rep.passed and rep.trees_tested == 3
        per_core = [v for v in build_complex(trees[0]).labels if v.x == 1]
        assert sum(structurally_isolated(v) for v in per_core) == 3

    def test_counts_degree_four(self):
        rep = check_counts([parse_tree(ROOT_DEG4)])
        assert rep.passed
        assert "degree 4: |Lambda_i| = 3 (3 core-directions)" in rep.notes
        assert "degree 3: |Lambda_i| = 1 (2 core-directions)" in rep.notes

    def test_counts_degree_five(self):
        rep = check_counts([parse_tree("(((()())()()()))")])
        assert rep.passed and any("degree 5: |Lambda_i| = 6" in n for n in rep.notes)

    def test_binary_structure(self):
        g = prune_isolated(build_complex(parse_tree(BINARY)))
        assert sum(d == 1 for d in g.degrees()) == 3 == len(core_tree(parse_tree(BINARY)).leaves())
        g2 = prune_isolated(build_complex(parse_tree(TWO_CORE)))
        assert sum(d == 1 for d in g2.degrees()) == 2 == len(core_tree(parse_tree(TWO_CORE)).leaves())
        rep = check_binary_structure([parse_tree(BINARY), parse_tree(TWO_CORE), parse_tree("((()()))")])
        assert rep.passed and rep.trees_tested == 2

    def test_clique_independence(self):
        rep = check_clique_independence([parse_tree(BINARY)])
        assert rep.passed and rep.trees_tested == 1
        assert check_clique_independence(make_corpus(5, 40, binary=True)).passed

    def test_roundtrip_examples(self):
        rep = roundtrip_check([parse_tree(t) for t in (BINARY, TWO_CORE, ROOT_DEG4, PATH)])
        assert rep.passed and rep.trees_tested == 3

    def test_star_complex(self):
        assert check_star_complex().passed

    def test_clause_agreement(self):
        corpus = make_corpus(8, 10, max_cores=5)
        assert check_clause_agreement(corpus).passed
        assert check_clause_agreement(corpus, BuildOptions(rule3_boundary="paperStrict")).passed

    def test_failures_reported_not_raised(self):
        rep = CheckReport("x")
        rep.fail(parse_tree(TWO_CORE), "boom")
        assert not rep.passed
        doc = rep.to_json()
        assert doc["failures"] == [{"tree": TWO_CORE, "detail": "boom"}]
        assert rep.summary().startswith("FAIL")

    def test_reports_deterministic(self):
        a = reports_json(run_suites(["counts", "roundtrip"], make_corpus(4, 15)))
        b = reports_json(run_suites(["counts", "roundtrip"], make_corpus(4, 15)))
        assert a == b
        assert all(r["passed"] for r in json.loads(a))


class TestDifferential:
    def test_identical_options(self):
        assert differential_edge_oracle(parse_tree(BINARY), BuildOptions(), BuildOptions()) == []

    def test_rule3_boundary(self):
        t = parse_tree(DIR2_CHILD)
        diff = differential_edge_oracle(t, BuildOptions(), BuildOptions(rule3_boundary="paperStrict"))
        assert [(u, w) for u, w, *_ in diff] == [(V(0, 2, (1,), (2,)), V(2, 4, (1,), (0,)))]
        assert diff[0][2:] == (True, False, "item3-boundary")

    def test_rule3_boundary_only_q_entry_two_with_k_two(self):
        for t in make_corpus(2, 10, max_cores=5):
            for u, w, in_a, in_b, clause in differential_edge_oracle(
                    t, BuildOptions(), BuildOptions(rule3_boundary="paperStrict")):
                lower, upper = (u, w) if t.is_ancestor(u.x, w.x) else (w, u)
                assert clause == "item3-boundary" and in_a and not in_b
                assert upper.k == 2 and 2 in lower.q

    def test_same_core_edges(self):
        t = parse_tree(ROOT_DEG4)
        diff = differential_edge_oracle(t, BuildOptions(), BuildOptions(same_core_edges="rule1"))
        assert len(diff) == 3
        assert all(u.x == w.x == 1 and u.k == w.k == 2 for u, w, *_ in diff)
        assert differential_edge_oracle(parse_tree(TWO_CORE), BuildOptions(),
                                        BuildOptions(same_core_edges="rule1")) == []

    def test_empty_q_adds_vertices(self):
        t = parse_tree(ROOT_DEG4)
        diff = differential_edge_oracle(t, BuildOptions(), BuildOptions(allow_empty_q=True))
        assert diff and all(not a and b for _, _, a, b, _ in diff)
