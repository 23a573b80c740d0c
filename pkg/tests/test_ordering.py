from itertools import permutations

import pytest

from hamcolor.bounds import diameter_at_most_half, is_applicable, lower_bound_weight
from hamcolor.errors import (
    NegativeIncrementError,
    NotApplicableError,
    NotAPermutationError,
    SearchFailedError,
)
from hamcolor.families import gen_broom, gen_star
from hamcolor.ordering import (
    Coloring,
    certify_alternation,
    certify_alternation_db,
    check_spacing,
    coloring_from_ordering,
    search_ordering,
    validate_ordering,
)
from hamcolor.solver import verify_coloring
from hamcolor.tree import Tree, analyze


def spider_331() -> Tree:
    # hub 0, legs 1-2-3, 4-5-6 and 7; diameter 6 on 8 vertices
    return Tree(8, [(0, 1), (1, 2), (2, 3), (0, 4), (4, 5), (5, 6), (0, 7)])


def path(n: int) -> Tree:
    return Tree(n, [(i, i + 1) for i in range(n - 1)])


class TestColoring:
    def test_span_and_len(self):
        c = Coloring((3, 0, 7))
        assert c.span == 7
        assert len(c) == 3

    def test_constant_coloring_has_span_zero(self):
        assert Coloring((5, 5)).span == 0


class TestValidateOrdering:
    def test_accepts_permutation(self):
        assert validate_ordering(3, (2, 0, 1)) == [2, 0, 1]

    def test_rejects_non_permutations(self):
        for bad in ((0, 1), (0, 1, 1), (0, 1, 3), (0, 1, 2, 3)):
            with pytest.raises(NotAPermutationError):
                validate_ordering(3, bad)


class TestCheckSpacing:
    def test_needs_applicable_tree(self):
        rv = analyze(path(4))
        with pytest.raises(NotApplicableError):
            check_spacing(rv, [1, 3, 0, 2])

    def test_star_hub_first_passes(self):
        rv = analyze(gen_star(5)[0])
        assert check_spacing(rv, [0, 1, 2, 3, 4]).ok

    def test_bad_endpoints_reported_without_positions(self):
        rv = analyze(gen_star(5)[0])
        res = check_spacing(rv, [1, 0, 2, 3, 4])
        assert not res.ok
        assert res.violation is None
        assert "endpoint" in res.reason

    def test_first_violating_pair_reported(self):
        # consecutive vertices 2,1 share the path branch of the broom
        rv = analyze(gen_broom(6, 3)[0])
        res = check_spacing(rv, [0, 2, 1, 3, 4, 5])
        assert not res.ok
        assert res.violation == (1, 2)
        assert "distance" in res.reason

    def test_ok_iff_bound_attained_exhaustive(self, corpus, exact_of):
        # sweeping every permutation of every small tree: some ordering
        # passes the pairwise condition exactly when the weight-center
        # bound is the true optimum
        for n in range(4, 7):
            for t in corpus[n]:
                if not is_applicable(t):
                    continue
                rv = analyze(t)
                attained = exact_of(t).hc == lower_bound_weight(rv)
                found = any(check_spacing(rv, p).ok for p in permutations(range(n)))
                assert found == attained


class TestColoringFromOrdering:
    def test_small_star_frozen(self):
        rv = analyze(Tree(4, [(0, 1), (0, 2), (0, 3)]))
        col = coloring_from_ordering(rv, [0, 1, 2, 3])
        assert col.colors == (0, 2, 3, 4)
        assert col.span == 4

    def test_span_identity(self, corpus, rng):
        # span depends only on the endpoint levels, whatever the middle does
        for t in corpus[7] + corpus[8]:
            rv = analyze(t)
            b = 1 if rv.bicentral else 0
            base = (t.n - 1) * (t.n - 1 - b) - 2 * rv.total_level
            for _ in range(5):
                order = list(range(t.n))
                rng.shuffle(order)
                col = coloring_from_ordering(rv, order)
                assert col.span == base + rv.level[order[0]] + rv.level[order[-1]]

    def test_increment_never_negative_on_real_trees(self, corpus, rng):
        # levels are capped by branch sizes, which a weight-centered rooting
        # keeps below half the tree, so no vertex pair can overshoot the step
        for n in range(2, 9):
            for t in corpus[n]:
                rv = analyze(t)
                order = list(range(t.n))
                for _ in range(20):
                    rng.shuffle(order)
                    coloring_from_ordering(rv, order)  # must not raise

    def test_negative_increment_guard(self):
        # level data like this cannot come out of analyze(); the guard is
        # defensive, for hand-built or corrupted views
        class Doctored:
            n = 4
            bicentral = False
            level = (0, 3, 3, 1)

        with pytest.raises(NegativeIncrementError):
            coloring_from_ordering(Doctored(), [0, 1, 2, 3])

    def test_rejects_bad_ordering(self):
        rv = analyze(gen_star(4)[0])
        with pytest.raises(NotAPermutationError):
            coloring_from_ordering(rv, [0, 1, 2])


class TestCertificates:
    def test_star_gets_db_certificate(self):
        rv = analyze(gen_star(5)[0])
        cert = certify_alternation_db(rv, [0, 1, 2, 3, 4])
        assert cert.kind == "alternation_db"
        assert cert.claimed_span == 9
        assert cert.ordering == (0, 1, 2, 3, 4)

    def test_long_spider_needs_plain_certificate(self):
        rv = analyze(spider_331())
        order = [0, 3, 7, 6, 1, 5, 2, 4]
        db = certify_alternation_db(rv, order)
        assert db.kind == "none" and "diameter" in db.reason
        cert = certify_alternation(rv, order)
        assert cert.kind == "alternation"
        assert cert.claimed_span == 24
        col = coloring_from_ordering(rv, order)
        assert col.colors == (0, 13, 20, 4, 24, 17, 10, 7)
        assert not verify_coloring(rv, col)

    def test_distance_cap_rejection(self):
        # the two deep leg tips sit 6 apart, over n/2 = 4
        rv = analyze(spider_331())
        cert = certify_alternation(rv, [0, 3, 6, 1, 5, 2, 7, 4])
        assert cert.kind == "none"
        assert "exceeds n/2" in cert.reason

    def test_same_branch_rejection(self):
        rv = analyze(gen_broom(6, 3)[0])
        cert = certify_alternation(rv, [0, 2, 1, 3, 4, 5])
        assert cert.kind == "none"
        assert "share a branch" in cert.reason

    def test_same_side_rejection_when_bicentral(self):
        # double star: 2,3 hang off one center, so they may not be adjacent
        rv = analyze(Tree(8, [(0, 1), (0, 2), (0, 3), (0, 4), (1, 5), (1, 6), (1, 7)]))
        cert = certify_alternation(rv, [0, 2, 3, 6, 5, 7, 4, 1])
        assert cert.kind == "none"
        assert "same side" in cert.reason

    def test_needs_applicable_tree(self):
        rv = analyze(path(6))
        with pytest.raises(NotApplicableError):
            certify_alternation(rv, [2, 5, 0, 4, 1, 3])
        with pytest.raises(NotApplicableError):
            certify_alternation_db(rv, [2, 5, 0, 4, 1, 3])

    def test_certified_orderings_pass_spacing(self, corpus):
        # the alternation conditions imply the pairwise condition
        for n in range(4, 9):
            for t in corpus[n]:
                if not is_applicable(t):
                    continue
                rv = analyze(t)
                try:
                    order = search_ordering(rv)
                except SearchFailedError:
                    continue
                assert certify_alternation(rv, order).kind == "alternation"
                assert check_spacing(rv, order).ok

    def test_db_and_plain_agree_on_short_trees(self, corpus, rng):
        # when the diameter fits in n/2 the cap can never fire, so the two
        # certificates accept exactly the same orderings
        for t in corpus[6] + corpus[7]:
            if not is_applicable(t) or not diameter_at_most_half(t):
                continue
            rv = analyze(t)
            order = list(range(t.n))
            for _ in range(30):
                rng.shuffle(order)
                plain = certify_alternation(rv, order)
                db = certify_alternation_db(rv, order)
                assert (plain.kind == "none") == (db.kind == "none")


class TestSpacingSoundness:
    def test_random_passes_induce_optimal_colorings(self, corpus, exact_of, rng):
        hits = 0
        for n in range(4, 8):
            for t in corpus[n]:
                if not is_applicable(t):
                    continue
                rv = analyze(t)
                centers = sorted(rv.weight_centers)
                for trial in range(60):
                    order = list(range(t.n))
                    rng.shuffle(order)
                    if trial % 2 == 0:
                        # bias: spacing demands a center first, so help the fuzz along
                        order.remove(centers[0])
                        order.insert(0, centers[0])
                    if not check_spacing(rv, order).ok:
                        continue
                    hits += 1
                    col = coloring_from_ordering(rv, order)
                    assert not verify_coloring(rv, col)
                    assert col.span == lower_bound_weight(rv)
                    assert col.span == exact_of(t).hc
        assert hits > 10  # the fuzz must actually exercise the sound path


class TestSearchOrdering:
    def test_star_order_frozen(self):
        rv = analyze(gen_star(6)[0])
        assert search_ordering(rv) == [0, 1, 2, 3, 4, 5]

    def test_broom_greedy(self):
        rv = analyze(gen_broom(9, 4)[0])
        order = search_ordering(rv)
        assert order == [0, 3, 4, 2, 5, 1, 6, 7, 8]
        col = coloring_from_ordering(rv, order)
        assert col.span == lower_bound_weight(rv) == 43

    def test_needs_applicable_tree(self):
        with pytest.raises(NotApplicableError):
            search_ordering(analyze(path(5)))

    def test_long_spider_fails_even_though_ordering_exists(self):
        # greedy pairs the two deep tips early and trips the distance cap;
        # test_long_spider_needs_plain_certificate shows a certificate exists
        with pytest.raises(SearchFailedError):
            search_ordering(analyze(spider_331()))

    def test_corpus_successes_are_optimal(self, corpus, exact_of):
        succeeded = 0
        for n in range(4, 9):
            for t in corpus[n]:
                if not is_applicable(t):
                    continue
                rv = analyze(t)
                try:
                    order = search_ordering(rv)
                except SearchFailedError:
                    continue
                succeeded += 1
                col = coloring_from_ordering(rv, order)
                assert not verify_coloring(rv, col)
                assert col.span == lower_bound_weight(rv)
                assert exact_of(t).hc == col.span
        assert succeeded == 20  # of the 40 applicable trees on up to 8 vertices
