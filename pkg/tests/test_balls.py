import pytest
from hypothesis import given
from hypothesis import strategies as st

from nanoread.balls import (
    confusable,
    deletion_ball,
    restricted_ball,
    rho_geq,
    runs,
    sticky_ball,
    sticky_read_images,
)
from nanoread.core import LengthMismatchError, read_vector
from nanoread.oracle import all_words, confusable_bruteforce

bits = st.lists(st.integers(0, 1), min_size=1, max_size=14).map(tuple)


class TestRuns:
    def test_profile_reassembles(self):
        u = (0, 0, 1, 1, 1, 0, 2, 2)
        prof = runs(u)
        assert prof == [(0, 2), (1, 3), (0, 1), (2, 2)]
        rebuilt = tuple(s for s, length in prof for _ in range(length))
        assert rebuilt == u

    def test_rho_geq(self):
        assert rho_geq((0, 0, 1, 1, 1), 2) == 2
        assert rho_geq((1,) * 9, 1) == 1
        assert rho_geq((0, 1, 0), 2) == 0

    @given(bits)
    def test_rho1_counts_all_runs(self, u):
        assert rho_geq(u, 1) == len(runs(u))


class TestDeletionBall:
    def test_small_cases(self):
        assert deletion_ball((1, 1, 2)) == {(1, 2), (1, 1)}
        assert deletion_ball((0, 0, 0, 0)) == {(0, 0, 0)}
        assert deletion_ball((0, 1, 0, 1)) == {
            (1, 0, 1),
            (0, 0, 1),
            (0, 1, 1),
            (0, 1, 0),
        }

    @given(bits)
    def test_size_is_run_count(self, u):
        assert len(deletion_ball(u)) == rho_geq(u, 1)


class TestStickyBall:
    def test_examples(self):
        assert sticky_ball((0, 0, 1, 1, 1), 2) == {(0, 1, 1, 1), (0, 0, 1, 1)}
        assert sticky_ball((0, 1, 0, 1), 2) == set()

    @given(bits)
    def test_r1_equals_deletion_ball(self, u):
        assert sticky_ball(u, 1) == deletion_ball(u)

    def test_size_matches_run_statistic_exhaustive(self):
        for n in range(1, 11):
            for u in all_words(n):
                for r in range(1, n + 1):
                    assert len(sticky_ball(u, r)) == rho_geq(u, r)


class TestRestrictedBall:
    def test_reference_read_vector(self):
        assert restricted_ball((1, 1, 2, 2, 2, 1, 0, 0), 3) == {
            (1, 1, 2, 2, 2, 1, 0)
        }

    def test_no_deletable_symbols(self):
        assert restricted_ball((1, 2, 1), 3) == set()

    def test_all_deletable(self):
        assert restricted_ball((0, 3, 0), 3) == {(3, 0), (0, 0), (0, 3)}

    def test_subset_of_deletion_ball(self):
        for x in all_words(7):
            rv = read_vector(x, 2)
            assert restricted_ball(rv, 2) <= deletion_ball(rv)


class TestStickyReadImages:
    def test_reference_word(self):
        assert sticky_read_images((1, 0, 1, 1, 0, 0), 3) == {(1, 1, 2, 2, 2, 1, 0)}

    def test_window_two_tiny(self):
        x = (1, 1)
        assert sticky_read_images(x, 2) == restricted_ball(read_vector(x, 2), 2)

    def test_matches_restricted_ball_exhaustive(self):
        for n in range(2, 9):
            for w in (2, 3, 4):
                for x in all_words(n):
                    assert sticky_read_images(x, w) == restricted_ball(
                        read_vector(x, w), w
                    )


class TestConfusable:
    def test_whole_word_alternation(self):
        assert confusable((0, 1, 0, 1), (1, 0, 1, 0))

    def test_equal_words(self):
        assert not confusable((1, 2, 1), (1, 2, 1))

    def test_embedded_alternation(self):
        assert confusable((1, 1, 2, 2, 2, 1, 0, 0), (1, 2, 1, 2, 2, 1, 0, 0))

    def test_length_mismatch(self):
        with pytest.raises(LengthMismatchError):
            confusable((0, 1), (0, 1, 0))

    def test_matches_bruteforce(self):
        import itertools

        for m in (2, 3, 4, 5):
            space = list(itertools.product(range(3), repeat=m))
            for u in space:
                for v in space:
                    assert confusable(u, v) == confusable_bruteforce(u, v), (u, v)

    def test_characterizes_double_overlap(self):
        # over quaternary words: overlap of deletion balls is 2 exactly
        # for confusable pairs at Hamming distance >= 2
        import itertools

        for q, m in ((3, 4), (4, 3)):
            space = list(itertools.product(range(q), repeat=m))
            for u, v in itertools.combinations(space, 2):
                if sum(a != b for a, b in zip(u, v)) < 2:
                    continue
                both = len(deletion_ball(u) & deletion_ball(v)) == 2
                assert both == confusable(u, v), (u, v)

    def test_read_vectors_never_confusable(self):
        for n in range(1, 9):
            for w in (2, 3):
                vecs = [read_vector(x, w) for x in all_words(n)]
                for i in range(len(vecs)):
                    for j in range(i + 1, len(vecs)):
                        assert not confusable(vecs[i], vecs[j])
