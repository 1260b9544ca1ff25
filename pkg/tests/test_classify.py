"""Exhaustive classification of colliding and decomposable pin words."""

from hypothesis import given, settings

from pinclasses.classify import (
    SYMMETRIES,
    all_pin_words,
    collision_group,
    collision_groups_at,
    decomposable_words,
    is_decomposable_word,
    overcount_series,
    verify_tables,
)
from pinclasses.cperm import is_box_indecomposable
from pinclasses.pimap import pi_map
from pinclasses.pinword import PinWord
from strategies import pin_words


class TestWordEnumeration:
    def test_counts(self):
        assert len(all_pin_words(1)) == 4
        for n in range(2, 9):
            assert len(all_pin_words(n)) == 2 ** (n + 2)

    def test_all_distinct_and_right_length(self):
        for n in range(1, 7):
            words = all_pin_words(n)
            assert len(set(words)) == len(words)
            assert all(w.length == n for w in words)


class TestDecomposableWords:
    def test_counts_stabilize_at_sixteen(self):
        assert len(decomposable_words(1)) == 0
        assert len(decomposable_words(2)) == 8
        assert len(decomposable_words(3)) == 8
        for n in range(4, 9):
            assert len(decomposable_words(n)) == 16

    def test_membership_examples(self):
        dec2 = {str(w) for w in decomposable_words(2)}
        assert dec2 == {"1l", "1d", "2d", "2r", "3r", "3u", "4u", "4l"}

    def test_matches_image_decomposability(self):
        for n in range(1, 7):
            expected = {
                w for w in all_pin_words(n) if not is_box_indecomposable(pi_map(w))
            }
            assert decomposable_words(n) == frozenset(expected)

    @given(pin_words(max_letters=7))
    @settings(max_examples=100)
    def test_predicate_agrees_with_image(self, w):
        assert is_decomposable_word(w) == (not is_box_indecomposable(pi_map(w)))


class TestCollisionGroups:
    def test_group_sizes_by_length(self):
        expect = {1: [], 2: [2] * 4, 3: [2] * 8, 4: [4] * 2, 5: [2] * 12}
        for n, sizes in expect.items():
            groups = collision_groups_at(n)
            assert sorted(len(g) for g in groups) == sizes
        for n in (6, 7, 8):
            assert sorted(len(g) for g in collision_groups_at(n)) == [2] * 8

    def test_quadruples(self):
        quads = [g for g in collision_groups_at(4) if len(g) == 4]
        names = {frozenset(str(w) for w in g) for g in quads}
        assert frozenset({"1ldr", "2dru", "3rul", "4uld"}) in names
        assert frozenset({"1drd", "2rdr", "2dld", "3ldl"}) not in names

    def test_group_lookup_round_trip(self):
        for n in range(2, 7):
            for group in collision_groups_at(n):
                for w in group:
                    assert collision_group(w) == group

    def test_singleton_for_non_colliding(self):
        w = PinWord(1, "ururu")
        assert collision_group(w) == frozenset({w})

    @given(pin_words(max_letters=6))
    @settings(max_examples=100)
    def test_groups_share_one_image(self, w):
        group = collision_group(w)
        images = {pi_map(x) for x in group}
        assert images == {pi_map(w)}

    def test_groups_partition_colliding_words(self):
        for n in range(2, 7):
            groups = collision_groups_at(n)
            seen = set()
            for g in groups:
                assert not (seen & g)
                seen |= g
            # every colliding word of this length is covered
            by_image = {}
            for w in all_pin_words(n):
                by_image.setdefault(pi_map(w), set()).add(w)
            colliding = {w for ws in by_image.values() if len(ws) > 1 for w in ws}
            assert seen == colliding


class TestSymmetries:
    def test_eight_symmetries(self):
        assert len(SYMMETRIES) == 8
        assert len({s.name for s in SYMMETRIES}) == 8

    @given(pin_words(max_letters=6))
    @settings(max_examples=80)
    def test_word_action_commutes_with_images(self, w):
        for s in SYMMETRIES:
            assert pi_map(s.word(w)) == s.perm(pi_map(w))

    def test_collision_groups_closed_under_symmetry(self):
        for n in (2, 3, 4):
            groups = collision_groups_at(n)
            for s in SYMMETRIES:
                mapped = frozenset(
                    frozenset(s.word(w) for w in g) for g in groups
                )
                assert mapped == groups

    def test_decomposables_closed_under_symmetry(self):
        for n in (2, 3, 4, 5):
            dec = decomposable_words(n)
            for s in SYMMETRIES:
                assert frozenset(s.word(w) for w in dec) == dec


class TestOvercountSeries:
    def test_full_length_slices(self):
        # All words of length n: every group is fully present.
        factor_sets = {n: set(all_pin_words(n)) for n in range(1, 6)}
        oc = overcount_series(factor_sets)
        assert oc == {1: 0, 2: 4, 3: 8, 4: 6, 5: 12}

    def test_partial_group_counts_nothing(self):
        g = collision_group(PinWord(1, "ldr"))
        one = {next(iter(g))}
        assert overcount_series({4: one}) == {4: 0}
        two = set(list(g)[:2])
        assert overcount_series({4: two}) == {4: 1}
        assert overcount_series({4: set(g)}) == {4: 3}


class TestVerifyTables:
    def test_reports_match(self):
        reports = verify_tables(6)
        assert [r.length for r in reports] == [1, 2, 3, 4, 5, 6]
        assert all(r.table_match for r in reports)
        assert all(r.discrepancies == [] for r in reports)

    def test_parallel_agrees_with_serial(self):
        serial = verify_tables(6, jobs=1)
        parallel = verify_tables(6, jobs=2)
        for a, b in zip(serial, parallel):
            assert a.to_json() == b.to_json()

    def test_json_schema(self):
        report = verify_tables(2)[0]
        data = report.to_json()
        assert set(data) == {
            "length",
            "decomposable_words",
            "collision_groups",
            "table_match",
            "discrepancies",
        }
        assert data["length"] == 1
        assert data["decomposable_words"] == []

    def test_rejects_tiny_bound(self):
        import pytest

        with pytest.raises(ValueError):
            verify_tables(1)
