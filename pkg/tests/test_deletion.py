import random

import pytest
from hypothesis import given, settings

from conftest import P, all_perms, perms
from kingperm.deletion import (HORIZONTAL, VERTICAL, delete_position,
                               delete_value, delete_values,
                               delete_values_at_once, deletion_trace, sep_h,
                               sep_v, separators)
from kingperm.kingdom import generate_kings
from kingperm.perm_core import inverse, is_king, reverse, standardize


def drop_then_standardize(p, position):
    return standardize([v for k, v in enumerate(p, 1) if k != position])


class TestDeletePosition:
    @pytest.mark.parametrize("p,i,expected", [
        ("641325", 2, "51324"),
        ("12", 1, "1"),
        ("7426153", 5, "631542"),
        ("7426153", 2, "625143"),
    ])
    def test_examples(self, p, i, expected):
        assert delete_position(P(p), i) == P(expected)

    def test_errors(self):
        with pytest.raises(IndexError):
            delete_position(P("3142"), 5)
        with pytest.raises(ValueError):
            delete_position(P("1"), 1)

    @given(perms(min_size=2, max_size=12))
    def test_matches_standardization(self, p):
        for i in range(1, len(p) + 1):
            assert delete_position(p, i) == drop_then_standardize(p, i)


class TestDeleteValue:
    @pytest.mark.parametrize("p,v,expected", [
        ("641325", 4, "51324"),
        ("361472958", 5, "35146287"),
        ("7426153", 3, "632514"),
        ("7426153", 1, "631542"),
        ("7426153", 5, "642513"),
        ("7426153", 6, "642153"),
        ("7426153", 4, "625143"),
        ("35146287", 8, "3514627"),
        ("361472958", 3, "51362847"),
    ])
    def test_examples(self, p, v, expected):
        assert delete_value(P(p), v) == P(expected)

    def test_errors(self):
        with pytest.raises(ValueError):
            delete_value(P("3142"), 0)


class TestDeleteValues:
    def test_ascending_worked_example(self):
        trace = deletion_trace(P("571386249"), (1, 2, 7, 8))
        assert trace == [P("46275138"), P("3516427"), P("315426"), P("31425")]

    def test_descending_worked_example(self):
        trace = deletion_trace(P("571386249"), (8, 7, 2, 1))
        assert trace == [P("57136248"), P("5136247"), P("412536"), P("31425")]

    def test_singleton(self):
        assert delete_values(P("7426153"), [3]) == delete_value(P("7426153"), 3)

    def test_errors(self):
        with pytest.raises(ValueError):
            delete_values(P("3142"), [1, 1])
        with pytest.raises(ValueError):
            delete_values(P("3142"), [5])
        with pytest.raises(ValueError):
            delete_values(P("3142"), [1, 2, 3, 4])

    @settings(max_examples=300)
    @given(perms(min_size=2, max_size=12))
    def test_agrees_with_one_shot(self, p):
        rng = random.Random(hash(p))
        vs = rng.sample(range(1, len(p) + 1), rng.randint(1, len(p) - 1))
        assert delete_values(p, vs) == delete_values_at_once(p, vs)


class TestCommutation:
    @pytest.mark.parametrize("n", range(3, 7))
    def test_exhaustive(self, n):
        for p in all_perms(n):
            for i in range(2, n + 1):
                for j in range(1, i):
                    assert delete_position(delete_position(p, i), j) == \
                        delete_position(delete_position(p, j), i - 1)
                    assert delete_value(delete_value(p, i), j) == \
                        delete_value(delete_value(p, j), i - 1)

    @given(perms(min_size=7, max_size=12))
    def test_random(self, p):
        n = len(p)
        for i in range(2, n + 1):
            for j in range(1, i):
                assert delete_position(delete_position(p, i), j) == \
                    delete_position(delete_position(p, j), i - 1)

    def test_first_diagram(self):
        s = P("7426153")
        left = delete_value(delete_value(s, 4), 1)
        right = delete_value(delete_value(s, 1), 3)
        assert delete_value(s, 4) == P("625143")
        assert delete_value(s, 1) == P("631542")
        assert left == right == P("51432")
        # as positions: nabla_4 after nabla_2, nabla_2 after nabla_5
        assert delete_position(delete_position(s, 2), 4) == P("51432")
        assert delete_position(delete_position(s, 5), 2) == P("51432")

    @given(perms(min_size=2, max_size=12))
    def test_two_block_collapse(self, p):
        for j in range(1, len(p)):
            if abs(p[j - 1] - p[j]) == 1:
                assert delete_position(p, j) == delete_position(p, j + 1)


class TestSeparators:
    def test_worked_example(self):
        s = P("132465879")
        assert sep_v(s) == {2, 3, 6, 7}
        assert sep_h(s) == {2, 3, 5, 8}

    def test_value_seven_is_vertical_inside_a_block(self):
        s = P("132465879")
        rep = {r.value: r for r in separators(s)}[7]
        assert rep.kinds == (VERTICAL,)
        assert rep.vertical_witness == (7, 8, 9)

    @pytest.mark.parametrize("n", range(1, 10))
    def test_identity_has_none(self, n):
        assert separators(tuple(range(1, n + 1))) == []

    def test_diagram_separators(self):
        reps = {r.value: r for r in separators(P("7426153"))}
        assert reps[1].is_vertical and reps[1].vertical_witness == (4, 5, 6)
        assert reps[4].is_horizontal and reps[4].horizontal_witness == (6, 7)

    def test_report_invariants(self):
        for p in generate_kings(7):
            for r in separators(p):
                assert r.kinds
                if r.is_vertical:
                    j1, i, j2 = r.vertical_witness
                    assert (i - j1, j2 - i) == (1, 1)
                    assert abs(p[j1 - 1] - p[j2 - 1]) == 1 and p[i - 1] == r.value
                if r.is_horizontal:
                    a, b = r.horizontal_witness
                    assert b == a + 1
                    assert {p[a - 1], p[b - 1]} == {r.value - 1, r.value + 1}

    def test_json(self):
        js = [r.to_json() for r in separators(P("7426153"))]
        one = next(r for r in js if r["value"] == 1)
        assert one == {"value": 1, "kinds": [VERTICAL], "vertical_witness": [4, 5, 6],
                       "horizontal_witness": None}

    def test_small_sizes_have_none(self):
        assert separators(P("1")) == [] and separators(P("21")) == []

    @settings(max_examples=500)
    @given(perms(min_size=3, max_size=10))
    def test_positional_duality(self, p):
        # vertical separator at position i <=> i is a horizontal separator of the inverse
        assert {p.position_of(a) for a in sep_v(p)} == sep_h(inverse(p))

    @settings(max_examples=500)
    @given(perms(min_size=3, max_size=10))
    def test_reverse_invariance_and_boundaries(self, p):
        assert sep_v(p) == sep_v(reverse(p))
        assert sep_h(p) == sep_h(reverse(p))
        n = len(p)
        assert 1 not in sep_h(p) and n not in sep_h(p)
        assert p[0] not in sep_v(p) and p[-1] not in sep_v(p)

    @pytest.mark.parametrize("n", range(4, 9))
    def test_soundness_for_kings(self, n):
        for p in generate_kings(n):
            seps = sep_v(p) | sep_h(p)
            for v in range(1, n + 1):
                assert (not is_king(delete_value(p, v))) == (v in seps)

    def test_both_kinds_single_report(self):
        reps = separators(P("132465879"))
        both = [r.value for r in reps if r.kinds == (VERTICAL, HORIZONTAL)]
        assert both == [2, 3]
        assert len({r.value for r in reps}) == len(reps)
