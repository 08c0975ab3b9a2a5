import threading

import pytest

from conftest import P
from kingperm.inflation import P2413, P3142
from kingperm.kingdom import generate_kings
from kingperm.mobius import (H_SET, ONE, MobiusTable, is_in_H, mobius,
                             mobius_bottom, mobius_downset_labels,
                             mobius_naive)
from kingperm.patterns import avoids, contains
from kingperm.poset import covers_below, downset, interval

FIG1 = {"1": 1, "2413": -1, "3142": -1, "24153": 1, "42513": 1, "41352": 0,
        "52413": 0, "425163": -1, "524163": 0, "524613": 0, "5246173": 0}
FIG2 = {"1": 1, "2413": -1, "3142": -1, "24153": 1, "41352": 0, "52413": 0, "524163": 0}


class TestMobius:
    def test_examples(self):
        assert mobius(ONE, P2413) == -1
        assert mobius(P("24153"), P("24153")) == 1
        assert mobius(ONE, P("5246173")) == 0

    def test_not_below(self):
        assert mobius(P2413, P3142) == 0
        assert mobius(P("24153"), P("41352")) == 0

    def test_bottom(self):
        assert mobius_bottom(P("24153")) == 1
        assert mobius_bottom(P("41352")) == 0
        assert mobius_bottom(P("425163")) == -1

    def test_general_tau(self):
        # [2413, 524163] = {2413, 24153, 52413, 524163}: a 4-element diamond
        assert mobius(P2413, P("524163")) == 1
        assert mobius(P2413, P("24153")) == -1

    def test_rejects(self):
        with pytest.raises(ValueError):
            mobius(ONE, P("1234"))
        with pytest.raises(ValueError):
            mobius(P("12"), P2413)

    @pytest.mark.parametrize("n", range(4, 7))
    def test_memo_matches_naive(self, n):
        for s in generate_kings(n):
            for t in downset(s).nodes:
                assert mobius(t, s) == mobius_naive(t, s)

    @pytest.mark.parametrize("n", range(2, 8))
    def test_closed_interval_sums_to_zero(self, n):
        table = MobiusTable()
        for s in generate_kings(n):
            assert sum(mobius_bottom(x, table) for x in interval(ONE, s)) == 0

    def test_shortcut_agrees(self):
        plain, fast = MobiusTable(), MobiusTable()
        for n in (5, 6, 7):
            for s in generate_kings(n):
                assert mobius_bottom(s, plain) == mobius_bottom(s, fast, shortcut=True)

    def test_table_entries(self):
        table = MobiusTable()
        mobius_bottom(P("524163"), table)
        assert table.get(ONE, ONE) == 1
        assert table.get(ONE, P("24153")) == 1
        assert len(table) == 7

    def test_shared_table_threads(self):
        table = MobiusTable()
        kings = list(generate_kings(6))
        expected = {s: mobius_bottom(s) for s in kings}
        errors = []

        def work(chunk):
            for s in chunk:
                if mobius_bottom(s, table) != expected[s]:
                    errors.append(s)

        threads = [threading.Thread(target=work, args=(kings[i::4],)) for i in range(4)]
        for t in threads:
            t.start()
        for t in threads:
            t.join()
        assert not errors


class TestLabels:
    def test_first_figure(self):
        labels = mobius_downset_labels(downset(P("5246173")))
        assert {x.compact(): v for x, v in labels.items()} == FIG1

    def test_second_figure(self):
        labels = mobius_downset_labels(downset(P("524163")))
        assert {x.compact(): v for x, v in labels.items()} == FIG2

    def test_two_chain(self):
        assert mobius_downset_labels(downset(P2413)) == {ONE: 1, P2413: -1}


class TestH:
    def test_membership(self):
        assert is_in_H(P("24153")) and is_in_H(P("35142"))
        assert not is_in_H(P("41352"))

    def test_characterization(self):
        both = {p for p in generate_kings(5) if contains(p, P2413) and contains(p, P3142)}
        assert both == H_SET
        for p in generate_kings(5):
            assert (mobius_bottom(p) == 1) == is_in_H(p)
            assert mobius_bottom(p) in (0, 1)

    def test_final_instance(self):
        s = P("6241537")
        assert mobius_bottom(s) == 0
        assert [x for x in downset(s).nodes if is_in_H(x)] == [P("24153")]


class TestVanishing:
    @pytest.mark.parametrize("n", range(5, 8))
    def test_avoiders_vanish(self, n):
        table = MobiusTable()
        for s in generate_kings(n):
            if avoids(s, P2413) or avoids(s, P3142):
                assert mobius_bottom(s, table) == 0

    @pytest.mark.parametrize("n", range(4, 8))
    def test_unique_cover(self, n):
        table = MobiusTable()
        for s in generate_kings(n):
            both = [c for c in covers_below(s) if contains(c, P2413) and contains(c, P3142)]
            if len(both) == 1:
                assert mobius_bottom(s, table) == 0
