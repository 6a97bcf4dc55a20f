import itertools
import json

import pytest
from hypothesis import given

from conftest import partitions
from grassembed.partitions import Cell, Partition, cells, compare, conjugate, dominates, partitions_of


def test_canonical_form_trims_zeros():
    assert Partition((2, 2, 0, 0)) == Partition((2, 2))
    assert Partition((2, 2, 0, 0)).parts == (2, 2)
    assert Partition(()) == Partition((0, 0))
    assert hash(Partition((3, 1, 0))) == hash(Partition((3, 1)))


@pytest.mark.parametrize("bad", [(1, 2), (2, -1), (0, 1)])
def test_rejects_invalid(bad):
    with pytest.raises(ValueError):
        Partition(bad)


def test_padded():
    assert Partition((2, 2)).padded(4) == (2, 2, 0, 0)
    with pytest.raises(ValueError):
        Partition((1, 1, 1)).padded(2)


def test_json_round_trip():
    p = Partition((2, 2))
    assert json.dumps(p.to_json()) == "[2, 2]"
    assert Partition(json.loads("[2, 2]")) == p


@pytest.mark.parametrize(
    "p, expected",
    [((), ()), ((2, 2), (2, 2)), ((3, 1), (2, 1, 1))],
)
def test_conjugate_examples(p, expected):
    assert conjugate(Partition(p)) == Partition(expected)


def test_conjugate_involution_exhaustive():
    for size in range(21):
        for p in partitions_of(size):
            assert conjugate(conjugate(p)) == p


def test_partition_counts():
    # p(n) for n = 0..10
    assert [sum(1 for _ in partitions_of(n)) for n in range(11)] == [1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42]


def test_cells_examples():
    assert cells(Partition((1, 1))) == [Cell(1, 1, 2, 0), Cell(2, 1, 1, -1)]
    c = cells(Partition((2, 2)))
    assert [x.hook for x in c] == [3, 2, 2, 1]
    assert [x.content for x in c] == [0, 1, -1, 0]
    assert cells(Partition(())) == []


def _arm_leg_hooks(p):
    # independent: count boxes to the right and below directly on the diagram
    boxes = {(r, c) for r, length in enumerate(p.parts, 1) for c in range(1, length + 1)}
    out = []
    for r, c in sorted(boxes):
        arm = sum(1 for (r2, c2) in boxes if r2 == r and c2 > c)
        leg = sum(1 for (r2, c2) in boxes if c2 == c and r2 > r)
        out.append(arm + leg + 1)
    return out


@given(partitions(max_rows=6, max_part=6))
def test_hooks_match_arm_leg_count(p):
    assert [x.hook for x in cells(p)] == _arm_leg_hooks(p)
    assert len(cells(p)) == p.size


@pytest.mark.parametrize("p, q", [((2,), (1, 1)), ((2, 2), (2, 1, 1))])
def test_compare_dominance_examples(p, q):
    assert compare(Partition(p), Partition(q)) == -1
    assert compare(Partition(q), Partition(p)) == 1


@given(partitions())
def test_compare_reflexive(p):
    assert compare(p, p) == 0


@given(partitions(), partitions(), partitions())
def test_compare_total_order(p, q, r):
    assert compare(p, q) == -compare(q, p)
    if compare(p, q) == 0:
        assert p == q
    if compare(p, q) <= 0 and compare(q, r) <= 0:
        assert compare(p, r) <= 0


def test_compare_refines_dominance():
    for size in range(1, 9):
        ps = list(partitions_of(size))
        for p, q in itertools.permutations(ps, 2):
            if dominates(p, q):
                assert compare(p, q) == -1


def test_sorting_uses_compare():
    ps = [Partition(x) for x in [(1, 1), (2,), (3,), (1,)]]
    assert sorted(ps) == [Partition((3,)), Partition((2,)), Partition((1, 1)), Partition((1,))]
