import pytest
from hypothesis import given
from hypothesis import strategies as st

from ipgraph.corpus import random_case
from ipgraph.graph import build
from ipgraph.ram import RegisterFile, WordArray, run_budgeted, snapshot
from ipgraph.representations import (
    BANDED,
    STRICT,
    CorruptionError,
    Rep,
    RepresentationError,
    ValueBands,
    detect,
    restore_sorted_standard,
    swap_representation,
    to_begin_pointer,
    unswap_representation,
)
from conftest import HOUSE, HOUSE_BP, HOUSE_SWAPPED
from strategies import edge_lists


def test_house_to_bp_to_swapped_and_back(house):
    to_begin_pointer(house)
    assert house.words == HOUSE_BP
    swap_representation(house)
    assert house.words == HOUSE_SWAPPED
    restore_sorted_standard(house)
    assert house.words == HOUSE


def test_unswap_swapped_gives_bp():
    a = WordArray(HOUSE_SWAPPED, 16)
    assert detect(a) is Rep.SWAPPED_BEGIN_POINTER
    unswap_representation(a)
    assert a.words == HOUSE_BP
    with pytest.raises(RepresentationError):
        unswap_representation(a)


def test_restore_from_bp():
    a = WordArray(HOUSE_BP, 16)
    assert detect(a) is Rep.BEGIN_POINTER
    restore_sorted_standard(a)
    assert a.words == HOUSE


def test_detect_house(house):
    assert detect(house) is Rep.SORTED_STANDARD


def test_single_vertex():
    a = WordArray([1, 3, 0], 8)
    to_begin_pointer(a)
    assert a.words == [1, 1, 0]
    swap_representation(a)
    assert a.words == [1, 1, 0]
    unswap_representation(a)
    assert a.words == [1, 1, 0]
    restore_sorted_standard(a)
    assert a.words == [1, 3, 0]


@pytest.mark.parametrize("mode, cells", [(BANDED, [3, 5, 2, 3, 2, 9, 10]), (STRICT, [3, 5, 2, 3, 2, 2, 3])])
def test_directed_degree_zero_targets(directed3, mode, cells):
    a = build(directed3)
    to_begin_pointer(a, mode)
    assert a.words == cells
    restore_sorted_standard(a, swapped=False)
    assert a.words == [3, 5, 7, 7, 2, 2, 3]


def test_wrong_representation_is_rejected(house):
    with pytest.raises(RepresentationError):
        swap_representation(house)
    to_begin_pointer(house)
    with pytest.raises(RepresentationError):
        to_begin_pointer(house)
    with pytest.raises(ValueError):
        to_begin_pointer(build_house_again(), mode="loose")


def build_house_again():
    return WordArray(HOUSE, 16)


def test_restore_rejects_cells_outside_every_band():
    a = WordArray(HOUSE_SWAPPED, 16)
    a.words[11] = 60  # beyond 2n + L + 2 = 24, and no T entry points here
    with pytest.raises(CorruptionError) as ex:
        restore_sorted_standard(a)
    assert ex.value.index == 11


def test_value_bands_are_disjoint_and_ordered():
    for n in range(1, 12):
        for L in range(0, 30):
            b = ValueBands(n, L)
            rs = list(b.bands().values())
            for r1, r2 in zip(rs, rs[1:]):
                assert r1.stop <= r2.start
            assert rs[-1].stop - 1 <= b.max_value
            assert b.classify(0) is None and b.classify(n + 1) is None


def test_house_bands():
    b = ValueBands(5, 12)
    assert b.classify(3) == "names"
    assert b.classify(17) == "positions"
    assert b.classify(19) == "sentinel"
    assert b.classify(20) == "deg0ref"
    assert b.classify(7 + 18) == "donePos"
    assert b.max_value == 3 * 5 + 2 * 12 + 3


@given(edge_lists(max_n=30), st.sampled_from([BANDED, STRICT]))
def test_round_trip_property(e, mode):
    a = build(e)
    orig = list(a.words)
    to_begin_pointer(a, mode)
    swap_representation(a)
    restore_sorted_standard(a)
    assert a.words == orig


@given(edge_lists(max_n=30))
def test_unswap_inverts_swap(e):
    a = build(e)
    to_begin_pointer(a)
    bp = list(a.words)
    if detect(a) is not Rep.BEGIN_POINTER:
        return  # edgeless graphs look sorted already
    swap_representation(a)
    unswap_representation(a)
    assert a.words == bp


def test_round_trip_on_corpus():
    for seed in range(1000):
        case = random_case(seed, max_n=256)
        a = build(case.edges())
        d = snapshot(a)
        to_begin_pointer(a)
        if a.words[a.words[0] + 1]:
            swap_representation(a)
            restore_sorted_standard(a)
        else:
            restore_sorted_standard(a, swapped=False)
        assert snapshot(a) == d, str(case)


@pytest.mark.parametrize("seed", range(20))
def test_each_transform_is_linear_and_budgeted(seed):
    a = build(random_case(seed, max_n=2000).edges())
    N = len(a)

    def step(f):
        a.reset_stats()
        _, stats = run_budgeted(64, f, a)
        assert stats.accesses <= 6 * N
        assert stats.peak_registers <= 64

    step(lambda r: to_begin_pointer(a, BANDED, r))
    step(lambda r: swap_representation(a, r) if detect(a) is Rep.BEGIN_POINTER else None)
    step(lambda r: restore_sorted_standard(a, r))
