"""Acceptance criteria.  Each test prints one ``PASS``/``FAIL`` line, then asserts.

Run just these with ``pytest -s tests/test_acceptance.py`` or look for the
``ACCEPT`` lines in the verbose suite output.
"""
import bisect
import random
import time

import pytest

from ipgraph.bfs import bfs_all_components
from ipgraph.checks import StrictInvariantChecker
from ipgraph.cli import bench_rows
from ipgraph.corpus import check_case, random_case
from ipgraph.dfs import DfsHooks, dfs_run
from ipgraph.graph import build, ensure_min_out_degree, generate
from ipgraph.oracle import oracle_dfs
from ipgraph.packing import WHITE, BitRegion, ChoiceDictionary, entry_words, pack, read_packed, unpack
from ipgraph.ram import WordArray, run_budgeted, snapshot
from ipgraph.representations import BANDED, STRICT, restore_sorted_standard, swap_representation, to_begin_pointer
from conftest import HOUSE, HOUSE_BP, HOUSE_SWAPPED

CORPUS_SIZE = 1000
CORPUS_MAX_N = 4096


def report(capsys, name, ok, detail):
    with capsys.disabled():
        print(f"\nACCEPT [{'PASS' if ok else 'FAIL'}] {name}: {detail}")


@pytest.fixture(scope="module")
def corpus_results():
    t0 = time.perf_counter()
    results = [check_case(random_case(seed, CORPUS_MAX_N)) for seed in range(CORPUS_SIZE)]
    return results, time.perf_counter() - t0


def test_restore_on_corpus(corpus_results, capsys):
    results, secs = corpus_results
    bad = [r for r in results if r.restore_failures]
    ok = not bad and secs < 60
    report(capsys, "restore guarantee", ok,
           f"{CORPUS_SIZE - len(bad)}/{CORPUS_SIZE} cases restored for dfs, dfs-explore and bfs "
           f"(corpus check took {secs:.1f}s, limit 60s)")
    assert not bad, [str(r.case) for r in bad[:5]]
    assert secs < 60


def test_oracle_equivalence_on_corpus(corpus_results, capsys):
    results, _ = corpus_results
    bad = [r for r in results if r.oracle_failures]
    report(capsys, "oracle equivalence", not bad,
           f"{CORPUS_SIZE - len(bad)}/{CORPUS_SIZE} cases match the DFS streams and BFS multisets")
    assert not bad, [(str(r.case), r.oracle_failures) for r in bad[:5]]


def test_strict_mode_invariants(capsys):
    rng = random.Random(2024)
    passed = checks = 0
    failures = []
    for k in range(200):
        n = rng.randint(3, 64)
        directed = rng.random() < 0.5
        top = n * (n - 1) // (1 if directed else 2)
        e = generate("gnm", n, rng.randint(0, min(top, 3 * n)), seed=k, directed=directed)
        e = ensure_min_out_degree(e, 2, seed=k)
        start = rng.randint(1, n)
        a = build(e)
        before = snapshot(a)
        ck = StrictInvariantChecker(a)
        try:
            dfs_run(a, start, ck, mode=STRICT, observer=ck)
            assert ck.events == oracle_dfs(e, start), "event stream differs from the oracle"
            assert snapshot(a) == before, "array not restored"
        except AssertionError as ex:
            failures.append(f"graph {k}: {ex}")
            continue
        passed += 1
        checks += ck.checks
    report(capsys, "strict-mode invariants", passed == 200,
           f"{passed}/200 graphs, {checks} boundary checks of invariants 1-3 and the +1 done-mark")
    assert not failures, failures[:3]


def test_transform_round_trips(capsys):
    bad = []
    for seed in range(CORPUS_SIZE):
        e = random_case(seed, CORPUS_MAX_N).edges()
        for mode in (BANDED, STRICT):
            a = build(e)
            want = snapshot(a)
            to_begin_pointer(a, mode)
            swap_representation(a)
            restore_sorted_standard(a)
            if snapshot(a) != want:
                bad.append((seed, mode))
    a = WordArray(list(HOUSE), 16)
    to_begin_pointer(a)
    bp = a.words == HOUSE_BP
    swap_representation(a)
    swapped = a.words == HOUSE_SWAPPED
    restore_sorted_standard(a)
    house = a.words == HOUSE
    ok = not bad and bp and swapped and house
    report(capsys, "transform round trips", ok,
           f"{2 * CORPUS_SIZE - len(bad)}/{2 * CORPUS_SIZE} corpus round trips exact (both modes); "
           f"house graph sorted->begin-pointer {bp}, ->swapped {swapped}, ->sorted {house}")
    assert not bad, bad[:5]
    assert bp and swapped and house


@pytest.mark.parametrize("w", [16, 32, 64])
def test_packed_table(w, capsys):
    c = 3
    rng = random.Random(w)
    lines = []
    ok = True
    for n in (2 ** (c + 1) * w, 4 * 2 ** (c + 1) * w, 10 ** 5):
        vals = sorted(rng.randrange(1 << w) for _ in range(n))
        a = WordArray([n if n < 1 << w else 0] + vals + [0], w)
        before = list(a.words)
        t = pack(a, c=c, n=n)
        reads = all(read_packed(t, i) == vals[i - 1] for i in range(1, n + 1))
        # fields are w - (c + 1) bits wide and the footer takes 2^(c+1) entries
        footer = 2 ** (c + 1) * entry_words(n, w) * w
        freed = n * w - n * t.field_width - footer
        cap = t.free_bits >= c * n and freed >= c * n
        unpack(t)
        exact = a.words == before
        ok &= reads and cap and exact
        lines.append(f"n={n} reads={reads} freed={t.free_bits}>={c * n} unpack={exact}")
    report(capsys, f"packed table w={w} c={c}", ok, "; ".join(lines))
    assert ok


def test_peak_registers_constant(capsys):
    peaks = {"dfs": [], "bfs": []}
    for k in (8, 10, 12, 14, 16):
        n = 2 ** k
        a = build(generate("gnm", n, 4 * n, seed=k))
        _, s = run_budgeted(64, lambda r: dfs_run(a, None, DfsHooks(), regs=r))
        peaks["dfs"].append(s.peak_registers)
        _, s = run_budgeted(64, lambda r: bfs_all_components(a, lambda v, d, root: None, regs=r))
        peaks["bfs"].append(s.peak_registers)
    ok = all(len(set(p)) == 1 and max(p) <= 64 for p in peaks.values())
    report(capsys, "in-place contract", ok,
           f"peak registers for n=2^8..2^16: dfs {peaks['dfs']}, bfs {peaks['bfs']} (limit 64)")
    assert ok


def test_linear_time_smoke(capsys):
    rows = list(bench_rows([10 ** 5, 10 ** 6], "gnm", ("dfs", "bfs"), seed=1))
    ok = True
    parts = []
    for algo in ("dfs", "bfs"):
        small, big = [r for r in rows if r["algo"] == algo]
        t = [float(r["seconds"]) / r["m"] for r in (small, big)]
        acc = [(r["reads"] + r["writes"]) / r["m"] for r in (small, big)]
        tr = max(t) / min(t)
        ar = max(acc) / min(acc)
        ok &= tr <= 3 and ar <= 1.2
        parts.append(f"{algo}: time/edge ratio {tr:.2f} (<=3), accesses/edge {acc[0]:.2f} vs {acc[1]:.2f} "
                     f"ratio {ar:.3f} (<=1.2)")
    report(capsys, "linear-time smoke", ok, "; ".join(parts))
    assert ok


def test_choice_dictionary_schedule(capsys):
    rng = random.Random(99)
    n, w = 1500, 32
    nw = -(-ChoiceDictionary.size_bits(n, w) // w)
    d = ChoiceDictionary(BitRegion(WordArray([0] * nw, w), 0, nw), 0, n)
    color = [WHITE] * (n + 1)
    members = [list(range(1, n + 1)), [], [], []]  # sorted per color
    cursor = [1] * 4
    observations = mismatches = 0
    for _ in range(10 ** 5):
        op = rng.random()
        q = rng.randrange(4)
        if op < 0.5:
            v = rng.randint(1, n)
            old = color[v]
            if old != q:
                members[old].pop(bisect.bisect_left(members[old], v))
                bisect.insort(members[q], v)
                color[v] = q
            d.set_color(v, q)
            continue
        observations += 1
        if op < 0.75:
            v = rng.randint(1, n)
            mismatches += d.color(v) != color[v]
        elif op < 0.8:
            d.reset_cursor(q)
            cursor[q] = 1
        else:
            s = members[q]
            i = bisect.bisect_left(s, cursor[q])
            want = s[i] if i < len(s) else (s[0] if s else 0)
            if want:
                cursor[q] = want
            mismatches += d.choice(q) != want
    ok = mismatches == 0
    report(capsys, "choice dictionary", ok,
           f"10^5 operations, {observations} observations, {mismatches} mismatches against the map oracle")
    assert ok

