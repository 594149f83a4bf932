# In-place DFS: watch the array change while the search runs, then check
# that it comes back bit for bit.

# %%
from ipgraph import EdgeList, build, dfs_run, dfs_run_explore, generate, snapshot
from ipgraph.dfs import DFS_REGISTERS, DfsHooks
from ipgraph.oracle import oracle_dfs
from ipgraph.ram import run_budgeted

house = EdgeList(5, False, [(1, 2), (1, 5), (2, 3), (2, 4), (3, 4), (4, 5)])
a = build(house)
before = snapshot(a)


def watch(event, arr, start):
    # the observer sees the raw cells; reading .words bypasses the access counters
    if event.endswith(":after"):
        n = arr.words[0]
        print(f"{event:<16} T={arr.words[1:n + 1]}")


events = dfs_run(a, 1, observer=watch)
print(events)
assert events == oracle_dfs(house, 1)
assert snapshot(a) == before

# %%
# The explore variant also reports every edge, before and after it is looked at.
for ev in dfs_run_explore(a, 3)[:8]:
    print(ev)

# %%
# Working memory stays at a fixed number of registers whatever the size.
for n in (2 ** 8, 2 ** 11, 2 ** 14):
    g = build(generate("gnm", n, 4 * n, seed=n))
    _, stats = run_budgeted(64, lambda r: dfs_run(g, None, DfsHooks(), regs=r), g)
    print(f"n={n:>6}  peak registers={stats.peak_registers} (declared {DFS_REGISTERS})  "
          f"accesses per cell={stats.accesses / len(g):.1f}")
