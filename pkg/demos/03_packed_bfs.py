# BFS needs two bits per vertex for its colors.  They come from packing the
# sorted table T: the top bits of each entry are shared by long runs and can be
# stored once in a small footer.

# %%
import numpy as np

from ipgraph import bfs_run, build, generate, snapshot
from ipgraph.packing import pack, read_packed, unpack

a = build(generate("gnm", 2000, 8000, seed=3))
n = a.words[0]
print("n =", n, " width =", a.width)
T = list(a.words[1:n + 1])
t = pack(a)
print("region starts:", t.starts)
print(f"field width {t.field_width} bits, footer {t.footer_words} words, freed {t.free_bits} bits "
      f"({t.free_bits / n:.2f} per vertex)")
assert [read_packed(t, v) for v in range(1, n + 1)] == T
unpack(t)
assert a.words[1:n + 1] == T

# %%
# bfs_run packs, runs rounds over the two frontier colors, and unpacks.
before = snapshot(a)
out = np.array(bfs_run(a, 1))
assert snapshot(a) == before
dist = out[:, 1]
print("reached", len(out), "vertices; vertices per distance:", np.bincount(dist).tolist())

# %%
# Accesses per edge stay flat as the graph grows.
for m in (10 ** 4, 4 * 10 ** 4, 1.6 * 10 ** 5):
    m = int(m)
    g = build(generate("gnm", m // 4, m, seed=m))
    g.reset_stats()
    bfs_run(g, 1, lambda v, d: None)
    print(f"m={m:>7}  accesses per edge={(g.reads + g.writes) / m:.2f}")
