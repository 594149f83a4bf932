# Walk through the three array layouts on a five-vertex "house" graph:
# the 5-cycle 1-2-3-4-5 plus the chord 2-4.

# %%
from ipgraph import EdgeList, build
from ipgraph.representations import detect, restore_sorted_standard, swap_representation, to_begin_pointer


def show(a, title):
    n = a.words[0]
    print(f"{title:<24} {detect(a).value}")
    print("   n |", a.words[0], "| T", a.words[1:n + 1], "| L", a.words[n + 1], "| adj", a.words[n + 2:])


house = EdgeList(5, False, [(1, 2), (1, 5), (2, 3), (2, 4), (3, 4), (4, 5)])
a = build(house)
print("word width:", a.width, "bits, cells:", len(a))
show(a, "sorted standard")

# %%
# Adjacency cells now hold the start of the neighbour's own list instead of its name.
to_begin_pointer(a)
show(a, "begin-pointer")

# %%
# Each list's first cell takes the owner's name; the displaced pointer moves into T.
swap_representation(a)
show(a, "swapped begin-pointer")

# %%
restore_sorted_standard(a)
show(a, "restored")
assert a == build(house)

# %%
# Every step used a handful of registers and touched each cell a constant number of times.
a.reset_stats()
to_begin_pointer(a)
swap_representation(a)
restore_sorted_standard(a)
print(f"round trip: {a.reads} reads, {a.writes} writes on {len(a)} cells")
