"""Tour of the width parameters on the built-in families.

Run:  python3 demos/widths_tour.py
"""

from uptree import (
    gen_complete_binary,
    gen_hpd_family,
    gen_quintary_family,
    parse_tree,
    param_report,
    rank,
    serialize_tree,
)


def row(name, t):
    rep = param_report(t)
    r = rank(t).root_rank()
    print(f"{name:<14} n={rep.n:<6} rpw={rep.rpw:<3} rank={r:<3} hpd={rep.hpd}")


print("A small tree and its numbers:")
t = parse_tree("(()()(()()))")
print(" ", serialize_tree(t))
row("  example", t)

print()
print("Complete binary trees: every parameter is the height.")
for h in range(1, 6):
    row(f"binary h={h}", gen_complete_binary(h))

print()
print("The quintary family: child order costs almost a factor of two.")
print("Reorderable drawings need width i, order-preserving ones 2i-1.")
for i in range(1, 5):
    row(f"quintary i={i}", gen_quintary_family(i))

print()
print("Heavy-path depth can exceed rpw by any margin:")
for i in range(2, 7):
    row(f"hpd fam i={i}", gen_hpd_family(i))
