"""The constructive Sylow tower and chief series machinery.

Run:  python3 demos/03_sylow_towers.py
"""

from sylowlab import (
    build,
    center,
    central_element_of_order_p,
    chief_series,
    is_normal,
    subgroups_of_order,
    sylow_chain,
    whole_group,
)

s4 = build("sym:4")
print("== Sylow towers in sym:4 ==")
for p in (2, 3):
    chain = sylow_chain(s4, p)
    orders = ",".join(str(s.size) for s in chain.chain)
    print(f"p={p}: tower of orders {orders}")
    for sub in chain.chain:
        print(f"   order {sub.size:2d}: {sub.members}")
    count = len(subgroups_of_order(s4, chain.top.size))
    print(f"   the group has {count} Sylow {p}-subgroups in total")

print()
print("== chief series of p-groups ==")
for spec in ("q8", "dihedral:16", "cyclic:27"):
    group = build(spec)
    series = chief_series(group).series
    orders = [t.size for t in series]
    print(f"{spec:12s} series orders {orders}, "
          f"all normal: {all(is_normal(t) for t in series)}")

print()
print("== every nontrivial normal subgroup of a p-group meets the center ==")
q8 = build("q8")
witness = central_element_of_order_p(q8, whole_group(q8))
print(f"q8: central element of order 2 is {q8.name_of(witness)}; "
      f"center = {[q8.name_of(i) for i in center(q8).members]}")
