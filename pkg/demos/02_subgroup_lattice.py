"""Walk the full subgroup lattice of the symmetric group on 4 points.

Run:  python3 demos/02_subgroup_lattice.py
"""

from collections import Counter

from sylowlab import (
    all_subgroups,
    build,
    center,
    conjugacy_classes,
    is_normal,
    normalizer,
    quotient,
    subgroup_conjugacy_classes,
    subgroups_of_order,
)

s4 = build("sym:4")
subs = all_subgroups(s4)
print(f"sym:4 has {len(subs)} subgroups")
print("count by order:", dict(sorted(Counter(s.size for s in subs).items())))

print()
print("normal subgroups:")
for sub in subs:
    if is_normal(sub):
        print(f"  order {sub.size:2d}  members {sub.members}")

print()
print("the nine order-2 subgroups fall into conjugacy classes of sizes",
      sorted(len(c) for c in subgroup_conjugacy_classes(subgroups_of_order(s4, 2))))
for sub in subgroups_of_order(s4, 2)[:3]:
    print(f"  normalizer of {sub.members} has order {normalizer(sub).size}")

print()
v4 = next(s for s in subgroups_of_order(s4, 4) if is_normal(s))
quo = quotient(s4, v4)
print(f"sym:4 / V4 is a group of order {quo.group.order} "
      f"(isomorphic to the symmetric group on 3 points)")

print()
part = conjugacy_classes(s4)
print("conjugacy class sizes of sym:4:", sorted(part.class_sizes))
print("center of sym:4 has order", center(s4).size)
