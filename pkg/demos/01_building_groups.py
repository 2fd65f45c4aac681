"""Build concrete groups from specs, tables and generators, then poke at elements.

Run:  python3 demos/01_building_groups.py
"""

from sylowlab import (
    Permutation,
    build,
    conjugate,
    element_order,
    group_from_generators,
    group_from_table,
    power,
)

print("== groups from the spec grammar ==")
for text in ("cyclic:12", "dihedral:8", "sym:4", "q8", "elab:3^2", "prod(sym:3,cyclic:2)"):
    group = build(text)
    print(f"{text:24s} order {group.order:3d}  abelian={group.is_abelian()}")

print()
print("== the same symmetric group, straight from two generators ==")
s3 = group_from_generators([Permutation([1, 2, 0]), Permutation([1, 0, 2])], label="S3")
for i in range(s3.order):
    print(f"  element {i}: {s3.name_of(i):10s} order {element_order(s3, i)}")

print()
print("== element arithmetic ==")
c12 = build("cyclic:12")
print("g^8 has order", element_order(c12, power(c12, 1, 8)))
print("g^-3 is index", power(c12, 1, -3), "(negative exponents reduce mod the order)")

x = s3.element_names.index("(1 2)")
t = s3.element_names.index("(1 2 3)")
print(f"conjugating (1 2) by (1 2 3) gives {s3.name_of(conjugate(s3, x, t))}")

print()
print("== hand-written tables are validated ==")
mod4 = group_from_table([[ (i + j) % 4 for j in range(4)] for i in range(4)])
print("mod-4 table accepted, element orders:", mod4.elem_order.tolist())
try:
    group_from_table([[0, 1], [1, 1]])
except Exception as err:
    print("broken table rejected:", err)
