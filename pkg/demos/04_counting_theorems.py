"""Solution counts, divisibility, and coprime commuting decompositions.

Run:  python3 demos/04_counting_theorems.py
"""

from math import gcd

from sylowlab import (
    build,
    coprime_decomposition,
    count_solutions,
    element_order,
    verify_coprime_product,
    verify_divisibility,
    verify_order_p_form,
)

print("== solutions of x^n = e, and the gcd divisibility law ==")
for spec in ("sym:3", "cyclic:12", "q8", "alt:4"):
    group = build(spec)
    h = group.order
    row = []
    for n in range(1, h + 1):
        count = count_solutions(group, n)
        assert count % gcd(n, h) == 0
        row.append(count)
    print(f"{spec:10s} counts for n=1..{h}: {row}")
    print(f"{'':10s} every count is divisible by gcd(n,{h})")

print()
print("== the number of order-p elements is (p-1)(np+1) ==")
for spec, p in (("sym:3", 3), ("alt:5", 5), ("sym:4", 2), ("elab:3^2", 3)):
    report = verify_order_p_form(build(spec), p)
    print(f"{spec:10s} p={p}: count={report.counted:3d}  n={report.params['n']}")

print()
print("== splitting an element of order 12 into commuting parts ==")
c12 = build("cyclic:12")
dec = coprime_decomposition(c12, 1, 4, 3)
print(f"g = g^{dec.alpha} * g^{dec.beta}  with orders "
      f"{element_order(c12, dec.a_part)} and {element_order(c12, dec.b_part)}")

print()
print("== when the solution counts are exact, products fill everything ==")
print(verify_coprime_product(build("cyclic:6"), 2, 3).text_line())
print(verify_coprime_product(build("sym:3"), 2, 3).text_line())
