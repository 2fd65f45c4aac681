"""Subgroup kinds, the normalizer congruence, and fusion of normal subgroups.

Run:  python3 demos/05_kinds_and_fusion.py
"""

from sylowlab import (
    build,
    classify_kinds,
    congruence7,
    count_p_subgroups,
    incidence_check,
    normal_fusion_check,
    normalizer,
    sylow_single_class,
)

s4 = build("sym:4")

print("== subgroup counts are 1 mod p, order by order ==")
for p, kappas in ((2, (1, 2, 3)), (3, (1,))):
    for kappa in kappas:
        print(count_p_subgroups(s4, p, kappa).text_line())
print(incidence_check(s4, 2, 2).text_line())

print()
print("== first and second kind order-2 subgroups of sym:4 ==")
kinds, report = classify_kinds(s4, 2, 1)
print(report.text_line())
for sub in kinds.first_kind:
    print(f"  first kind  {sub.members}  normalizer order {normalizer(sub).size}")
for sub in kinds.second_kind[:2]:
    print(f"  second kind {sub.members}  normalizer order {normalizer(sub).size}")
print("  ... and four more of the second kind")

print()
print("== the normalizer congruence and fusion ==")
print(congruence7(s4, 2).text_line())
print(congruence7(build("sym:3"), 3).text_line())   # Sylow normal: nothing to compare
print(normal_fusion_check(s4, 2).text_line())
print(sylow_single_class(build("alt:5"), 5).text_line())
