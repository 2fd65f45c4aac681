"""Subgroup lattice, normality machinery, quotients and automorphisms."""

import numpy as np
import pytest

from sylowlab.catalog import build
from sylowlab.errors import EnumerationCapExceeded, NotNormal, ParentMismatch
from sylowlab.groups import element_order
from sylowlab.subgroups import (
    ComplexSet,
    SubgroupSet,
    all_subgroups,
    automorphisms,
    center,
    centralizer,
    closure_of,
    conjugacy_classes,
    conjugate_subgroup,
    cyclic_subgroup,
    generated_subgroup,
    intersect,
    is_characteristic,
    is_cyclic,
    is_normal,
    join,
    normalizer,
    quotient,
    subgroup_conjugacy_classes,
    subgroups_of_order,
    trivial_subgroup,
    whole_group,
)

from oracles import brute_closure, conjugacy_partition, is_hom_bijection, subgroups_by_pair_closures, subgroups_by_subsets


def by_names(group, *names):
    return [group.element_names.index(n) for n in names]


def test_subgroup_set_validation():
    s3 = build("sym:3")
    with pytest.raises(ValueError):
        SubgroupSet(s3, [1, 2])          # no identity
    with pytest.raises(ValueError):
        SubgroupSet(s3, [0, 1])          # not closed
    ok = SubgroupSet(s3, [0, 1, 3])
    assert ok.size == 3 and 3 in ok and 2 not in ok


def test_closure_examples():
    c6 = build("cyclic:6")
    assert closure_of(ComplexSet(c6, [0])).size == 1
    assert closure_of(ComplexSet(c6, [1])).size == 6
    assert closure_of(ComplexSet(c6, [])).size == 1
    s4 = build("sym:4")
    seed = by_names(s4, "(1 2)", "(3 4)")
    sub = closure_of(ComplexSet(s4, seed))
    assert sub.size == 4
    assert set(sub.members) == set(brute_closure(s4, seed))


def test_closure_is_idempotent():
    s4 = build("sym:4")
    sub = generated_subgroup(s4, by_names(s4, "(1 2 3)"))
    again = closure_of(ComplexSet(s4, sub.members))
    assert again == sub


@pytest.mark.parametrize(
    "spec, expected",
    [("cyclic:6", 4), ("sym:3", 6), ("cyclic:12", 6), ("q8", 6), ("dihedral:8", 10)],
)
def test_all_subgroups_against_subset_oracle(spec, expected):
    group = build(spec)
    got = {frozenset(s.members) for s in all_subgroups(group)}
    assert got == subgroups_by_subsets(group)
    assert len(got) == expected


def test_all_subgroups_sym4_against_pair_oracle():
    s4 = build("sym:4")
    got = {frozenset(s.members) for s in all_subgroups(s4)}
    assert got == subgroups_by_pair_closures(s4)
    assert len(got) == 30


def test_all_subgroups_sorted_and_valid():
    s4 = build("sym:4")
    subs = all_subgroups(s4)
    keys = [(s.size, s.members) for s in subs]
    assert keys == sorted(keys)
    for s in subs:
        assert 0 in s
        assert s4.order % s.size == 0
        SubgroupSet(s4, s.members)  # re-validates closure


def test_enumeration_cap():
    big = build("elab:3^4")
    with pytest.raises(EnumerationCapExceeded):
        all_subgroups(big)
    assert len(all_subgroups(big, cap=81)) == 212


def test_subgroups_of_order():
    s4 = build("sym:4")
    assert len(subgroups_of_order(s4, 3)) == 4
    assert subgroups_of_order(s4, 1) == [trivial_subgroup(s4)]
    c6 = build("cyclic:6")
    assert subgroups_of_order(c6, 4) == []


def test_is_normal_examples():
    s3 = build("sym:3")
    assert is_normal(subgroups_of_order(s3, 3)[0])
    assert not is_normal(subgroups_of_order(s3, 2)[0])
    c12 = build("cyclic:12")
    assert all(is_normal(s) for s in all_subgroups(c12))


def test_normalizer_examples():
    s3 = build("sym:3")
    assert normalizer(subgroups_of_order(s3, 3)[0]).size == 6
    swap = generated_subgroup(s3, by_names(s3, "(1 2)"))
    assert normalizer(swap) == swap
    s4 = build("sym:4")
    sylow3 = subgroups_of_order(s4, 3)[0]
    assert normalizer(sylow3).size == 6


def test_centralizer_examples():
    s3 = build("sym:3")
    assert centralizer(s3, 0).size == 6
    rot = by_names(s3, "(1 2 3)")[0]
    assert set(centralizer(s3, rot).members) == set(cyclic_subgroup(s3, rot).members)
    c8 = build("cyclic:8")
    assert all(centralizer(c8, x).size == 8 for x in range(8))


def test_center_examples():
    assert center(build("cyclic:9")).size == 9
    assert center(build("sym:3")).size == 1
    assert center(build("q8")).size == 2


def test_conjugacy_classes():
    c5 = build("cyclic:5")
    assert conjugacy_classes(c5).class_sizes == (1,) * 5
    s3 = build("sym:3")
    part = conjugacy_classes(s3)
    assert sorted(part.class_sizes) == [1, 2, 3]
    q8 = build("q8")
    assert sorted(conjugacy_classes(q8).class_sizes) == [1, 1, 2, 2, 2]


def test_conjugacy_classes_match_oracle_and_class_equation():
    for spec in ("sym:3", "sym:4", "q8", "dihedral:12"):
        group = build(spec)
        part = conjugacy_classes(group)
        assert {frozenset(c) for c in part.classes()} == set(conjugacy_partition(group))
        assert sum(part.class_sizes) == group.order
        for rep, size in zip(part.representatives, part.class_sizes):
            assert size * centralizer(group, rep).size == group.order
            assert min(part.classes()[part.class_of[rep]]) == rep


def test_intersect_and_join():
    s4 = build("sym:4")
    a = subgroups_of_order(s4, 8)[0]
    b = subgroups_of_order(s4, 8)[1]
    assert intersect(a, a) == a
    assert intersect(a, trivial_subgroup(s4)).size == 1
    assert intersect(a, b).size == 4
    third, fourth = subgroups_of_order(s4, 3)[:2]
    assert join(third, trivial_subgroup(s4)) == third
    assert join(third, third) == third
    assert join(third, fourth).size == 12
    with pytest.raises(ParentMismatch):
        intersect(a, trivial_subgroup(build("sym:3")))


def test_quotient_by_trivial_is_identity_relabeling():
    s3 = build("sym:3")
    q = quotient(s3, trivial_subgroup(s3))
    assert np.array_equal(q.group.table, s3.table)
    assert q.section.tolist() == list(range(6))


def test_quotient_examples():
    s3 = build("sym:3")
    q = quotient(s3, subgroups_of_order(s3, 3)[0])
    assert q.group.order == 2
    q8 = build("q8")
    quo = quotient(q8, center(q8))
    assert quo.group.order == 4
    assert sorted(quo.group.elem_order.tolist()) == [1, 2, 2, 2]
    with pytest.raises(NotNormal):
        quotient(s3, subgroups_of_order(s3, 2)[0])


def test_quotient_map_is_surjective_homomorphism():
    s4 = build("sym:4")
    v4 = next(s for s in subgroups_of_order(s4, 4) if is_normal(s))
    q = quotient(s4, v4)
    assert q.group.order == 6
    assert sorted(set(q.to_coset.tolist())) == list(range(6))
    for a in range(s4.order):
        for b in range(s4.order):
            lhs = q.to_coset[s4.table[a, b]]
            rhs = q.group.table[q.to_coset[a], q.to_coset[b]]
            assert lhs == rhs
    # section picks the minimal representative of each coset
    for c in range(q.group.order):
        members = np.flatnonzero(q.to_coset == c)
        assert q.section[c] == members.min()


def test_conjugate_subgroup():
    s3 = build("sym:3")
    swap = generated_subgroup(s3, by_names(s3, "(1 2)"))
    rot = by_names(s3, "(1 2 3)")[0]
    moved = conjugate_subgroup(swap, rot)
    assert moved == generated_subgroup(s3, by_names(s3, "(2 3)"))
    assert conjugate_subgroup(swap, 0) == swap
    for t in normalizer(swap).members:
        assert conjugate_subgroup(swap, t) == swap


def test_subgroup_conjugacy_classes():
    s4 = build("sym:4")
    sylow3 = subgroups_of_order(s4, 3)
    assert subgroup_conjugacy_classes(sylow3) == [[0, 1, 2, 3]]
    v4 = [s for s in subgroups_of_order(s4, 4) if is_normal(s)]
    assert subgroup_conjugacy_classes(v4) == [[0]]
    twos = subgroups_of_order(s4, 2)
    classes = subgroup_conjugacy_classes(twos)
    assert sorted(len(c) for c in classes) == [3, 6]
    for orbit in classes:
        for pos in orbit:
            assert len(orbit) * normalizer(twos[pos]).size == s4.order


def test_automorphism_counts():
    assert len(automorphisms(build("cyclic:2"))) == 1
    assert len(automorphisms(build("cyclic:3"))) == 2
    assert len(automorphisms(build("elab:2^2"))) == 6
    assert len(automorphisms(build("sym:3"))) == 6
    assert len(automorphisms(build("q8"))) == 24


def test_automorphisms_are_honest_and_capped():
    group = build("dihedral:8")
    autos = automorphisms(group)
    assert len(autos) == 8
    assert len(set(autos)) == len(autos)
    for phi in autos:
        assert is_hom_bijection(group, phi)
    with pytest.raises(EnumerationCapExceeded):
        automorphisms(build("cyclic:25"))


def test_is_characteristic():
    d8 = build("dihedral:8")
    assert is_characteristic(center(d8))
    assert is_characteristic(whole_group(d8))
    klein = build("elab:2^2")
    assert not is_characteristic(generated_subgroup(klein, [1]))
    assert is_characteristic(trivial_subgroup(klein))


def test_is_cyclic():
    assert is_cyclic(build("cyclic:12"))
    assert not is_cyclic(build("elab:2^2"))
    assert is_cyclic(build("cyclic:1"))


def test_coprime_permutable_subgroups_commute_elementwise():
    # two subgroups of coprime order, each normalizing the other, commute
    for spec in ("cyclic:6", "prod(sym:3,cyclic:2)", "cyclic:12", "alt:4"):
        group = build(spec)
        subs = all_subgroups(group)
        for a in subs:
            for b in subs:
                if np.gcd(a.size, b.size) != 1:
                    continue
                if not normalizer(a).contains_subgroup(b) or not normalizer(b).contains_subgroup(a):
                    continue
                for x in a.members:
                    for y in b.members:
                        assert group.table[x, y] == group.table[y, x]
