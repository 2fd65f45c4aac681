"""Group-spec grammar, builders and the standard catalog."""

import numpy as np
import pytest

from sylowlab.catalog import (
    EXTRASPECIAL_27_EXP9_SPEC,
    HEISENBERG_3_SPEC,
    GroupSpec,
    build,
    parse_spec,
    render,
    standard_catalog,
)
from sylowlab.errors import ClosureExceedsCap, NotAGroup, ParseError, ValidationError
from sylowlab.groups import group_from_table
from sylowlab.subgroups import center, is_cyclic


@pytest.mark.parametrize(
    "text",
    [
        "cyclic:6",
        "dihedral:8",
        "sym:4",
        "alt:5",
        "q8",
        "elab:3^2",
        "prod(cyclic:2,cyclic:2)",
        "prod(prod(cyclic:2,cyclic:3),q8)",
        "perm:(1 2 3)(4 5);(1 2)",
        "perm:e",
        "table:@/tmp/some_table.txt",
        HEISENBERG_3_SPEC,
        EXTRASPECIAL_27_EXP9_SPEC,
    ],
)
def test_parse_render_round_trip(text):
    spec = parse_spec(text)
    assert parse_spec(render(spec)) == spec


def test_parse_is_whitespace_insensitive_outside_cycles():
    assert parse_spec("  prod( cyclic:2 ,\tq8 )  ") == parse_spec("prod(cyclic:2,q8)")
    assert parse_spec("perm: (1 2) ; (3 4)") == parse_spec("perm:(1 2);(3 4)")
    assert parse_spec("elab: 3 ^ 2") == parse_spec("elab:3^2")


def test_cycle_canonicalization():
    assert parse_spec("perm:(2 3 1)") == parse_spec("perm:(1 2 3)")
    assert render(parse_spec("perm:(4 5)(1 2 3)")) == "perm:(1 2 3)(4 5)"


def test_parse_error_positions():
    with pytest.raises(ParseError) as err:
        parse_spec("nosuch:1")
    assert err.value.position == 0 and "cyclic" in err.value.expected
    with pytest.raises(ParseError) as err:
        parse_spec("cyclic:")
    assert err.value.position == 7 and err.value.expected == ["integer"]
    with pytest.raises(ParseError) as err:
        parse_spec("cyclic:6 junk")
    assert err.value.position == 9
    with pytest.raises(ParseError) as err:
        parse_spec("prod(cyclic:2 cyclic:3)")
    assert err.value.expected == ["','"]
    with pytest.raises(ParseError):
        parse_spec("perm:(1)")
    with pytest.raises(ParseError):
        parse_spec("perm:(1 2")
    with pytest.raises(ParseError):
        parse_spec("table:@")


def test_validation_errors():
    with pytest.raises(ValidationError):
        parse_spec("dihedral:7")
    with pytest.raises(ValidationError):
        parse_spec("elab:4^2")
    with pytest.raises(ValidationError):
        parse_spec("elab:3^0")
    with pytest.raises(ValidationError):
        parse_spec("cyclic:0")
    with pytest.raises(ValidationError):
        parse_spec("perm:(1 2)(2 3)")


def test_build_basic_orders():
    assert build("cyclic:1").order == 1
    assert build("sym:4").order == 24
    assert build("perm:(1 2 3)(4 5);(1 2)").order == 12
    assert build("dihedral:2").order == 2
    assert build("prod(cyclic:2,cyclic:4)").order == 8
    assert build("alt:5").order == 60


def test_build_is_deterministic():
    a = build("prod(sym:3,cyclic:2)")
    b = build("prod(sym:3,cyclic:2)")
    assert np.array_equal(a.table, b.table)
    assert a.element_names == b.element_names
    assert a.label == "prod(sym:3,cyclic:2)"


def test_build_respects_construction_cap():
    with pytest.raises(ClosureExceedsCap):
        build("cyclic:30", cap=24)
    with pytest.raises(ClosureExceedsCap):
        build("sym:5", cap=100)


def test_cyclic_indexing_is_modular_addition():
    c6 = build("cyclic:6")
    assert all(c6.table[i, j] == (i + j) % 6 for i in range(6) for j in range(6))


def test_dihedral_structure():
    d8 = build("dihedral:8")
    assert sorted(d8.elem_order.tolist()) == [1, 2, 2, 2, 2, 2, 4, 4]
    assert center(d8).members == (0, 2)
    assert d8.element_names[:4] == ("e", "r", "r^2", "r^3")


def test_dihedral_satisfies_the_defining_relations():
    from sylowlab.groups import conjugate, element_order
    from sylowlab.subgroups import generated_subgroup

    for order in (4, 6, 8, 14, 24):
        n = order // 2
        group = build(f"dihedral:{order}")
        r, s = 1 if n > 1 else 0, n
        assert element_order(group, r) == n or n == 1
        assert element_order(group, s) == 2
        assert conjugate(group, r, s) == group.inverse[r]
        assert generated_subgroup(group, [r, s]).size == order


def test_q8_structure():
    q8 = build("q8")
    assert sorted(q8.elem_order.tolist()) == [1, 2, 4, 4, 4, 4, 4, 4]
    assert center(q8).size == 2
    assert q8.element_names == ("1", "-1", "i", "-i", "j", "-j", "k", "-k")


def test_elab_structure():
    e8 = build("elab:2^3")
    assert e8.order == 8 and max(e8.elem_order) == 2
    assert e8.element_names[0] == "(0,0,0)"
    e9 = build("elab:3^2")
    assert e9.order == 9 and max(e9.elem_order) == 3


def test_heisenberg_invariants():
    heis = build(HEISENBERG_3_SPEC)
    assert heis.order == 27
    assert heis.exponent() == 3
    assert center(heis).size == 3
    assert not heis.is_abelian()


def test_second_nonabelian_27_group():
    other = build(EXTRASPECIAL_27_EXP9_SPEC)
    assert other.order == 27
    assert other.exponent() == 9
    assert center(other).size == 3
    assert not other.is_abelian()


def test_table_file_round_trip(tmp_path):
    path = tmp_path / "c3.txt"
    path.write_text("0 1 2\n1 2 0\n2 0 1\n")
    group = build(f"table:@{path}")
    assert group.order == 3 and is_cyclic(group)
    bad = tmp_path / "bad.txt"
    bad.write_text("0 1\n1 1\n")
    with pytest.raises(NotAGroup):
        build(f"table:@{bad}")


def test_standard_catalog_membership():
    tiny = standard_catalog(1)
    assert [name for name, _ in tiny] == ["cyclic:1"]
    names = [name for name, _ in standard_catalog(8)]
    for expected in ("q8", "dihedral:8", "cyclic:8", "elab:2^3", "prod(cyclic:2,cyclic:4)"):
        assert expected in names
    assert "sym:3" in names and "sym:4" not in names
    big = [name for name, _ in standard_catalog(27)]
    assert HEISENBERG_3_SPEC in big and EXTRASPECIAL_27_EXP9_SPEC in big


def test_standard_catalog_is_deterministic_and_valid():
    first = standard_catalog(16)
    second = standard_catalog(16)
    assert [n for n, _ in first] == [n for n, _ in second]
    for (name, group), (_, other) in zip(first, second):
        assert np.array_equal(group.table, other.table)
        assert name == render(parse_spec(name)) == group.label
        assert group.order <= 16
        group_from_table(group.table)  # re-validates the axioms


def test_catalog_orders_within_bound():
    for name, group in standard_catalog(60):
        assert group.order <= 60, name


def test_sym5_enters_catalog_only_when_caps_allow():
    names = [name for name, _ in standard_catalog(120)]
    assert "sym:5" in names
    assert "sym:5" not in [name for name, _ in standard_catalog(119)]
    assert "sym:5" not in [name for name, _ in standard_catalog(120, cap=100)]
