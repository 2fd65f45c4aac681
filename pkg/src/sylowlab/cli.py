"""Command-line front end.

Exit codes: 0 all good, 1 at least one verification check failed, 2 usage,
parse or build errors. Reports go to stdout, diagnostics to stderr. The
SYLOWLAB_CAPS env var ("construction,subgroups,automorphisms") overrides
the three size caps.
"""

from __future__ import annotations

import argparse
import sys

import numpy as np

from .catalog import build, parse_spec, render, standard_catalog
from .config import Caps, caps_from_env
from .counting import theorem_suite
from .errors import SylowLabError
from .groups import FiniteGroup
from .subgroups import (
    all_subgroups,
    center,
    conjugacy_classes,
    is_cyclic,
    is_normal,
    normalizer,
)
from .sylow import coprime_decomposition, sylow_chain


def _members_str(indices) -> str:
    return "{" + ",".join(str(int(i)) for i in indices) + "}"


def _load_group(text: str, caps: Caps) -> FiniteGroup:
    return build(parse_spec(text), cap=caps.construction)


def _cmd_info(args, caps: Caps) -> int:
    group = _load_group(args.group, caps)
    orders, counts = np.unique(group.elem_order, return_counts=True)
    histogram = " ".join(f"{int(o)}:{int(c)}" for o, c in zip(orders, counts))
    print(f"group: {group.label}")
    print(f"order: {group.order}")
    print(f"abelian: {'yes' if group.is_abelian() else 'no'}")
    print(f"cyclic: {'yes' if is_cyclic(group) else 'no'}")
    print(f"center order: {center(group).size}")
    print(f"exponent: {group.exponent()}")
    print(f"element orders: {histogram}")
    if args.elements:
        for i in range(group.order):
            print(f"{i}: {group.name_of(i)}")
    return 0


def _cmd_subgroups(args, caps: Caps) -> int:
    group = _load_group(args.group, caps)
    for sub in all_subgroups(group, caps.subgroups):
        if args.order is not None and sub.size != args.order:
            continue
        normal = is_normal(sub)
        if args.normal and not normal:
            continue
        print(
            f"order={sub.size} members={_members_str(sub._arr)} "
            f"normal={'yes' if normal else 'no'} normalizer={normalizer(sub).size}"
        )
    return 0


def _cmd_classes(args, caps: Caps) -> int:
    group = _load_group(args.group, caps)
    partition = conjugacy_classes(group)
    print(f"classes: {len(partition.representatives)}")
    for c, members in enumerate(partition.classes()):
        rep = partition.representatives[c]
        print(
            f"class {c}: size={partition.class_sizes[c]} rep={rep} ({group.name_of(rep)}) "
            f"members={_members_str(members)}"
        )
    return 0


def _cmd_sylow(args, caps: Caps) -> int:
    group = _load_group(args.group, caps)
    chain = sylow_chain(group, args.prime)
    print(f"prime: {chain.prime}")
    print("chain orders: " + ",".join(str(s.size) for s in chain.chain))
    for sub in chain.chain:
        print(f"order={sub.size} members={_members_str(sub._arr)}")
    return 0


def _cmd_decompose(args, caps: Caps) -> int:
    group = _load_group(args.group, caps)
    if not 0 <= args.element < group.order:
        raise SylowLabError(f"element index {args.element} out of range for order {group.order}")
    dec = coprime_decomposition(group, args.element, args.a, args.b)
    print(f"element: {args.element} ({group.name_of(args.element)})")
    print(f"alpha={dec.alpha} beta={dec.beta}")
    print(f"a_part={dec.a_part} ({group.name_of(dec.a_part)}) order={dec.a}")
    print(f"b_part={dec.b_part} ({group.name_of(dec.b_part)}) order={dec.b}")
    return 0


def _theorem_filter(raw: str | None):
    if raw is None:
        return lambda theorem_id: True
    wanted = {part.strip() for part in raw.split(",") if part.strip()}

    def selected(theorem_id: str) -> bool:
        return theorem_id in wanted or theorem_id.split(".")[0] in wanted

    return selected


def _cmd_verify(args, caps: Caps) -> int:
    if args.catalog is not None and args.group is not None:
        print("error: give either a group spec or --catalog, not both", file=sys.stderr)
        return 2
    if args.catalog is None and args.group is None:
        print("error: verify needs a group spec or --catalog", file=sys.stderr)
        return 2
    if args.catalog is not None:
        groups = standard_catalog(args.catalog, caps.construction)
    else:
        spec = parse_spec(args.group)
        groups = [(render(spec), build(spec, cap=caps.construction))]
    selected = _theorem_filter(args.theorems)
    failed = False
    for _, group in groups:
        for report in theorem_suite(group, caps):
            if not selected(report.theorem_id):
                continue
            print(report.json_line() if args.json else report.text_line())
            if not report.passed:
                failed = True
    return 1 if failed else 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="sylowlab",
        description="Inspect small finite groups and verify their counting theorems.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_info = sub.add_parser("info", help="order, abelian/cyclic flags, center, exponent")
    p_info.add_argument("group", help="group spec, e.g. sym:4 or prod(cyclic:2,q8)")
    p_info.add_argument("--elements", action="store_true", help="list each element index with its name")
    p_info.set_defaults(func=_cmd_info)

    p_subs = sub.add_parser("subgroups", help="enumerate the full subgroup lattice")
    p_subs.add_argument("group")
    p_subs.add_argument("--order", type=int, default=None, help="only subgroups of this order")
    p_subs.add_argument("--normal", action="store_true", help="only normal subgroups")
    p_subs.set_defaults(func=_cmd_subgroups)

    p_classes = sub.add_parser("classes", help="conjugacy classes with sizes and representatives")
    p_classes.add_argument("group")
    p_classes.set_defaults(func=_cmd_classes)

    p_sylow = sub.add_parser("sylow", help="constructive Sylow subgroup tower")
    p_sylow.add_argument("group")
    p_sylow.add_argument("--prime", type=int, required=True)
    p_sylow.set_defaults(func=_cmd_sylow)

    p_dec = sub.add_parser("decompose", help="split an element into commuting coprime-order parts")
    p_dec.add_argument("group")
    p_dec.add_argument("--element", type=int, required=True, help="element index")
    p_dec.add_argument("--a", type=int, required=True, help="order of the first part")
    p_dec.add_argument("--b", type=int, required=True, help="order of the second part")
    p_dec.set_defaults(func=_cmd_decompose)

    p_verify = sub.add_parser("verify", help="run every applicable theorem check")
    p_verify.add_argument("group", nargs="?", default=None)
    p_verify.add_argument("--catalog", type=int, default=None, metavar="MAX_ORDER",
                          help="verify the whole standard catalog up to this order")
    p_verify.add_argument("--theorems", default=None,
                          help="comma-separated check ids or section prefixes, e.g. S4.I,S5")
    p_verify.add_argument("--json", action="store_true", help="one JSON object per report line")
    p_verify.set_defaults(func=_cmd_verify)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code) if exc.code is not None else 0
    try:
        caps = caps_from_env()
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    try:
        return args.func(args, caps)
    except (SylowLabError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def entry() -> None:
    raise SystemExit(main())


if __name__ == "__main__":
    entry()
