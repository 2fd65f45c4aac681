"""Deterministic constructors for the standard test groups, and the parser
for the textual group-spec and cycle-notation formats.

Grammar:

    spec   := kind ':' args | 'q8' | 'prod(' spec ',' spec ')'
              | 'perm:' cycles (';' cycles)* | 'table:@' filepath
    cycles := '(' int (' ' int)+ ')'+ | 'e'

Cycle points are 1-based in text and 0-based internally. Whitespace is
ignored everywhere except inside cycle parentheses, where it separates
points. Fixed points are never written.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .config import DEFAULT_CAPS
from .errors import ClosureExceedsCap, ParseError, ValidationError
from .groups import FiniteGroup, Permutation, group_from_generators, group_from_table
from .numtheory import is_prime

_KINDS = {"cyclic", "dihedral", "sym", "alt", "q8", "elab", "prod", "perm", "table"}

# Nonabelian groups of order 27 as permutations on 9 points: the exponent-3
# group (two commuting-up-to-center translations of the 3x3 grid) and the
# exponent-9 group (a 9-cycle twisted by an order-3 multiplier).
HEISENBERG_3_SPEC = "perm:(1 4 7)(2 5 8)(3 6 9);(4 5 6)(7 9 8)"
EXTRASPECIAL_27_EXP9_SPEC = "perm:(1 2 3 4 5 6 7 8 9);(2 8 5)(3 6 9)"


@dataclass(frozen=True)
class GroupSpec:
    """Parsed description of a catalog group or generator list.

    args by kind: cyclic/dihedral/sym/alt hold (n,); elab holds (p, k);
    q8 holds (); prod holds two sub-specs; perm holds one tuple of
    canonical cycles per generator; table holds (filepath,).
    """

    kind: str
    args: tuple


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    def fail(self, expected: set[str]):
        raise ParseError(self.text, self.pos, expected)

    def skip_ws(self) -> None:
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self) -> str:
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def expect(self, ch: str) -> None:
        if self.peek() != ch:
            self.fail({f"'{ch}'"})
        self.pos += 1

    def ident(self) -> str:
        start = self.pos
        while self.pos < len(self.text) and (self.text[self.pos].isalnum()):
            self.pos += 1
        return self.text[start:self.pos]

    def integer(self) -> int:
        start = self.pos
        while self.pos < len(self.text) and self.text[self.pos].isdigit():
            self.pos += 1
        if self.pos == start:
            self.fail({"integer"})
        return int(self.text[start:self.pos])

    def parse(self) -> GroupSpec:
        spec = self.spec()
        self.skip_ws()
        if self.pos != len(self.text):
            self.fail({"end of input"})
        return spec

    def spec(self) -> GroupSpec:
        self.skip_ws()
        at_kind = self.pos
        kind = self.ident()
        if kind not in _KINDS:
            self.pos = at_kind
            self.fail(_KINDS)
        if kind == "q8":
            return GroupSpec("q8", ())
        if kind == "prod":
            self.skip_ws()
            self.expect("(")
            first = self.spec()
            self.skip_ws()
            self.expect(",")
            second = self.spec()
            self.skip_ws()
            self.expect(")")
            return GroupSpec("prod", (first, second))
        self.skip_ws()
        self.expect(":")
        if kind == "perm":
            gens = [self.cycles()]
            self.skip_ws()
            while self.peek() == ";":
                self.pos += 1
                gens.append(self.cycles())
                self.skip_ws()
            return GroupSpec("perm", tuple(gens))
        if kind == "table":
            self.skip_ws()
            self.expect("@")
            start = self.pos
            while self.pos < len(self.text) and self.text[self.pos] not in ",)" and not self.text[self.pos].isspace():
                self.pos += 1
            path = self.text[start:self.pos]
            if not path:
                self.fail({"filepath"})
            return GroupSpec("table", (path,))
        if kind == "elab":
            self.skip_ws()
            p = self.integer()
            self.skip_ws()
            self.expect("^")
            self.skip_ws()
            k = self.integer()
            return _validated(GroupSpec("elab", (p, k)))
        self.skip_ws()
        n = self.integer()
        return _validated(GroupSpec(kind, (n,)))

    def cycles(self) -> tuple:
        """One generator: a canonicalized cycle tuple, or () for 'e'."""
        self.skip_ws()
        if self.peek() == "e":
            self.pos += 1
            return ()
        if self.peek() != "(":
            self.fail({"'('", "'e'"})
        raw: list[tuple[int, ...]] = []
        seen_points: set[int] = set()
        while True:
            self.skip_ws()
            if self.peek() != "(":
                break
            self.pos += 1
            points = [self.cycle_point(seen_points)]
            while True:
                had_ws = self.pos < len(self.text) and self.text[self.pos].isspace()
                self.skip_ws()
                if self.peek() == ")":
                    self.pos += 1
                    break
                if not had_ws:
                    self.fail({"' '", "')'"})
                points.append(self.cycle_point(seen_points))
            if len(points) < 2:
                self.fail({"a cycle of at least two points"})
            raw.append(tuple(points))
        return _canonical_cycles(raw)

    def cycle_point(self, seen: set[int]) -> int:
        at = self.pos
        value = self.integer()
        if value < 1:
            self.pos = at
            self.fail({"point >= 1"})
        if value in seen:
            raise ValidationError(f"point {value} repeated within one generator")
        seen.add(value)
        return value


def _canonical_cycles(raw: list[tuple[int, ...]]) -> tuple:
    """Rotate each cycle to start at its least point; sort cycles by that point."""
    out = []
    for cyc in raw:
        k = cyc.index(min(cyc))
        out.append(cyc[k:] + cyc[:k])
    return tuple(sorted(out))


def _validated(spec: GroupSpec) -> GroupSpec:
    kind, args = spec.kind, spec.args
    if kind in ("cyclic", "sym", "alt") and args[0] < 1:
        raise ValidationError(f"{kind} needs a positive parameter, got {args[0]}")
    if kind == "dihedral":
        if args[0] < 2 or args[0] % 2 != 0:
            raise ValidationError(f"dihedral order must be even and >= 2, got {args[0]}")
    if kind == "elab":
        p, k = args
        if not is_prime(p):
            raise ValidationError(f"elab base {p} is not prime")
        if k < 1:
            raise ValidationError(f"elab exponent must be >= 1, got {k}")
    return spec


def parse_spec(text: str) -> GroupSpec:
    """Parse a group-spec string; errors carry the offset and expected tokens."""
    return _Parser(text).parse()


def render(spec: GroupSpec) -> str:
    """Canonical text of a spec; parse_spec(render(s)) == s."""
    kind, args = spec.kind, spec.args
    if kind == "q8":
        return "q8"
    if kind in ("cyclic", "dihedral", "sym", "alt"):
        return f"{kind}:{args[0]}"
    if kind == "elab":
        return f"elab:{args[0]}^{args[1]}"
    if kind == "prod":
        return f"prod({render(args[0])},{render(args[1])})"
    if kind == "perm":
        rendered = []
        for gen in args:
            if not gen:
                rendered.append("e")
            else:
                rendered.append("".join("(" + " ".join(map(str, cyc)) + ")" for cyc in gen))
        return "perm:" + ";".join(rendered)
    if kind == "table":
        return f"table:@{args[0]}"
    raise ValueError(f"unknown spec kind {kind!r}")


def _cycles_to_permutation(gen: tuple, degree: int) -> Permutation:
    images = list(range(degree))
    for cyc in gen:
        for i, pt in enumerate(cyc):
            images[pt - 1] = cyc[(i + 1) % len(cyc)] - 1
    return Permutation(images)


def _build_cyclic(n: int, label: str) -> FiniteGroup:
    idx = np.arange(n, dtype=np.int32)
    table = (idx[:, None] + idx[None, :]) % n
    names = ["e"] + ["g" if i == 1 else f"g^{i}" for i in range(1, n)]
    return FiniteGroup(table, label=label, element_names=names)


def _build_dihedral(order: int, label: str) -> FiniteGroup:
    n = order // 2
    i = np.arange(n, dtype=np.int32)
    table = np.empty((order, order), dtype=np.int32)
    table[:n, :n] = (i[:, None] + i[None, :]) % n            # rot * rot
    table[:n, n:] = n + (i[None, :] - i[:, None]) % n        # rot then refl
    table[n:, :n] = n + (i[:, None] + i[None, :]) % n        # refl then rot
    table[n:, n:] = (i[None, :] - i[:, None]) % n            # refl then refl
    names = ["e"] + [f"r^{k}" if k > 1 else "r" for k in range(1, n)]
    names += ["s"] + [f"s r^{k}" if k > 1 else "s r" for k in range(1, n)]
    return FiniteGroup(table, label=label, element_names=names)


def _build_sym(n: int, label: str, cap: int) -> FiniteGroup:
    gens = []
    if n >= 2:
        gens.append(Permutation([(i + 1) % n for i in range(n)]))
        gens.append(Permutation([1, 0] + list(range(2, n))))
    return group_from_generators(gens, cap=cap, label=label)


def _build_alt(n: int, label: str, cap: int) -> FiniteGroup:
    gens = []
    for k in range(2, n):  # the 3-cycles (1 2 k+1)
        images = list(range(n))
        images[0], images[1], images[k] = images[1], images[k], images[0]
        gens.append(Permutation(images))
    return group_from_generators(gens, cap=cap, label=label)


_Q8_AXES = "1ijk"
_Q8_MUL = {  # axis products with sign, quaternion rules
    ("1", "1"): (1, "1"), ("1", "i"): (1, "i"), ("1", "j"): (1, "j"), ("1", "k"): (1, "k"),
    ("i", "1"): (1, "i"), ("j", "1"): (1, "j"), ("k", "1"): (1, "k"),
    ("i", "i"): (-1, "1"), ("j", "j"): (-1, "1"), ("k", "k"): (-1, "1"),
    ("i", "j"): (1, "k"), ("j", "i"): (-1, "k"),
    ("j", "k"): (1, "i"), ("k", "j"): (-1, "i"),
    ("k", "i"): (1, "j"), ("i", "k"): (-1, "j"),
}


def _build_q8(label: str) -> FiniteGroup:
    elements = [(sign, axis) for axis in _Q8_AXES for sign in (1, -1)]
    index = {e: i for i, e in enumerate(elements)}
    table = np.empty((8, 8), dtype=np.int32)
    for a, (sa, xa) in enumerate(elements):
        for b, (sb, xb) in enumerate(elements):
            sign, axis = _Q8_MUL[(xa, xb)]
            table[a, b] = index[(sa * sb * sign, axis)]
    names = [("" if s > 0 else "-") + a for s, a in elements]
    return FiniteGroup(table, label=label, element_names=names)


def _build_elab(p: int, k: int, label: str) -> FiniteGroup:
    h = p**k
    codes = np.arange(h, dtype=np.int32)
    digits = np.empty((h, k), dtype=np.int32)
    rest = codes.copy()
    for d in range(k - 1, -1, -1):
        digits[:, d] = rest % p
        rest //= p
    weights = p ** np.arange(k - 1, -1, -1, dtype=np.int32)
    sums = (digits[:, None, :] + digits[None, :, :]) % p
    table = (sums * weights).sum(axis=2).astype(np.int32)
    names = ["(" + ",".join(str(v) for v in row) + ")" for row in digits]
    return FiniteGroup(table, label=label, element_names=names)


def _build_prod(a: FiniteGroup, b: FiniteGroup, label: str, cap: int) -> FiniteGroup:
    order = a.order * b.order
    if order > cap:
        raise ClosureExceedsCap(f"product order {order} exceeds cap {cap}")
    table = (a.table[:, None, :, None].astype(np.int64) * b.order + b.table[None, :, None, :])
    table = table.reshape(order, order).astype(np.int32)
    names = None
    if a.element_names is not None and b.element_names is not None:
        names = [f"({na},{nb})" for na in a.element_names for nb in b.element_names]
    return FiniteGroup(table, label=label, element_names=names)


def build(spec: GroupSpec | str, cap: int | None = None) -> FiniteGroup:
    """Construct the concrete group a spec describes, with deterministic indexing."""
    if isinstance(spec, str):
        spec = parse_spec(spec)
    _validated(spec)
    cap = DEFAULT_CAPS.construction if cap is None else cap
    label = render(spec)
    kind, args = spec.kind, spec.args
    if kind == "cyclic":
        _check_order(args[0], cap)
        return _build_cyclic(args[0], label)
    if kind == "dihedral":
        _check_order(args[0], cap)
        return _build_dihedral(args[0], label)
    if kind == "sym":
        return _build_sym(args[0], label, cap)
    if kind == "alt":
        return _build_alt(args[0], label, cap)
    if kind == "q8":
        _check_order(8, cap)
        return _build_q8(label)
    if kind == "elab":
        _check_order(args[0] ** args[1], cap)
        return _build_elab(args[0], args[1], label)
    if kind == "prod":
        return _build_prod(build(args[0], cap), build(args[1], cap), label, cap)
    if kind == "perm":
        degree = max((pt for gen in args for cyc in gen for pt in cyc), default=1)
        gens = [_cycles_to_permutation(gen, degree) for gen in args]
        return group_from_generators(gens, cap=cap, label=label)
    if kind == "table":
        raw = np.loadtxt(args[0], dtype=np.int64)
        return group_from_table(np.atleast_2d(raw), cap=cap, label=label)
    raise ValueError(f"unknown spec kind {kind!r}")


def _check_order(order: int, cap: int) -> None:
    if order > cap:
        raise ClosureExceedsCap(f"group order {order} exceeds construction cap {cap}")


def standard_catalog(max_order: int, cap: int | None = None) -> list[tuple[str, FiniteGroup]]:
    """The fixed family of test groups, filtered by order.

    Cyclic groups of every order up to the bound, dihedral groups from
    order 4 up, small symmetric and alternating groups, the quaternion
    group, elementary abelian groups for p in {2, 3, 5}, the nonabelian
    groups of order p^3 for p in {2, 3}, and three direct products. Names
    are the spec strings.
    """
    cap = DEFAULT_CAPS.construction if cap is None else cap
    bound = min(max_order, cap)
    specs: list[str] = []
    specs += [f"cyclic:{n}" for n in range(1, bound + 1)]
    specs += [f"dihedral:{m}" for m in range(4, bound + 1, 2)]
    specs += [f"sym:{n}" for n, size in ((3, 6), (4, 24), (5, 120)) if size <= bound]
    specs += [f"alt:{n}" for n, size in ((4, 12), (5, 60)) if size <= bound]
    if 8 <= bound:
        specs.append("q8")
    for p, top in ((2, 5), (3, 4), (5, 2)):
        specs += [f"elab:{p}^{k}" for k in range(2, top + 1) if p**k <= bound]
    if 27 <= bound:
        specs.append(HEISENBERG_3_SPEC)
        specs.append(EXTRASPECIAL_27_EXP9_SPEC)
    for spec_text, size in (
        ("prod(cyclic:2,cyclic:4)", 8),
        ("prod(cyclic:2,q8)", 16),
        ("prod(sym:3,cyclic:2)", 12),
    ):
        if size <= bound:
            specs.append(spec_text)
    out = []
    for text in specs:
        spec = parse_spec(text)
        out.append((render(spec), build(spec, cap=cap)))
    return out
