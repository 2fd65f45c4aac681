"""Constructive procedures on p-subgroups and coprime element decompositions.

sylow_chain builds a full tower p, p^2, ..., p^lambda by the class-equation
recursion: pick an order-p element whose conjugacy class size is prime to p,
pass to the quotient of its centralizer by its span, recurse, and lift the
result back through the coset section.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd

import numpy as np

from .errors import (
    NotAPGroup,
    NotCoprime,
    NotNormal,
    OrderMismatch,
    PrimeDoesNotDivideOrder,
    TrivialSubgroup,
)
from .groups import ElementIndex, FiniteGroup, power
from .numtheory import is_prime, prime_power_base, valuation
from .subgroups import (
    SubgroupSet,
    as_group,
    centralizer,
    cyclic_subgroup,
    is_normal,
    quotient,
)


@dataclass(frozen=True)
class SylowChain:
    """Nested subgroups of orders p, p^2, ..., p^lambda."""

    prime: int
    exponent: int
    chain: tuple[SubgroupSet, ...]

    @property
    def top(self) -> SubgroupSet:
        return self.chain[-1]


@dataclass(frozen=True)
class ChiefSeries:
    """Normal subgroups of orders p, ..., p^(lambda-1) inside a p-group."""

    series: tuple[SubgroupSet, ...]


@dataclass(frozen=True)
class CoprimeDecomposition:
    """An element split as a product of commuting parts of coprime orders."""

    a_part: ElementIndex
    b_part: ElementIndex
    a: int
    b: int
    alpha: int
    beta: int


def _preimage(parent: FiniteGroup, to_coset: np.ndarray, coset_arr: np.ndarray) -> np.ndarray:
    keep = np.isin(to_coset, coset_arr)
    return np.flatnonzero(keep).astype(np.int32)


def _chain_members(group: FiniteGroup, p: int, lam: int) -> list[np.ndarray]:
    """Member arrays of a Sylow tower of group, orders p^1..p^lam."""
    table = group.table
    orders = group.elem_order
    witness = -1
    for x in np.flatnonzero(orders == p):
        x = int(x)
        cent_size = int((table[:, x] == table[x, :]).sum())
        if valuation(cent_size, p) == lam:
            witness = x
            break
    if witness < 0:  # impossible by the class-equation count of order-p elements
        raise RuntimeError(f"no order-{p} element with full-valuation centralizer found")
    span = cyclic_subgroup(group, witness)
    if lam == 1:
        return [span._arr]
    cent = centralizer(group, witness)
    cent_grp, emb = as_group(cent)
    pos = np.full(group.order, -1, dtype=np.int32)
    pos[emb] = np.arange(emb.size, dtype=np.int32)
    span_in_cent = SubgroupSet._unchecked(cent_grp, np.sort(pos[span._arr]).astype(np.int32))
    quot = quotient(cent_grp, span_in_cent)
    rest = _chain_members(quot.group, p, lam - 1)
    lifted = [emb[_preimage(cent_grp, quot.to_coset, arr)] for arr in rest]
    return [span._arr] + [np.sort(arr).astype(np.int32) for arr in lifted]


def sylow_chain(group: FiniteGroup, p: int) -> SylowChain:
    """A tower of p-subgroups of orders p, p^2, ..., up to a full Sylow p-subgroup."""
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    lam = valuation(group.order, p)
    if lam == 0:
        raise PrimeDoesNotDivideOrder(f"{p} does not divide {group.order}")
    members = _chain_members(group, p, lam)
    chain = tuple(SubgroupSet._unchecked(group, arr) for arr in members)
    return SylowChain(prime=p, exponent=lam, chain=chain)


def chief_series(pgroup: FiniteGroup) -> ChiefSeries:
    """Normal subgroups of orders p..p^(lambda-1), each inside the next.

    Recursive construction: the span of the smallest-index central element
    of order p is the first term; the rest is the lifted series of the
    quotient by it.
    """
    p = prime_power_base(pgroup.order)
    if p is None:
        raise NotAPGroup(f"order {pgroup.order} is not a prime power")
    lam = valuation(pgroup.order, p)
    if lam == 1:
        return ChiefSeries(series=())
    central = (pgroup.table == pgroup.table.T).all(axis=1)
    candidates = np.flatnonzero(central & (pgroup.elem_order == p))
    first = cyclic_subgroup(pgroup, int(candidates[0]))
    quot = quotient(pgroup, first)
    rest = chief_series(quot.group).series
    lifted = [
        SubgroupSet._unchecked(pgroup, _preimage(pgroup, quot.to_coset, term._arr))
        for term in rest
    ]
    return ChiefSeries(series=(first, *lifted))


def central_element_of_order_p(pgroup: FiniteGroup, n: SubgroupSet) -> ElementIndex:
    """An order-p element of N that is central in the whole p-group.

    Scans N in index order for its first central non-identity element (the
    class-equation argument guarantees one) and takes the power that
    reduces its order to exactly p.
    """
    p = prime_power_base(pgroup.order)
    if p is None:
        raise NotAPGroup(f"order {pgroup.order} is not a prime power")
    if n.parent is not pgroup:
        raise NotNormal("subgroup does not belong to the given group")
    if n.is_trivial():
        raise TrivialSubgroup("need a nontrivial normal subgroup")
    if not is_normal(n):
        raise NotNormal("subgroup is not normal in the parent")
    central = (pgroup.table == pgroup.table.T).all(axis=1)
    for x in n._arr:
        x = int(x)
        if x != 0 and central[x]:
            mu = valuation(int(pgroup.elem_order[x]), p)
            return power(pgroup, x, p ** (mu - 1))
    raise RuntimeError("normal subgroup misses the center; engine invariant broken")


def coprime_decomposition(group: FiniteGroup, c: ElementIndex, a: int, b: int) -> CoprimeDecomposition:
    """Split c of order a*b into commuting parts of orders a and b.

    With a x + b y = 1, the parts are c^(b y) and c^(a x); exponents are
    canonicalized so 0 <= beta < a*b. The decomposition is unique.
    """
    if a < 1 or b < 1:
        raise ValueError("part orders must be positive")
    if gcd(a, b) != 1:
        raise NotCoprime(f"{a} and {b} are not coprime")
    ab = a * b
    if int(group.elem_order[c]) != ab:
        raise OrderMismatch(
            f"element has order {int(group.elem_order[c])}, expected {a}*{b}={ab}"
        )
    beta = (a * pow(a, -1, b)) % ab if ab > 1 else 0
    alpha = (1 - beta) % ab
    a_part = power(group, c, alpha)
    b_part = power(group, c, beta)
    if group.table[a_part, b_part] != c or group.table[a_part, b_part] != group.table[b_part, a_part]:
        raise RuntimeError("decomposition arithmetic broke; engine invariant violated")
    return CoprimeDecomposition(a_part=a_part, b_part=b_part, a=a, b=b, alpha=alpha, beta=beta)


def p_part_decomposition(group: FiniteGroup, x: ElementIndex, p: int) -> CoprimeDecomposition:
    """Split x into its p-part and its part of order prime to p."""
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    m = int(group.elem_order[x])
    a = p ** valuation(m, p)
    return coprime_decomposition(group, x, a, m // a)
