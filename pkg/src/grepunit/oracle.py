"""Brute-force numerical-semigroup engine used as ground truth.

Everything here works from first definitions: membership by dynamic
programming, Apéry sets by relaxation over residue classes, pseudo-
Frobenius numbers by Apéry maximals cross-checked against the raw
definition, length sets by exhaustive factorization.  Nothing in this
module consults the closed formulas it is used to check.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Optional

from .apery import AperyElement, AperyTable
from .errors import CapacityError, NotNumericalSemigroupError

DEFAULT_SIEVE_CAP = 10**8
DEFAULT_FACTOR_CAP = 10**4


@dataclass(frozen=True)
class GenericSemigroup:
    """A numerical semigroup given by a finite generating set with gcd 1."""

    gens: tuple[int, ...]

    def __post_init__(self):
        if not self.gens:
            raise NotNumericalSemigroupError("empty generating set")
        if any(g <= 0 for g in self.gens):
            raise NotNumericalSemigroupError(f"generators must be positive: {self.gens}")
        if list(self.gens) != sorted(set(self.gens)):
            raise NotNumericalSemigroupError(f"generators must be ascending and distinct: {self.gens}")
        g = math.gcd(*self.gens)
        if g != 1:
            raise NotNumericalSemigroupError(
                f"gcd{self.gens} = {g}, must be 1 for the complement to be finite"
            )

    @classmethod
    def from_values(cls, values) -> "GenericSemigroup":
        return cls(tuple(sorted(set(values))))

    @property
    def multiplicity(self) -> int:
        return self.gens[0]


@dataclass(frozen=True)
class MembershipSieve:
    """Exact membership table for 0..bound.

    Lookup beyond the bound raises instead of guessing, so a check that
    outgrows its sieve fails loudly.
    """

    gens: tuple[int, ...]
    bound: int
    bits: bytes

    def __contains__(self, x: int) -> bool:
        if x < 0:
            return False
        if x > self.bound:
            raise CapacityError(f"membership query {x} beyond sieve bound {self.bound}")
        return bool(self.bits[x])

    def members(self) -> list[int]:
        return [x for x in range(self.bound + 1) if self.bits[x]]

    def gaps(self) -> list[int]:
        return [x for x in range(self.bound + 1) if not self.bits[x]]


def sieve(sg: GenericSemigroup, bound: int, cap: int = DEFAULT_SIEVE_CAP) -> MembershipSieve:
    """Membership table: x is a member iff x == 0 or x - g is a member
    for some generator g."""
    if bound < max(sg.gens):
        raise ValueError(f"sieve bound {bound} below largest generator {max(sg.gens)}")
    if bound + 1 > cap:
        raise CapacityError(f"sieve bound {bound} exceeds capacity cap {cap}")
    bits = bytearray(bound + 1)
    bits[0] = 1
    gens = sg.gens
    for x in range(sg.multiplicity, bound + 1):
        for g in gens:
            if g > x:
                break
            if bits[x - g]:
                bits[x] = 1
                break
    return MembershipSieve(sg.gens, bound, bytes(bits))


def apery_set(sg: GenericSemigroup, q: int) -> AperyTable:
    """Least member of each residue class mod q, by round-robin relaxation.

    Starting from 0, repeatedly relax the least-known value of every
    residue class through every generator until nothing improves.  Values
    per class only ever decrease and are bounded below, so this reaches
    the true minima without any a-priori bound on the semigroup.
    """
    if q <= 0:
        raise ValueError(f"need a positive element, got {q}")
    if not _is_member_dp(sg.gens, q):
        raise ValueError(f"{q} is not an element of the semigroup {sg.gens}")
    best: list[Optional[int]] = [None] * q
    best[0] = 0
    gens = sg.gens
    changed = True
    while changed:
        changed = False
        for r in range(q):
            v = best[r]
            if v is None:
                continue
            for g in gens:
                w = v + g
                r2 = w % q
                cur = best[r2]
                if cur is None or w < cur:
                    best[r2] = w
                    changed = True
    assert all(v is not None for v in best)
    return AperyTable.build(q, (AperyElement(v) for v in best))


def _is_member_dp(gens, x: int) -> bool:
    """Plain DP membership test up to x; needs no gcd hypothesis."""
    if x < 0:
        return False
    bits = bytearray(x + 1)
    bits[0] = 1
    for y in range(min(gens), x + 1):
        for g in gens:
            if g > y:
                break
            if bits[y - g]:
                bits[y] = 1
                break
    return bool(bits[x])


@dataclass(frozen=True)
class SemigroupInvariants:
    """Frobenius number, genus and friends, each computed two ways."""

    semigroup: GenericSemigroup
    apery: AperyTable
    sieve: MembershipSieve
    frobenius: int
    genus: int
    n_below: int  # members strictly below the Frobenius number


def basic_invariants(
    sg: GenericSemigroup, sieve_cap: int = DEFAULT_SIEVE_CAP
) -> SemigroupInvariants:
    """Compute F, g and n(S) twice - from the Apéry set of the
    multiplicity and from a raw gap sieve - and insist the routes agree.

    The sieve bound max(Apéry) + max generator covers every gap and every
    Apéry element, so both computations are complete.
    """
    m = sg.multiplicity
    ap = apery_set(sg, m)
    ap_values = ap.values()
    bound = ap.max_value() + max(sg.gens)
    sv = sieve(sg, bound, cap=sieve_cap)

    f_apery = ap.max_value() - m
    num = 2 * ap.total() - m * (m - 1)
    assert num % (2 * m) == 0, "Apéry sum inconsistent with an integer genus"
    g_apery = num // (2 * m)

    gaps = sv.gaps()
    f_sieve = max(gaps) if gaps else -1
    g_sieve = len(gaps)
    assert f_apery == f_sieve, f"Frobenius routes disagree: {f_apery} vs {f_sieve}"
    assert g_apery == g_sieve, f"genus routes disagree: {g_apery} vs {g_sieve}"

    # Apéry vs sieve agreement: member whose predecessor in its class is a gap.
    for w in ap_values:
        assert w in sv and (w - m) not in sv

    n_below = sum(1 for x in range(max(f_sieve, 0)) if x in sv)
    if f_sieve < 0:  # the semigroup is all of N
        n_below = 0
    return SemigroupInvariants(sg, ap, sv, f_sieve, g_sieve, n_below)


def frobenius(sg: GenericSemigroup) -> int:
    """Largest integer not in the semigroup (-1 when there is none)."""
    return basic_invariants(sg).frobenius


def genus(sg: GenericSemigroup) -> int:
    """Number of gaps."""
    return basic_invariants(sg).genus


def count_below_frobenius(sg: GenericSemigroup) -> int:
    """n(S): number of members strictly below the Frobenius number."""
    return basic_invariants(sg).n_below


def pseudo_frobenius(
    sg: GenericSemigroup, inv: Optional[SemigroupInvariants] = None
) -> list[int]:
    """Pseudo-Frobenius numbers, ascending.

    Computed as {w - m : w maximal in the Apéry set under the partial
    order "difference is a member"}, then cross-checked against the raw
    definition: x not in S with x + g in S for every generator g (adding
    a generator at a time reaches every nonzero member).
    """
    if inv is None:
        inv = basic_invariants(sg)
    sv = inv.sieve
    vals = inv.apery.values()
    maximals = []
    for idx, w in enumerate(vals):
        dominated = False
        for w2 in reversed(vals[idx + 1 :]):  # largest first: witnesses come fast
            if (w2 - w) in sv:
                dominated = True
                break
        if not dominated:
            maximals.append(w)
    pf = sorted(w - sg.multiplicity for w in maximals)

    direct = [
        x
        for x in range(-1, inv.frobenius + 1)
        if not (x >= 0 and x in sv) and all((x + g) in sv for g in sg.gens)
    ]
    assert pf == direct, f"pseudo-Frobenius routes disagree: {pf} vs {direct}"
    return pf


def minimal_generators(values) -> list[int]:
    """Unique minimal generating set of the semigroup the values generate.

    An element is redundant exactly when it is a sum of smaller ones.
    """
    vals = sorted(set(values))
    if not vals or any(v <= 0 for v in vals):
        raise NotNumericalSemigroupError(f"generators must be positive: {values}")
    if math.gcd(*vals) != 1:
        raise NotNumericalSemigroupError(
            f"gcd{tuple(vals)} != 1: not a numerical semigroup"
        )
    minimal = []
    for idx, v in enumerate(vals):
        smaller = vals[:idx]
        if not smaller or not _is_member_dp(smaller, v):
            minimal.append(v)
    return minimal


def length_set(
    sg: GenericSemigroup, x: int, cap: int = DEFAULT_FACTOR_CAP
) -> frozenset[int]:
    """All factorization lengths of x over the generators; empty iff x is
    not a member.

    Depth-first over generator multiplicities, largest generator first,
    pruned by the remaining value and memoized on (remainder, position).
    """
    if x < 0:
        raise ValueError(f"need x >= 0, got {x}")
    if x > cap:
        raise CapacityError(f"factorization target {x} exceeds cap {cap}")
    gens = sorted(sg.gens, reverse=True)
    memo: dict[tuple[int, int], frozenset[int]] = {}

    def lengths(rem: int, k: int) -> frozenset[int]:
        if rem == 0:
            return frozenset({0})
        if k == len(gens) or rem < gens[-1]:
            return frozenset()
        key = (rem, k)
        hit = memo.get(key)
        if hit is not None:
            return hit
        g = gens[k]
        out: set[int] = set()
        for u in range(rem // g + 1):
            out.update(u + l for l in lengths(rem - u * g, k + 1))
        result = frozenset(out)
        memo[key] = result
        return result

    return lengths(x, 0)


@dataclass(frozen=True)
class WilfData:
    """Wilf-inequality report: F <= e*n(S) - 1, plus the sharper bound
    F <= (t+1)*n(S) - 1 with t the type."""

    frobenius: int
    embedding_dimension: int
    type: int
    n_below: int
    wilf_ok: bool
    type_bound_ok: bool


def wilf_data(
    sg: GenericSemigroup,
    inv: Optional[SemigroupInvariants] = None,
    pf: Optional[list[int]] = None,
) -> WilfData:
    if inv is None:
        inv = basic_invariants(sg)
    if pf is None:
        pf = pseudo_frobenius(sg, inv)
    e = len(minimal_generators(sg.gens))
    t = len(pf)
    return WilfData(
        frobenius=inv.frobenius,
        embedding_dimension=e,
        type=t,
        n_below=inv.n_below,
        wilf_ok=inv.frobenius <= e * inv.n_below - 1,
        type_bound_ok=inv.frobenius <= (t + 1) * inv.n_below - 1,
    )
