"""Closed formulas and structural constructions for generalized repunit
numerical semigroups.

Every function here evaluates a formula or an explicit construction in
O(n)-ish exact integer arithmetic (the Apéry enumerations are the lone
exception, sized by the multiplicity).  The brute-force engine in
`oracle` recomputes the same invariants from definitions; `verify` pits
the two against each other.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Optional

from . import arith
from .apery import AperyElement, AperyTable
from .arith import GrepunitParams, repunit
from .errors import CapacityError, InvalidBaseError, UnsupportedDimensionError

DEFAULT_APERY_CAP = 10**6


def coefficient_tuples(b: int, i: int, cap: Optional[int] = None) -> list[tuple[int, ...]]:
    """All tuples (u_2, ..., u_i) with 0 <= u_j <= b where an entry equal
    to b forces every entry to its left to be 0; lexicographic order.

    These tuples index the Apéry set of the semigroup with parameters
    (a, b, i): there are exactly repunit(b, i) of them, one per residue
    class of the multiplicity.
    """
    if b < 2:
        raise InvalidBaseError(b)
    if i < 2:
        raise ValueError(f"need i >= 2, got {i}")
    count = repunit(b, i)
    if cap is not None and count > cap:
        raise CapacityError(f"{count} coefficient tuples exceed cap {cap}")

    out: list[tuple[int, ...]] = []
    prefix: list[int] = []

    def extend(all_zero: bool) -> None:
        if len(prefix) == i - 1:
            out.append(tuple(prefix))
            return
        top = b if all_zero else b - 1
        for u in range(top + 1):
            prefix.append(u)
            extend(all_zero and u == 0)
            prefix.pop()

    extend(True)
    assert len(out) == count
    return out


def apery_set(params: GrepunitParams, cap: int = DEFAULT_APERY_CAP) -> AperyTable:
    """Apéry set with respect to the multiplicity a_1, built directly:
    one element sum(u_j * a_j) per coefficient tuple, carrying its tuple
    and its factorization length sum(u_j)."""
    gens = params.generators()
    elements = []
    for coeffs in coefficient_tuples(params.b, params.n, cap=cap):
        value = sum(u * g for u, g in zip(coeffs, gens[1:]))
        elements.append(AperyElement(value, coeffs, sum(coeffs)))
    return AperyTable.build(gens[0], elements)


def frobenius(params: GrepunitParams) -> int:
    """Frobenius number, by formula.

    The branch point b**n - 1 itself cannot occur: a = (b-1)*a_1 would
    share the factor a_1 with the multiplicity.
    """
    a, n = params.a, params.n
    top = params.b**params.n - 1
    assert a != top, "a = b**n - 1 contradicts the coprimality invariant"
    if a < top:
        return (n - 1) * (top - a) + a * params.multiplicity
    return top - a + a * params.multiplicity


def genus(params: GrepunitParams) -> int:
    """Number of gaps: ((n-1)*b**n + (a_1 - 1)*a) / 2, exactly."""
    numerator = (params.n - 1) * params.b**params.n + (params.multiplicity - 1) * params.a
    assert numerator % 2 == 0, "odd genus numerator indicates an arithmetic bug"
    return numerator // 2


def apery_sum_coefficients(b: int, n: int) -> list[int]:
    """Coefficients c_j = (b**n + b**(n-j+1)) / 2 for j = 2..n such that
    the Apéry elements sum to c_2*a_2 + ... + c_n*a_n."""
    if b < 2:
        raise InvalidBaseError(b)
    if n < 2:
        raise ValueError(f"need n >= 2, got {n}")
    coeffs = []
    for j in range(2, n + 1):
        numerator = b**n + b ** (n - j + 1)
        assert numerator % 2 == 0, "odd coefficient numerator indicates an arithmetic bug"
        coeffs.append(numerator // 2)
    return coeffs


def apery_sum(params: GrepunitParams) -> int:
    """Sum of the Apéry set, without enumerating it."""
    gens = params.generators()
    return sum(c * g for c, g in zip(apery_sum_coefficients(params.b, params.n), gens[1:]))


def length_sum(b: int, i: int) -> int:
    """Sum of tuple lengths sum(u_j) over all coefficient tuples of
    (b, i), in closed form."""
    return sum(apery_sum_coefficients(b, i))


def pseudo_frobenius(params: GrepunitParams) -> list[int]:
    """Pseudo-Frobenius numbers {(n-i+1)*(b**n - 1 - a) + a*a_1 : i=2..n},
    ascending; always n-1 distinct values, the largest being the
    Frobenius number."""
    a, n = params.a, params.n
    step = params.b**params.n - 1 - a
    base = a * params.multiplicity
    values = sorted({(n - i + 1) * step + base for i in range(2, n + 1)})
    assert len(values) == n - 1
    assert values[-1] == frobenius(params)
    return values


def apery_maximals(params: GrepunitParams) -> list[int]:
    """Maximal Apéry elements alpha_i = a_i + (b-1)*(a_i + ... + a_n) for
    i = 2..n, in index order: strictly decreasing when a < b**n - 1 and
    strictly increasing when a > b**n - 1."""
    gens = params.generators()
    b, n = params.b, params.n
    out = []
    for i in range(2, n + 1):
        tail = sum(gens[i - 1 :])
        out.append(gens[i - 1] + (b - 1) * tail)
    return out


def apery_set_recursive(
    prev: GrepunitParams, params: GrepunitParams, cap: int = DEFAULT_APERY_CAP
) -> AperyTable:
    """Apéry set of (a, b, n) lifted from the Apéry set of (a, b, n-1).

    Each element w' of the smaller table, of length m, lifts to
    w' + b**(n-1)*m + u*a_n for u = 0..b-1; the single extra element is
    b*a_n.  Both parameter triples must be valid; there is no fallback to
    direct enumeration when the smaller one is not.
    """
    if params.n < 3:
        raise ValueError(f"recursive construction needs n >= 3, got {params.n}")
    if (prev.a, prev.b, prev.n) != (params.a, params.b, params.n - 1):
        raise ValueError(
            f"expected previous triple (a={params.a}, b={params.b}, n={params.n - 1}), "
            f"got (a={prev.a}, b={prev.b}, n={prev.n})"
        )
    base = apery_set(prev, cap=cap)
    gens = params.generators()
    a_n = gens[-1]
    shift = params.b ** (params.n - 1)
    zeros = (0,) * (params.n - 2)
    elements = [AperyElement(params.b * a_n, zeros + (params.b,), params.b)]
    for elt in base.elements.values():
        for u in range(params.b):
            coeffs = elt.coeffs + (u,)
            value = elt.value + shift * elt.length + u * a_n
            assert value == sum(c * g for c, g in zip(coeffs, gens[1:]))
            elements.append(AperyElement(value, coeffs, elt.length + u))
    return AperyTable.build(gens[0], elements)


def is_homogeneous(
    params: GrepunitParams,
    length_sets: Callable[[int], frozenset[int]],
    cap: int = DEFAULT_APERY_CAP,
) -> bool:
    """Whether every Apéry element's full length set (as reported by the
    supplied independent oracle) is the singleton predicted by its
    coefficient tuple."""
    for elt in apery_set(params, cap=cap).elements.values():
        if set(length_sets(elt.value)) != {elt.length}:
            return False
    return True


def affine_closure_ok(
    params: GrepunitParams,
    bound: int,
    member: Optional[Callable[[int], bool]] = None,
) -> bool:
    """Whether the semigroup is closed under x -> b*x + a - (b**n - 1).

    Checks the exact generator identity b*a_j + a - (b**n - 1) == a_{j+1}
    for j = 1..n-1, then maps every nonzero member up to `bound` and
    tests membership of the image.  `member` defaults to a fresh sieve
    wide enough for all images.
    """
    b = params.b
    shift = params.a - (b**params.n - 1)
    gens = params.generators()
    for j in range(1, params.n):
        if b * gens[j - 1] + shift != gens[j]:
            return False
    if member is None:
        from . import oracle

        sg = oracle.GenericSemigroup.from_values(gens)
        sv = oracle.sieve(sg, max(b * bound + max(shift, 0), max(gens)))
        member = sv.__contains__
    for s in range(1, bound + 1):
        if member(s) and not member(b * s + shift):
            return False
    return True


@dataclass(frozen=True)
class LatticeMatrix:
    """(n-1) x n integer matrix whose rows annihilate the generator
    vector; its rows span the relation lattice of the semigroup."""

    rows: tuple[tuple[int, ...], ...]

    @property
    def ncols(self) -> int:
        return len(self.rows[0])

    def annihilates(self, vector: list[int]) -> bool:
        return all(sum(c * v for c, v in zip(row, vector)) == 0 for row in self.rows)


def lattice_matrix(params: GrepunitParams) -> LatticeMatrix:
    """Relation matrix: rows (0.. b, -(b+1), 1 ..0) sliding right, with
    last row ((a+1), 0, ..., 0, b, -(b+1)).  Needs n >= 3; the sliding
    pattern has no two-column form."""
    n, b, a = params.n, params.b, params.a
    if n < 3:
        raise UnsupportedDimensionError(f"lattice matrix needs n >= 3, got n = {n}")
    rows = []
    for i in range(n - 2):
        row = [0] * n
        row[i], row[i + 1], row[i + 2] = b, -(b + 1), 1
        rows.append(tuple(row))
    last = [0] * n
    last[0], last[-2], last[-1] = a + 1, b, -(b + 1)
    rows.append(tuple(last))
    return LatticeMatrix(tuple(rows))


def maximal_minors(matrix: LatticeMatrix) -> list[int]:
    """Determinants of the matrix with column k deleted, k = 1..n.

    Their absolute values recover the generators (signs alternate), and
    their gcd is 1 exactly when the parameters are valid.
    """
    n = matrix.ncols
    minors = []
    for k in range(n):
        sub = [[row[j] for j in range(n) if j != k] for row in matrix.rows]
        minors.append(_det_bareiss(sub))
    return minors


def _det_bareiss(m: list[list[int]]) -> int:
    """Exact integer determinant by fraction-free Gaussian elimination."""
    n = len(m)
    m = [row[:] for row in m]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if m[k][k] == 0:
            pivot = next((r for r in range(k + 1, n) if m[r][k] != 0), None)
            if pivot is None:
                return 0
            m[k], m[pivot] = m[pivot], m[k]
            sign = -sign
        for r in range(k + 1, n):
            for c in range(k + 1, n):
                m[r][c] = (m[r][c] * m[k][k] - m[r][k] * m[k][c]) // prev
            m[r][k] = 0
        prev = m[k][k]
    return sign * m[-1][-1]


@dataclass(frozen=True)
class InvariantReport:
    """All invariants of one semigroup, with the route that produced them."""

    params: GrepunitParams
    generators: tuple[int, ...]
    frobenius: int
    genus: int
    pseudo_frobenius: tuple[int, ...]
    type: int
    apery_sum: int
    n_of_s: int
    wilf_ok: bool
    source: str  # "closed-form" or "oracle"


def invariant_report(params: GrepunitParams) -> InvariantReport:
    """Bundle every closed-form invariant; n(S) comes from the identity
    g + n(S) = F + 1 and the Wilf flag from F <= e*n(S) - 1 with e = n."""
    f = frobenius(params)
    g = genus(params)
    pf = pseudo_frobenius(params)
    n_of_s = f + 1 - g
    return InvariantReport(
        params=params,
        generators=tuple(params.generators()),
        frobenius=f,
        genus=g,
        pseudo_frobenius=tuple(pf),
        type=len(pf),
        apery_sum=apery_sum(params),
        n_of_s=n_of_s,
        wilf_ok=f <= params.n * n_of_s - 1,
        source="closed-form",
    )
