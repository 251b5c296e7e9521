"""Exact integer primitives: repunit numbers and the generator sequence.

All arithmetic uses Python's native arbitrary-precision integers, so
results are exact for any parameter size; there is no overflow to guard
against.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import (
    InvalidBaseError,
    InvalidLengthError,
    InvalidShiftError,
    NotCoprimeError,
)


def repunit(b: int, length: int) -> int:
    """Base-b integer written with `length` ones: 1 + b + ... + b**(length-1).

    repunit(b, 0) is 0 by convention.
    """
    if b < 2:
        raise InvalidBaseError(b)
    if length < 0:
        raise ValueError(f"repunit length must be >= 0, got {length}")
    return (b**length - 1) // (b - 1)


@dataclass(frozen=True)
class GrepunitParams:
    """Validated parameter triple (a, b, n) of a generalized repunit
    numerical semigroup: the semigroup generated by
    a_i = repunit(b, n) + a * repunit(b, i - 1).

    Instances cannot be constructed unless b >= 2, n >= 2, a >= 1 and
    gcd(repunit(b, n), a) = 1; that gcd condition is exactly what makes
    the generated monoid a numerical semigroup.
    """

    a: int
    b: int
    n: int

    def __post_init__(self):
        if self.b < 2:
            raise InvalidBaseError(self.b)
        if self.n < 2:
            raise InvalidLengthError(self.n)
        if self.a < 1:
            raise InvalidShiftError(self.a)
        g = math.gcd(repunit(self.b, self.n), self.a)
        if g != 1:
            raise NotCoprimeError(self.a, self.b, self.n, g)

    @property
    def multiplicity(self) -> int:
        """Smallest generator a_1 = repunit(b, n)."""
        return repunit(self.b, self.n)

    def generator(self, i: int) -> int:
        """a_i for any i >= 1; indices beyond n extend by the same formula."""
        if i < 1:
            raise ValueError(f"generator index must be >= 1, got {i}")
        return repunit(self.b, self.n) + self.a * repunit(self.b, i - 1)

    def generators(self) -> list[int]:
        """Minimal generating set [a_1, ..., a_n], ascending."""
        return [self.generator(i) for i in range(1, self.n + 1)]


def validate(a: int, b: int, n: int) -> GrepunitParams:
    """Check (a, b, n) and return the validated triple, or raise a
    parameter error naming the first violated condition."""
    return GrepunitParams(a, b, n)


def generators(params: GrepunitParams) -> list[int]:
    """Minimal generating set of the semigroup, ascending."""
    return params.generators()


def relation_holds(params: GrepunitParams, i: int, j: int) -> bool:
    """Whether b*a_i + a_{i+j} == b*a_{i+j-1} + a_{i+1} (i, j >= 1).

    These are the binomial relations whose exponent vectors span the
    defect lattice of the semigroup.
    """
    if i < 1 or j < 1:
        raise ValueError(f"need i, j >= 1, got i={i}, j={j}")
    b = params.b
    lhs = b * params.generator(i) + params.generator(i + j)
    rhs = b * params.generator(i + j - 1) + params.generator(i + 1)
    return lhs == rhs


def extension_holds(params: GrepunitParams, i: int) -> bool:
    """Whether a_{n+i} == a_i + a * b**(i-1) * a_1 (i >= 1), i.e. the
    generators beyond a_n are redundant."""
    if i < 1:
        raise ValueError(f"need i >= 1, got {i}")
    a1 = params.multiplicity
    lhs = params.generator(params.n + i)
    rhs = params.generator(i) + params.a * params.b ** (i - 1) * a1
    return lhs == rhs
