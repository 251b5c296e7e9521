"""Apéry tables: least semigroup element per residue class.

Shared between the closed-form constructions (which know coefficient
tuples and factorization lengths) and the brute-force engine (which only
knows values).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Mapping, Optional


@dataclass(frozen=True)
class AperyElement:
    """One Apéry set member.

    `coeffs` are the coefficients (u_2, ..., u_n) of its factorization
    over the non-minimal generators and `length` the factorization length
    sum(coeffs); both are None when the element was found by search
    rather than constructed.
    """

    value: int
    coeffs: Optional[tuple[int, ...]] = None
    length: Optional[int] = None


@dataclass(frozen=True)
class AperyTable:
    """Apéry set of a semigroup with respect to `modulus`, keyed by
    residue class mod `modulus`."""

    modulus: int
    elements: Mapping[int, AperyElement]

    @classmethod
    def build(cls, modulus: int, elements: Iterable[AperyElement]) -> "AperyTable":
        """Index elements by residue, insisting on one per class.

        A repeated or missing residue means the caller's construction is
        wrong, so this fails loudly rather than keeping the smaller value.
        """
        by_residue: dict[int, AperyElement] = {}
        for elt in elements:
            r = elt.value % modulus
            if r in by_residue:
                raise AssertionError(
                    f"residue {r} mod {modulus} hit twice: "
                    f"{by_residue[r].value} and {elt.value}"
                )
            by_residue[r] = elt
        if len(by_residue) != modulus:
            raise AssertionError(
                f"expected {modulus} residue classes, got {len(by_residue)}"
            )
        if by_residue[0].value != 0:
            raise AssertionError("0 must represent the zero residue class")
        return cls(modulus, by_residue)

    def __len__(self) -> int:
        return len(self.elements)

    def values(self) -> list[int]:
        """Member values, ascending."""
        return sorted(e.value for e in self.elements.values())

    def total(self) -> int:
        return sum(e.value for e in self.elements.values())

    def max_value(self) -> int:
        return max(e.value for e in self.elements.values())
