"""Exception hierarchy shared by the whole package."""


class GrepunitError(Exception):
    """Base class for every error raised by this package."""


class InvalidParametersError(GrepunitError, ValueError):
    """The triple (a, b, n) does not define a numerical semigroup."""


class InvalidBaseError(InvalidParametersError):
    """Base b is out of range (b must be at least 2)."""

    def __init__(self, b):
        self.b = b
        super().__init__(f"base b must be >= 2, got {b}")


class InvalidLengthError(InvalidParametersError):
    """Sequence length n is out of range (n must be at least 2)."""

    def __init__(self, n):
        self.n = n
        super().__init__(f"length n must be >= 2, got {n}")


class InvalidShiftError(InvalidParametersError):
    """Shift coefficient a is out of range (a must be at least 1)."""

    def __init__(self, a):
        self.a = a
        super().__init__(f"shift a must be >= 1, got {a}")


class NotCoprimeError(InvalidParametersError):
    """gcd of the repunit multiplicity and the shift is not 1."""

    def __init__(self, a, b, n, gcd):
        self.a, self.b, self.n = a, b, n
        self.gcd = gcd
        super().__init__(
            f"gcd(repunit({b}, {n}), {a}) = {gcd}, must be 1 for "
            f"(a={a}, b={b}, n={n}) to generate a numerical semigroup"
        )


class NotNumericalSemigroupError(GrepunitError, ValueError):
    """A generating set whose gcd is not 1 (cofinite closure impossible)."""


class UnsupportedDimensionError(GrepunitError):
    """Lattice-matrix operations need n >= 3; the row pattern has no
    unambiguous two-column form."""


class CapacityError(GrepunitError):
    """An enumeration, sieve or factorization exceeded its configured cap."""
