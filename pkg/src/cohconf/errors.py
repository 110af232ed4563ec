"""Exception and warning types shared across the package."""

from __future__ import annotations


class CohconfError(Exception):
    """Base class for all library errors."""


class MixedRadicand(CohconfError):
    """Arithmetic attempted between numbers with different nonzero radicands."""


class NegativeDiscriminant(CohconfError):
    """An eigenvalue discriminant is negative; no real spectrum exists."""


class NonIntegralMultiplicity(CohconfError):
    """Eigenvalue multiplicities fail to be positive integers."""


class NotCoherent(CohconfError):
    """A relation partition violates the constant-intersection-number axiom.

    Attributes i, j, k identify the triple whose count deviates; ``pair``
    is the first (alpha, beta) in class k realizing the deviation.
    """

    def __init__(self, i: int, j: int, k: int, pair: tuple[int, int], detail: str = ""):
        self.i, self.j, self.k, self.pair = i, j, k, pair
        msg = f"intersection count p[{i},{j}]^{k} is not constant; first deviating pair {pair}"
        if detail:
            msg += f" ({detail})"
        super().__init__(msg)


class DiagonalNotUnion(CohconfError):
    """Some class mixes diagonal and off-diagonal pairs."""

    def __init__(self, class_index: int):
        self.class_index = class_index
        super().__init__(f"class {class_index} mixes diagonal and off-diagonal pairs")


class NotConverseClosed(CohconfError):
    """The transpose of a class is not a single class."""

    def __init__(self, class_index: int):
        self.class_index = class_index
        super().__init__(f"transpose of class {class_index} is not a union-free single class")


class NotHomogeneous(CohconfError):
    """Operation requires a homogeneous configuration (single diagonal class)."""


class NotCommutative(CohconfError):
    """Operation requires a commutative configuration."""


class UnstableClustering(CohconfError):
    """Independent random draws produced different eigenvalue clusterings."""


class BadResidue(CohconfError):
    """Input integer has the wrong residue for the requested family."""


class BadModulus(CohconfError):
    """Input is not a prime with the required residue."""


class BadOrder(CohconfError):
    """No Steiner triple system exists on this number of points."""


class Disconnected(CohconfError):
    """Operation requires a connected graph."""


class NoMatch(CohconfError):
    """No theorem hypothesis matches the given multiplicity pattern."""


class SchemeSyntaxError(CohconfError):
    """Malformed scheme file text."""

    def __init__(self, line: int, detail: str):
        self.line = line
        super().__init__(f"line {line}: {detail}")


class BadDimensions(CohconfError):
    """Scheme file body does not match the declared dimensions."""


class NonContiguousClasses(UserWarning):
    """Scheme file used non-contiguous class labels (auto-fixed on parse)."""
