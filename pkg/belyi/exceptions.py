# Description: Domain exceptions raised by the verification toolkit.


class BelyiError(Exception):
    """Base class for every error raised by the toolkit."""


class NotTransitiveError(BelyiError, ValueError):
    """
    Raised when a permutation pair does not generate a transitive group.

    Explanation:
    A pair (sigma, alpha) encodes a dessin only when the group it generates acts transitively on the darts.
    The exception carries the orbits found so that callers can split the input.

    Args:
        - orbits (list[list[int]]): 1-based dart orbits of the generated group.
    """

    def __init__(self, orbits: list[list[int]]):
        self.orbits = orbits
        super().__init__(f"generated group is not transitive: {len(orbits)} orbits {orbits}")


class NotAutomorphismError(BelyiError, ValueError):
    """Raised when a permutation does not commute with sigma and alpha."""


class GroupTooLargeError(BelyiError, ValueError):
    """Raised when a closure computation exceeds its safety cap."""


class ZeroPolynomialError(BelyiError, ZeroDivisionError):
    """Raised when an operation needs a nonzero polynomial."""


class PoleError(BelyiError, ZeroDivisionError):
    """Raised when a rational function is evaluated or composed at one of its poles."""


class ParseError(BelyiError, ValueError):
    """Raised for malformed polynomial text."""


class SingularCurveError(BelyiError, ValueError):
    """Raised when a curve model has vanishing discriminant."""


class NotTorsionPointError(BelyiError, ValueError):
    """Raised when a point or abscissa does not have the required torsion order."""


class IrrationalPointError(BelyiError, ValueError):
    """
    Raised when the ordinate above a rational abscissa is irrational.

    Args:
        - discriminant (Fraction): discriminant of the quadratic in y.
    """

    def __init__(self, x, discriminant):
        self.x = x
        self.discriminant = discriminant
        super().__init__(f"no rational point above x = {x}: discriminant {discriminant} is not a square")


class UnsupportedCurveError(BelyiError, ValueError):
    """Raised for curves with j in {0, 1728}, whose twists are not classified by c4 and c6 ratios."""


class NonConvergenceError(BelyiError, ArithmeticError):
    """Raised when numeric root polishing does not converge."""


class DegeneratePointError(BelyiError, ArithmeticError):
    """Raised when a numeric evaluation has the indeterminate form 0/0."""


class TheoryViolationError(BelyiError, AssertionError):
    """Raised when two independent derivations of the same object disagree."""
