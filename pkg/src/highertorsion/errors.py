"""Exception types shared across the package."""


class TruncationError(ValueError):
    """Requested degree exceeds the truncation order of a jet."""


class NotSymmetricError(ValueError):
    """Polynomial is not invariant under variable permutations.

    Carries ``transposition = (i, j)`` (1-based variable indices) naming a
    violating swap.
    """

    def __init__(self, transposition):
        i, j = transposition
        self.transposition = (i, j)
        super().__init__(
            f"polynomial is not symmetric: swapping v{i} and v{j} changes it")


class RankMismatchError(ValueError):
    """Operands have different variable or weight-lattice ranks."""

    def __init__(self, left, right, what="rank"):
        self.left = left
        self.right = right
        super().__init__(f"{what} mismatch: {left} vs {right}")


class FixedPointError(ValueError):
    """A representation contains the zero weight, so the torus action on the
    unit sphere has fixed points and the torsion series is undefined."""

    def __init__(self):
        super().__init__(
            "representation contains the zero weight: the torus action on "
            "the sphere has fixed points, torsion series undefined")


class InvalidModelError(ValueError):
    """A duality model carries a zero proportionality scale."""


class GeometryInputError(ValueError):
    """Invalid geometric input (boundary margin, non-unit tangent, ...)."""


class ParabolicConfigurationError(ValueError):
    """Projective dehomogenization denominator numerically vanished."""


class SolverError(RuntimeError):
    """Iterative solver did not converge; carries the final residual."""

    def __init__(self, message, residual=None):
        self.residual = residual
        super().__init__(message)


class QuadratureError(RuntimeError):
    """Numerical quadrature could not be carried out."""


class RepParseError(ValueError):
    """Syntax error in a representation expression; carries ``offset``."""

    def __init__(self, message, offset):
        self.offset = offset
        super().__init__(f"{message} (at offset {offset})")
