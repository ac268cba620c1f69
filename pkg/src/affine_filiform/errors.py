"""Exception hierarchy. Violations carry exact defect data, never bare booleans."""

from __future__ import annotations


class AffineFiliformError(Exception):
    """Base class for every error raised by the package."""


class NonSquare(AffineFiliformError, ValueError):
    pass


class DimensionMismatch(AffineFiliformError, ValueError):
    pass


class BadDimension(AffineFiliformError, ValueError):
    pass


class ShapeMismatch(AffineFiliformError, ValueError):
    pass


class ParseError(AffineFiliformError, ValueError):
    """Malformed scalar, polynomial or document."""


class _Violation(AffineFiliformError):
    """A structural identity failed; ``indices`` are 0-based, ``defect`` is exact."""

    label = "violation"

    def __init__(self, indices: tuple[int, ...], defect):
        self.indices = tuple(indices)
        self.defect = defect
        shown = ",".join(str(i + 1) for i in self.indices)
        super().__init__(f"{type(self).__name__}({shown}): defect {_fmt(defect)}")


def _fmt(defect) -> str:
    # local import keeps this module dependency free at import time
    from fractions import Fraction

    from .exact_linalg import Matrix, format_scalar, format_vector

    if isinstance(defect, (int, Fraction)):
        return format_scalar(defect)
    if isinstance(defect, Matrix):
        return str(defect.to_strings())
    try:
        return format_vector(defect)
    except TypeError:
        return repr(defect)


class AntisymmetryViolation(_Violation):
    pass


class JacobiViolation(_Violation):
    pass


class HomomorphismViolation(_Violation):
    pass


class TorsionViolation(_Violation):
    pass


class FlatnessViolation(_Violation):
    pass


class NotClosed(_Violation):
    pass


class NotAntisymmetric(AffineFiliformError, ValueError):
    pass


class Degenerate(AffineFiliformError, ValueError):
    def __init__(self, rank: int, dim: int):
        self.rank = rank
        self.dim = dim
        super().__init__(f"form has rank {rank} < {dim}")


class OddDimension(AffineFiliformError, ValueError):
    pass


class NotNilpotentAlgebra(AffineFiliformError):
    pass


class IrrationalWeights(AffineFiliformError):
    """Some characteristic polynomial does not split over the rationals."""


class NotFaithful(AffineFiliformError):
    pass


class NotAffineShape(AffineFiliformError):
    pass
