"""Exception types shared across the package."""
from __future__ import annotations


class NonUnitaryError(ValueError):
    """Input matrix fails the unitarity check.

    Attributes:
        defect: max-norm of U†U - I for the offending matrix.
        tol: tolerance the defect was measured against.
    """

    def __init__(self, defect: float, tol: float):
        self.defect = float(defect)
        self.tol = float(tol)
        super().__init__(
            f"matrix is not unitary: defect {self.defect:.3e} exceeds tolerance {self.tol:.1e}"
        )


class ConsistencyError(RuntimeError):
    """Two internal computations that must agree did not.

    Raised when a quantity that is real by construction carries a large
    imaginary residue, or when redundant formulas for the same quantity
    disagree beyond tolerance. Indicates an inconsistent input rather
    than ordinary floating-point noise.
    """


class CatalogError(ValueError):
    """Unknown or malformed gate name passed to the catalog."""


class TheoremViolationError(RuntimeError):
    """Geometric and invariant-based classifications disagree off-boundary.

    Attributes:
        point: the chamber point where the routes disagreed.
        geometric_margins: signed slacks of the geometric inequalities.
        invariant_margins: signed slacks of the invariant inequalities.
    """

    def __init__(self, point, geometric_margins, invariant_margins):
        self.point = point
        self.geometric_margins = dict(geometric_margins)
        self.invariant_margins = dict(invariant_margins)
        super().__init__(
            f"classification routes disagree at {point}: "
            f"geometric margins {self.geometric_margins}, "
            f"invariant margins {self.invariant_margins}"
        )
