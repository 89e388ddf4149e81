"""Exception types shared across the package."""


class TriopsError(Exception):
    """Base class for every domain error raised by this package."""


class CoincidentVertices(TriopsError):
    """Two vertices of a triangle triple coincide within tolerance."""


class DegenerateTriangle(TriopsError):
    """Operation requires a triangle with nonzero area."""


class IndeterminateValue(TriopsError):
    """A 0/0 ratio with no well-defined sphere value."""


class InvalidParameters(TriopsError):
    """Parameters outside the admissible domain of the operator family."""


class ChartEscape(TriopsError):
    """A chart component escaped to infinity (denominator vanished alone)."""

    def __init__(self, component: str, message: str = "", other=None):
        super().__init__(message or f"chart component {component!r} escapes to infinity")
        self.component = component
        self.other = other


class IndeterminateComponent(TriopsError):
    """A chart component is 0/0 and carries no information."""

    def __init__(self, component: str, message: str = "", other=None):
        super().__init__(message or f"chart component {component!r} is indeterminate (0/0)")
        self.component = component
        self.other = other


class DerivedParameterUndefined(TriopsError):
    """A derived parameter pair has a vanishing denominator."""


class ExcludedPoint(TriopsError):
    """Value falls on a point excluded from the torus domain."""


class ConicChartFailure(TriopsError):
    """Conic point lies outside the rational chart of the inverse map (v = 0)."""


class PoleAtInput(TriopsError):
    """Rational function evaluated at a pole."""


class AngleConstraintViolated(TriopsError):
    """Angle triple violates theta_x = theta_y - theta_yp (mod 1)."""


class ParseError(TriopsError):
    """Malformed textual input."""

    def __init__(self, message: str, position: int | None = None):
        super().__init__(message)
        self.position = position
