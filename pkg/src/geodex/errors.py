"""Exception types shared across the package."""


class GeodexError(Exception):
    """Base class for all library errors."""


class NearBoundary(GeodexError):
    """Ball point too close to the boundary sphere for the half-space inverse."""


class TooFewSamples(GeodexError):
    """A sampled curve needs at least three points for finite differences."""


class OutsideChartU(GeodexError):
    """The oriented geodesic is parallel to the height axis and has no (xi, eta) chart value."""


class ChartMismatch(GeodexError):
    """Tangent vectors expressed in different charts cannot be combined."""


class ChartBoundary(GeodexError):
    """A coordinate evaluation requires mu = infinity."""


class ReflectedDiagonal(GeodexError):
    """The boundary pair lies on the reflected diagonal and is not an oriented geodesic."""


class TranslationCase(GeodexError):
    """alpha = gamma = 0: the flow is a horizontal translation, handled separately."""


class LeavesChart(GeodexError):
    """The image geodesic under the induced action is parallel to the height axis."""


class ChartExit(GeodexError):
    """The geodesic of the neutral metric leaves the (xi, eta) chart at this parameter."""


class StepFailure(GeodexError):
    """The adaptive integrator failed, typically near a chart exit."""


class DegenerateNormalizer(GeodexError):
    """b3 = 1 with b4 != 0: the normalizing isometry of the ruled surface is undefined."""


class SingularPoint(GeodexError):
    """The induced surface metric is degenerate at the requested sample."""
