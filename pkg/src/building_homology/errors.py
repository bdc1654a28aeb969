"""Exception types shared across the package."""


class UnsupportedCardinality(ValueError):
    """Requested field size is not a supported prime power."""


class AmbientMismatch(ValueError):
    """Operands live in different ambient spaces or over different fields."""


class GradeOverflow(ValueError):
    """Wedge product requested beyond the top exterior grade."""


class DegenerateInput(ValueError):
    """Input vectors fail a required independence / nondegeneracy condition."""


class DegenerateFrame(DegenerateInput):
    """A frame of lines does not consist of n independent lines."""


class NotATailSequence(ValueError):
    """Sequence fails the unit-leading-coordinate + nonzero-tail condition."""


class OrderViolation(RuntimeError):
    """A simplicial map failed to preserve the vertex order on a simplex."""


class DependenceViolation(ValueError):
    """Vector tuple does not have 'sum is the only dependence' shape."""


class MonotonicityViolation(RuntimeError):
    """A coefficient left its face's value space; local system not monotone."""


class PoleHit(ValueError):
    """A rational identity was sampled at a pole."""
