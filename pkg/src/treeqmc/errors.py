"""Exception types shared across the package."""


class TreeQMCError(Exception):
    """Base class for all package errors."""


class ParameterError(TreeQMCError, ValueError):
    """A numeric parameter is outside its admissible range (e.g. beta <= 0)."""


class SiteError(TreeQMCError, ValueError):
    """Site lists violate a precondition (overlap, missing subset, duplicates)."""


class HermiticityError(TreeQMCError, ValueError):
    """An operator required to be Hermitian is not, within tolerance."""


class FeasibilityError(TreeQMCError, RuntimeError):
    """A dense computation would exceed the configured size limits, or an
    observable's support exceeds the requested volume."""


class DomainError(TreeQMCError, ValueError):
    """A boundary point lies outside the admissible domain x > y >= 0."""


class DomainViolation(TreeQMCError):
    """The pull-up map is undefined at (x, y): x < 2*y*sqrt(cosh^3 b)/(1+cosh b).

    Carries the offending point and the threshold for diagnostics.
    """

    def __init__(self, x: float, y: float, threshold: float):
        self.x = x
        self.y = y
        self.threshold = threshold
        super().__init__(
            f"pull-up undefined at (x={x!r}, y={y!r}): x < threshold {threshold!r} "
            f"(deficit {threshold - x!r})"
        )

    @property
    def deficit(self) -> float:
        return self.threshold - self.x
