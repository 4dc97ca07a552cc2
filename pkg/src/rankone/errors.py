"""Exception types shared across the package."""


class DimensionError(ValueError):
    """A weight or coefficient vector has the wrong length."""


class DomainError(ValueError):
    """An argument lies outside the domain of an operation."""


class StructuralError(ValueError):
    """Inconsistent induction data (diagram mismatch, bad spherical root)."""


class UnsupportedPathError(ValueError):
    """The requested computation does not apply to this treatment."""


class CatalogLookupError(LookupError):
    """Unknown catalog family."""


class ConfigError(ValueError):
    """Invalid sweep configuration or variety description."""
