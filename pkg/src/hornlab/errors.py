"""Exception hierarchy shared across the package."""


class HornLabError(Exception):
    """Base class for package-specific failures."""


class SpecError(HornLabError, ValueError):
    """A sequence spec or domain config is malformed or evaluates invalidly."""


class CapacityError(HornLabError):
    """A result would exceed a documented size cap; refused rather than degraded."""


class NumericsError(HornLabError):
    """A numerical procedure broke down or cannot meet its accuracy contract."""
