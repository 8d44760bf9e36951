"""Exception types shared across the package."""


class VlcposError(Exception):
    """Base class for all package errors."""


class SceneConfigError(VlcposError, ValueError):
    """A scene, grid, or run configuration is inconsistent or incomplete."""


class DegenerateGeometryError(VlcposError, ValueError):
    """Coincident points or other geometry for which the channel is undefined."""


class EmptyResponseError(VlcposError, ValueError):
    """An impulse response contains no positive power bin."""


class InsufficientSupportError(VlcposError, ValueError):
    """Not enough samples around a peak to run a finite-difference estimate."""


class DatabaseLoadError(VlcposError, ValueError):
    """A serialized fingerprint database failed to parse or verify."""


class StaleDatabaseError(VlcposError, ValueError):
    """A database does not match the scene it is being used with."""
