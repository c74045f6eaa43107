"""Exception types shared across the package."""


class HingeAxisError(Exception):
    """Base class for all errors raised by this package."""


class ConfigurationError(HingeAxisError):
    """Invalid configuration or parameter values (user/usage error)."""


class DataError(HingeAxisError):
    """Malformed, implausible or insufficient input data."""


class NotStationaryError(DataError):
    """Data designated as stationary shows too much motion."""


class ImplausibleStationaryDataError(DataError):
    """Stationary accelerometer data is inconsistent with a resting sensor."""
