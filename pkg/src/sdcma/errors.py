"""Exception types raised across the toolkit.

Every error derives from :class:`SdcmaError` and from ``ValueError`` so callers
can catch either the specific condition or the broad family.
"""


class SdcmaError(ValueError):
    """Base class for all toolkit errors."""


class UnsupportedOrder(SdcmaError):
    pass


class LengthMismatch(SdcmaError):
    pass


class DimensionMismatch(SdcmaError):
    pass


class TooFewPoints(SdcmaError):
    pass


class InvalidGeometry(SdcmaError):
    pass


class IndexOutOfRange(SdcmaError):
    pass


class CountMismatch(SdcmaError):
    pass


class RowOutOfRange(SdcmaError):
    pass


class ConfigMismatch(SdcmaError):
    pass


class NonPositiveRatio(SdcmaError):
    pass


class ZeroGain(SdcmaError):
    pass


class GeometryMismatch(SdcmaError):
    pass


class UnsupportedCombination(SdcmaError):
    pass


class NoCrossing(SdcmaError):
    """The BER curve never reaches the threshold inside the sweep."""


class ConfigError(SdcmaError):
    """A scenario file or override could not be parsed or validated."""
