"""Exception hierarchy. Every error raised by the package derives from
:class:`StableNormError`, which is itself a :class:`ValueError`."""


class StableNormError(ValueError):
    pass


class GraphFormatError(StableNormError):
    """Malformed graph description (missing keys, bad weight literal)."""


class NonPositiveWeight(StableNormError):
    pass


class DanglingEndpoint(StableNormError):
    pass


class Disconnected(StableNormError):
    pass


class DimensionMismatch(StableNormError):
    pass


class NotACycle(StableNormError):
    pass


class NotSimple(StableNormError):
    pass


class NotClosed(StableNormError):
    pass


class CircuitCapExceeded(StableNormError):
    pass


class DegenerateBall(StableNormError):
    pass


class NonIntegralClass(StableNormError):
    pass


class EmptySet(StableNormError):
    pass


class CapExceeded(StableNormError):
    pass


class DimensionTooHigh(StableNormError):
    pass


class UnknownCorpusName(StableNormError):
    pass
