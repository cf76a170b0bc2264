"""Exception hierarchy.

Every domain error derives from :class:`RuelleBandsError` so the CLI can map
the whole family onto exit code 3 in one place.
"""


class RuelleBandsError(ValueError):
    pass


class IncompatibleRadicand(RuelleBandsError):
    pass


class NegativeInput(RuelleBandsError):
    pass


class ZeroDivision(RuelleBandsError, ZeroDivisionError):
    pass


class UnsupportedFamily(RuelleBandsError):
    pass


class UnsupportedGroup(RuelleBandsError):
    pass


class UnsupportedWeight(RuelleBandsError):
    pass


class IncompatiblePair(RuelleBandsError):
    pass


class SizeLimit(RuelleBandsError):
    pass


class GradingFailure(RuelleBandsError):
    pass


class NotScalar(RuelleBandsError):
    pass


class FactorizationDiverged(RuelleBandsError):
    pass
