"""Exception hierarchy. Every domain error derives from :class:`TropjError`."""


class TropjError(Exception):
    """Base class for domain errors (mapped to exit code 2 by the CLI)."""


class ParseError(TropjError):
    def __init__(self, message: str, position: int):
        super().__init__(f"{message} at position {position}")
        self.position = position


class EmptyPolynomial(TropjError):
    pass


class DegeneratePolygon(TropjError):
    pass


class NotOneInteriorPoint(TropjError):
    pass


class NotFullyMarked(TropjError):
    pass


class DegenerateLift(TropjError):
    pass


class DegenerateFan(TropjError):
    pass


class SingularCurve(TropjError):
    pass


class UnsupportedSupport(TropjError):
    pass


class AllTermsInfinite(TropjError):
    pass


class CalibrationFailure(TropjError):
    pass


class AlphaTooSmall(TropjError):
    pass
