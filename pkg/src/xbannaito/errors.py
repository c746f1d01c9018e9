"""Exception hierarchy shared by every module of the package."""


class XBIError(Exception):
    """Base class; carries an optional ``reference`` string naming the check."""

    def __init__(self, message, reference=None):
        super().__init__(message)
        self.reference = reference


class ZeroDenominator(XBIError, ZeroDivisionError):
    pass


class ParseError(XBIError, ValueError):
    def __init__(self, message, position=0):
        super().__init__(f"{message} (at position {position})")
        self.position = position


class DegenerateSpectrum(XBIError):
    pass


class TruncationViolated(XBIError):
    pass


class NonSimpleRoots(XBIError):
    pass


class PropagationPole(XBIError):
    pass


class ConjugationMismatch(XBIError):
    pass


class ParityMismatch(XBIError):
    pass


class InadmissibleSeed(XBIError):
    pass


class DegreeTableMismatch(XBIError):
    pass


class IdentityFailed(XBIError):
    pass


class RootCheckFailed(XBIError):
    pass


class MultiplierPole(XBIError):
    pass


class OrthogonalityFailed(XBIError):
    pass


class SignMismatch(XBIError):
    pass


class DuplicateSeed(XBIError):
    pass


class DeterminantMismatch(XBIError):
    pass
