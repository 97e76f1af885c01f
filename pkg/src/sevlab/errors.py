"""Exception types raised across the package."""


class SevlabError(Exception):
    """Base class for all errors raised by sevlab."""


class ClosureCapExceeded(SevlabError):
    pass


class DegreeMismatch(SevlabError):
    pass


class ZeroSubstitution(SevlabError):
    pass


class InconsistentSystem(SevlabError):
    pass


class NonIntegralSolution(SevlabError):
    pass


class UnsupportedType(SevlabError):
    pass


class NotDominant(SevlabError):
    pass


class NonIntegerResult(SevlabError):
    pass


class SingularPoint(SevlabError):
    pass


class BudgetExceeded(SevlabError):
    pass


class UnsupportedPair(SevlabError):
    pass


class OutOfRange(SevlabError):
    pass


class TopNotFound(SevlabError):
    pass


class TopNotUnique(SevlabError):
    pass


class TooLarge(SevlabError):
    pass


class NotPure(SevlabError):
    pass


class NonIntegralLinkCount(SevlabError):
    pass


class NotAnAutomorphism(SevlabError):
    def __init__(self, message, generator=None):
        super().__init__(message)
        self.generator = generator


class UnknownDataset(SevlabError):
    pass


class NotHighestWeight(SevlabError):
    pass


class DimensionMismatch(SevlabError):
    pass


class MultiplicityNotFree(SevlabError):
    pass


class SelectionAmbiguous(SevlabError):
    pass


class SelectionMissing(SevlabError):
    pass


class UnsupportedCase(SevlabError):
    pass
