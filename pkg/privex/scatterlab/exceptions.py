"""
Exception classes used throughout :mod:`privex.scatterlab`.

Every exception carries a machine readable :attr:`.ScatterLabException.code` which the command line tool emits
as a JSON diagnostic, e.g. ``{"error": "horizon-exceeded", "message": "...", "details": {"k_max": 4}}``.
"""
from typing import Optional

__all__ = [
    'ScatterLabException', 'TermValidationError', 'RangeError', 'UndecidablePair', 'UnsupportedSplit',
    'HorizonExceeded', 'NotIntervalUnion', 'NotSupported', 'ProfileMismatch', 'NotWellOrdered',
    'ChainIntractable', 'NotTotallyDisconnected', 'NonInjective', 'DimensionMismatch', 'FrameValidationError',
    'SchemaError', 'VerificationFailure',
]


class ScatterLabException(Exception):
    """Base exception for all ScatterLab errors"""
    code = 'scatterlab-error'

    def __init__(self, message: str = None, details: Optional[dict] = None):
        self.message = self.__class__.__doc__ if message is None else message
        self.details = {} if details is None else dict(details)
        super().__init__(self.message)

    def to_dict(self) -> dict:
        return dict(error=self.code, message=str(self.message), details=self.details)


class TermValidationError(ScatterLabException, ValueError):
    """A term violates a structural invariant of the point-set algebra"""
    code = 'validation'


class RangeError(ScatterLabException, ValueError):
    """A family parameter lies outside its supported range"""
    code = 'range'


class UndecidablePair(ScatterLabException):
    """The two operands fall outside the decidable pair classes of :func:`.meets`"""
    code = 'undecidable-pair'


class UnsupportedSplit(ScatterLabException):
    """A leaf outside the kernel / scattered classification was encountered"""
    code = 'unsupported-split'


class HorizonExceeded(ScatterLabException):
    """An iteration did not terminate within its ``k_max`` horizon"""
    code = 'horizon-exceeded'


class NotIntervalUnion(ScatterLabException):
    """The term does not denote a closed union of nondegenerate intervals"""
    code = 'not-interval-union'


class NotSupported(ScatterLabException):
    """The requested operation is not supported for this shape of term"""
    code = 'not-supported'


class ProfileMismatch(ScatterLabException):
    """The component structure does not match the expected window grammar"""
    code = 'profile-mismatch'


class NotWellOrdered(ScatterLabException):
    """The term does not denote a compact well-ordered set"""
    code = 'not-well-ordered'


class ChainIntractable(ScatterLabException):
    """Neither exact longest path search nor grid detection applies to a touch component"""
    code = 'chain-intractable'


class NotTotallyDisconnected(ScatterLabException):
    """The term contains a nondegenerate interval"""
    code = 'not-totally-disconnected'


class NonInjective(ScatterLabException):
    """The payload repeats a value"""
    code = 'non-injective'


class DimensionMismatch(ScatterLabException):
    """Boxes of differing dimension were combined"""
    code = 'dimension-mismatch'


class FrameValidationError(ScatterLabException):
    """A frame region violates its containment / disjointness invariants"""
    code = 'frame-validation'


class SchemaError(ScatterLabException):
    """A JSON document does not match its schema"""
    code = 'schema'


class VerificationFailure(ScatterLabException):
    """A distinguishability matrix or self-test criterion failed"""
    code = 'verification-failure'
