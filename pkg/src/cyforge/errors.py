"""Exception hierarchy shared across the engine."""


class CyforgeError(Exception):
    """Base class for all engine errors."""


class ValidationError(CyforgeError):
    """Bad user input: dangling names, malformed documents, illegal operations."""


class ParseError(ValidationError):
    """A document could not be parsed; carries line/field context in the message."""


class NonCycleTerm(ValidationError):
    """A polynomial offered as a potential contains a non-cycle term."""


class NameCollision(ValidationError):
    """A derived generator name clashes with an existing arrow."""


class DegreeMismatch(ValidationError):
    """A potential's cohomological degree is incompatible with the requested construction."""


class BadRelation(ValidationError):
    """A relation is not a combination of parallel paths of length >= 2."""


class LoopAtVertex(ValidationError):
    """Pre-mutation attempted at a vertex carrying a loop."""


class UnknownVertex(ValidationError):
    """A vertex name does not exist in the quiver."""


class UnsupportedArgument(ValidationError):
    """An operation received an argument outside its supported generator classes."""


class LinearTermPresent(ValidationError):
    """The potential contains linear terms, which the Ext-algebra extraction forbids."""


class D2Failure(CyforgeError):
    """The constructed differential does not square to zero.

    This signals an internal convention bug or an inconsistent deformation
    input and is never silently ignored.
    """

    def __init__(self, message: str, failures=None):
        super().__init__(message)
        self.failures = failures or []
