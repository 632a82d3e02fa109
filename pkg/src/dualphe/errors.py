"""Exception hierarchy shared by all toolkit modules."""


class DualPheError(Exception):
    """Base class for all toolkit errors."""


class EvenModulus(DualPheError):
    pass


class WidthTooSmall(DualPheError):
    pass


class OperandOutOfRange(DualPheError):
    pass


class NotInvertible(DualPheError):
    pass


class LengthMismatch(DualPheError):
    pass


class ResidueOutOfRange(DualPheError):
    pass


class DlogNotFound(DualPheError):
    """Exhaustive scan exceeded its bound without hitting the target."""


class InvalidParams(DualPheError):
    pass


class NotCoprime(InvalidParams):
    pass


class MessageOutOfRange(DualPheError):
    pass


class CiphertextOutOfRange(DualPheError):
    pass


class CiphertextMalformed(DualPheError):
    pass


class VerificationMismatch(DualPheError):
    """Decrypted result disagrees with the known-plaintext recomputation."""

    def __init__(self, expected, actual, transcript=None):
        super().__init__(f"expected {expected}, decrypted {actual}")
        self.expected = expected
        self.actual = actual
        self.transcript = transcript
