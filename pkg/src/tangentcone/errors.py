"""Exception types shared across the package."""


class ParseError(ValueError):
    """Malformed polynomial or input-file text."""

    def __init__(self, message, position=None, text=None):
        self.position = position
        self.text = text
        if position is not None:
            message = f"{message} (at position {position})"
        super().__init__(message)


class UnknownVariableError(ParseError):
    pass


class RingMismatchError(ValueError):
    """Operands live in different rings."""


class NotGroebnerError(ValueError):
    """A reduction routine was handed a basis without Groebner status."""


class PreconditionError(ValueError):
    pass


class CannotCertify(Exception):
    """A prime decomposition leaf could not be certified prime.

    This is a refusal, not a failure: the computation ran but the
    allowlist of primality certificates did not cover the result.
    """

    def __init__(self, message, ideal=None):
        self.ideal = ideal
        super().__init__(message)


class CertificateFailure(RuntimeError):
    """An identity attached to a computed object did not hold."""

    def __init__(self, identity, detail=""):
        self.identity = identity
        self.detail = detail
        super().__init__(f"certificate failed: {identity}" + (f": {detail}" if detail else ""))
