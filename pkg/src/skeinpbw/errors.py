"""Exception hierarchy.  Each class carries the CLI exit code it maps to."""


class SkeinError(Exception):
    code = 1
    kind = "error"

    def __init__(self, message, context=None):
        super().__init__(message)
        self.message = message
        self.context = dict(context or {})

    def to_json(self):
        return {"code": self.kind, "message": self.message, "context": self.context}


class ValidationError(SkeinError):
    code = 2
    kind = "validation"


class UnsupportedError(ValidationError):
    kind = "unsupported"


class ConfigurationError(ValidationError):
    kind = "configuration"


class DerivationError(SkeinError):
    code = 3
    kind = "derivation"


class NonTerminationError(DerivationError):
    kind = "non_termination"


class CertificationError(SkeinError):
    code = 4
    kind = "certification"


class ParseError(SkeinError):
    code = 5
    kind = "parse"
