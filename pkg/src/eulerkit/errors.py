"""Exception types shared across the package."""


class InputError(ValueError):
    """Malformed construction input: bad labels, empty or duplicated facets."""


class ParseError(InputError):
    """Facet-file syntax error.  ``line`` is the 1-based line number, if known."""

    def __init__(self, message: str, line: int | None = None):
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
        self.line = line


class NotASimplexError(ValueError):
    """The queried simplex is not a member of the complex."""


class PreconditionError(ValueError):
    """An operation was invoked outside its stated domain."""


class UnknownCorpusError(LookupError):
    """The requested bundled complex does not exist."""
