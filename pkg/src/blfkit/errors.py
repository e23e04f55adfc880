"""Exception hierarchy shared by the whole toolkit.

Every error the library raises on purpose derives from BlfError, so callers
(the service layer, the CLI) can map failure kinds to exit codes / HTTP
payloads without string matching.
"""


class BlfError(Exception):
    kind = "error"


class DimensionError(BlfError):
    # shape mismatch in exact linear algebra
    kind = "dimension"


class WordError(BlfError):
    # malformed curve / relator word
    kind = "word"


class FibrationError(BlfError):
    # semantic precondition violated (bad index, missing section, ...)
    kind = "validation"


class UnsupportedError(BlfError):
    # structurally sound input outside the supported scope of an operation
    kind = "unsupported"


class InapplicableError(BlfError):
    # predicate hypotheses not met (e.g. adjunction for spheres)
    kind = "validation"


class ParseError(BlfError):
    """Syntax error in a .blf document, with 1-based position."""

    kind = "parse"

    def __init__(self, message: str, line: int, col: int):
        super().__init__(f"{line}:{col}: {message}")
        self.message = message
        self.line = line
        self.col = col
