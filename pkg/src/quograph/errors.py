"""Exception hierarchy shared by all quograph modules."""


class QuographError(Exception):
    """Base class for all quograph errors."""


class GraphInputError(QuographError):
    """Malformed user input: bad edge, bad residue, bad graph6 string, ..."""


class SizeLimitError(GraphInputError):
    """Input exceeds a configured size cap (e.g. automorphism search)."""


class AnalysisError(QuographError):
    """The requested analysis is undefined for this input (e.g. disconnected graph)."""


class ContractViolationError(QuographError):
    """An internal consistency check that a theorem guarantees has failed.

    These indicate implementation bugs, never user errors, and map to CLI
    exit code 2.
    """


class ToleranceError(QuographError):
    """A floating-point computation disagrees with the exact path beyond tolerance."""
