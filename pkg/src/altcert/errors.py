"""Exception types shared across the package.

The CLI maps these onto its exit-code contract: input problems exit with 2,
numeric failures with 3.
"""


class AltcertError(Exception):
    """Base class for all altcert-specific errors."""


class GraphParseError(AltcertError, ValueError):
    """Malformed graph input text; the message names the offending line."""


class GraphValidationError(AltcertError, ValueError):
    """Structurally invalid graph (disconnected, too small, bad family size)."""


class QueryValidationError(AltcertError, ValueError):
    """A bound query that is inconsistent with the concrete graph."""


class VacuousQueryError(AltcertError, ValueError):
    """A query whose eligible vertex sets are too small to exist at all."""


class OracleSizeError(AltcertError, ValueError):
    """An exact-enumeration request beyond the configured size guard."""


class NumericError(AltcertError, RuntimeError):
    """Eigensolver or LP failure (non-convergence, unexpected status)."""
