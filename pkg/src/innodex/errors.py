"""Exception hierarchy shared across the package."""

from __future__ import annotations


class InnodexError(Exception):
    """Base class for every error raised by innodex."""


class ConfigError(InnodexError):
    """Run configuration is missing, malformed, or internally inconsistent."""


# -- linguistic model ---------------------------------------------------

class MalformedModel(InnodexError):
    """Model file or model value violates a structural invariant."""


class ConstraintViolation(MalformedModel):
    """A local constraint (e.g. terms per query) cannot be satisfied."""


class DanglingSynonym(MalformedModel):
    """A synonym entry refers to a term absent from the model."""


# -- corpora and sources ------------------------------------------------

class MalformedCorpus(InnodexError):
    """A corpus record is unparseable or violates the record schema."""


class SourceError(InnodexError):
    """A search source failed to answer a query."""


class TransientSourceError(SourceError):
    """Retryable source failure (timeouts, throttling, flaky transport)."""


class SourceUnavailable(SourceError):
    """A source could not deliver every requested measurement.

    Carries whatever was measured successfully so callers can fall back
    to evidence-theoretic handling of the gaps.

    Attributes:
        partial: list of completed hit results, in request order.
        missing: list of (period_index, query_text) keys that failed.
    """

    def __init__(self, message: str, *, partial=None, missing=None):
        super().__init__(message)
        self.partial = list(partial or [])
        self.missing = list(missing or [])


# -- measurements and indicators ----------------------------------------

class DomainError(InnodexError):
    """An input value lies outside the operation's domain."""


class EmptyMeasurement(InnodexError):
    """An indicator was requested over an empty sample list."""


class InvalidWeights(InnodexError):
    """Criterion weights are out of range or do not sum to one."""


# -- time series ---------------------------------------------------------

class InsufficientData(InnodexError):
    """Too few points for the requested analysis."""


class DegenerateSpan(InnodexError):
    """A time span of zero or negative length."""


class SpanMismatch(InnodexError):
    """Two series that must share a span do not."""


# -- evidence fusion ------------------------------------------------------

class FrameMismatch(InnodexError):
    """Mass functions or queries defined over different frames."""


class TotalConflict(InnodexError):
    """Dempster combination with conflict mass 1: nothing survives.

    ``source_index`` is the 0-based position of the source whose
    incorporation produced the total conflict, when known.
    """

    def __init__(self, message: str, *, source_index: int | None = None):
        super().__init__(message)
        self.source_index = source_index


# -- tabular interchange ---------------------------------------------------

class SchemaError(InnodexError):
    """A CSV file does not match its expected schema."""
