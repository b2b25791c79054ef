"""Exception hierarchy shared across the package.

Every error raised on purpose derives from PanelscopeError so callers can
catch one base class at CLI / service boundaries and map it to an exit code
or HTTP status.
"""


class PanelscopeError(Exception):
    """Base class for all package errors."""


# --- data sourcing ---------------------------------------------------------

class UnknownIndicator(PanelscopeError):
    """The API reported that the indicator code does not exist."""


class NetworkFailure(PanelscopeError):
    """Transport-level failure with no usable cache to fall back on."""


class CacheCorrupt(PanelscopeError):
    """A local cache file failed schema validation."""


# --- panel validation ------------------------------------------------------

class SchemaMismatch(PanelscopeError):
    """A dataset is missing one of the required columns."""


class EmptyPanel(PanelscopeError):
    """Every row of the dataset is invalid (no observed values at all)."""


class UnknownGroupVar(PanelscopeError):
    """The requested grouping variable is not one of region/income/lending."""


# --- numerics --------------------------------------------------------------

class SeriesTooShort(PanelscopeError):
    """A series has fewer observed points than the operation requires."""


class NonIncreasingTime(PanelscopeError):
    """The time index passed to a smoother is not strictly increasing."""


class LengthMismatch(PanelscopeError):
    """Vector arguments whose lengths must agree do not."""


class DegenerateVariance(PanelscopeError):
    """A variance-based statistic was requested on a zero-variance series."""


# --- dissimilarity / grouping ---------------------------------------------

class SingleCountry(PanelscopeError):
    """Pairwise distances need at least two countries."""


class NoSharedYears(PanelscopeError):
    """A country pair has no year observed on both sides."""


class UnlabeledCountry(PanelscopeError):
    """A country in the panel has no label for the requested grouping."""


class AllPairsMissing(PanelscopeError):
    """A country has no usable pair at all in the dissimilarity matrix."""


class UnknownCountry(PanelscopeError):
    """A record refers to a country absent from the source dataset."""


# --- highlighting / serving -------------------------------------------------

class UnknownMetric(PanelscopeError):
    """Metric name not in the fixed ten-metric registry."""


class EmptyGroup(PanelscopeError):
    """A group level has no usable metric values to compute a threshold."""


class UnknownPlot(PanelscopeError):
    """Requested static plot kind is not one of the supported kinds."""


class DataDirMissing(PanelscopeError):
    """The service data directory does not exist or is not readable."""


class PortInUse(PanelscopeError):
    """The requested service port is already bound."""
