"""Exception hierarchy shared by all simbloom modules."""


class SimbloomError(Exception):
    """Base class for all simbloom errors."""


class ParameterError(SimbloomError, ValueError):
    """A numeric parameter is outside its valid range."""


class ConfigurationError(SimbloomError):
    """An operation conflicts with how the filter was configured."""


class IncompatibleFiltersError(SimbloomError):
    """Two filters cannot be compared (kappa, hash family or gram size differ)."""


class ResourceLimitError(SimbloomError):
    """An enumeration would exceed the configured safety bound."""


class FormatError(SimbloomError):
    """A filter file does not follow the binary format."""


class TruncatedFileError(FormatError):
    """A filter file ends before its declared payload."""


class UnsupportedFormatError(FormatError):
    """A filter file declares an unknown version or digest identifier."""


class CanonicalFormError(FormatError):
    """A filter file has nonzero padding bits past the bucket size."""


class StoreError(SimbloomError):
    """A filter-store operation failed (duplicate or missing label)."""
