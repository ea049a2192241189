"""Exception types shared across the package."""


class LiLabError(Exception):
    """Base class for package errors."""


class DescriptorError(LiLabError):
    """Invalid descriptor data (axiom violations, bad JSON schema)."""


class TableError(LiLabError):
    """Invalid zero-table data (ordering, signs, coverage, symmetry flags)."""


class LaurentError(LiLabError):
    """Invalid Laurent expansion data."""


class UnsupportedOperationError(LiLabError):
    """Operation not defined for this descriptor (e.g. degree zero)."""


class FetchError(LiLabError):
    """Remote zero-table fetch failed."""


class LabelNotFoundError(FetchError):
    """The remote database does not know the requested label."""


class MalformedResponseError(FetchError):
    """The remote response was truncated or failed to parse."""
