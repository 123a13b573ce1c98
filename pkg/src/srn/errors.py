"""Exception hierarchy shared across the package.

The CLI maps these onto process exit codes: argument errors exit 2,
precondition/verification failures exit 3, I/O and integrity failures
exit 4.
"""


class ArgumentError(ValueError):
    """A caller-supplied value is outside the operation's domain."""


class SizeLimitError(ArgumentError):
    """Exact enumeration was requested above the exact-size limit."""


class DegenerateSubsetError(ArgumentError):
    """A vertex subset has no neighbors, so the check is undefined."""


class SpectrumError(ArgumentError):
    """The spectrum of an all-zero matrix is undefined."""


class PreconditionError(ValueError):
    """Inputs are individually valid but jointly violate an operation's contract."""


class UnsupportedShapeError(PreconditionError):
    """A layer shape falls outside the supported (power-of-two, tiled) family."""


class IntegrityError(RuntimeError):
    """Serialized data is self-inconsistent (checksum/popcount mismatch)."""


class FormatError(IntegrityError):
    """Serialized data does not parse as the requested format."""
