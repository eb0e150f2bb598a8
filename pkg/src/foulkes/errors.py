"""Exception types shared across the package.

CLI exit-code mapping: ParseError and the contract errors (ValueError
subclasses) are usage errors (exit 2); CapExceeded and LimitExceeded are
resource errors (exit 3); VerificationFailure is exit 1.
"""


class FoulkesError(Exception):
    pass


class ParseError(FoulkesError, ValueError):
    """Malformed input string; the message names the offending token."""


class LimitExceeded(FoulkesError):
    """A configured size limit (e.g. max table degree) was exceeded."""


class CapExceeded(FoulkesError):
    """An enumeration or group-closure cap was exceeded.

    The message reports the exact size that would be required.
    """

    def __init__(self, message, required=None):
        super().__init__(message)
        self.required = required


class SizeMismatch(FoulkesError, ValueError):
    """Two partitions that must have equal size do not."""


class DegreeMismatch(FoulkesError, ValueError):
    """A permutation's degree does not match the ambient set."""


class DomainMismatch(FoulkesError, ValueError):
    """A class function is not defined on every cycle type of S_n."""


class BeadCountTooSmall(FoulkesError, ValueError):
    """Fewer abacus beads than the partition has parts."""


class OutOfRange(FoulkesError, ValueError):
    """A p-cycle or cyclic group does not fit inside the ambient degree."""


class UnsupportedS(FoulkesError, ValueError):
    """Wreath-tower Sylow construction requested outside desk scale."""


class NotFixedError(FoulkesError, ValueError):
    """A set partition required to be fixed by a group is not."""


class MixedBlockError(FoulkesError, ValueError):
    """A block straddles the support split; impossible for fixed input."""


class NotACoreError(FoulkesError, ValueError):
    """A partition passed as a p-core has a removable p-hook."""


class PreconditionsNotMet(FoulkesError, ValueError):
    """A report operation was invoked on a report with failed checks."""


class CacheCorrupt(FoulkesError):
    """A character-table cache file failed validation."""


class VerificationFailure(FoulkesError):
    """A verification suite found a failing check."""
