"""Exception hierarchy.

Every failure mode the library can certify is a distinct class so the CLI
can map them onto exit codes (input error, resource/cap, genericity).
"""


class BrmultError(Exception):
    """Base class for all library errors."""


class InputError(BrmultError):
    """Malformed or out-of-contract input (bad syntax, violated precondition)."""


class PolyParseError(InputError):
    def __init__(self, message, position):
        super().__init__(f"{message} (at position {position})")
        self.position = position


class PreconditionError(InputError):
    """An operation's stated precondition does not hold."""


class ExceedsCapError(BrmultError):
    """Truncation degree reached the cap without certification.

    Signals non-m-primary input or an example beyond desk scale.
    """

    def __init__(self, cap, message=None):
        super().__init__(message or f"no certification up to truncation degree {cap}")
        self.cap = cap


class ResourceError(BrmultError):
    """A configured size cap (generator blowup, matrix size) was hit."""


class GenericityError(BrmultError):
    """Randomized generic choices disagreed across routes or seeds.

    Carries the seeds used so the caller can retry reproducibly.
    """

    def __init__(self, message, seeds=()):
        super().__init__(message)
        self.seeds = tuple(seeds)


class PresentationUnavailableError(BrmultError):
    """The truncated-syzygy computation did not certify below the cap."""
