class PreconditionError(ValueError):
    """An operation was called outside its hypothesis (e.g. |E| <= q)."""


class NoQualifyingDirection(RuntimeError):
    """No direction determined by F has second moment below 2|E|^2/q."""


class DirectionNotDetermined(RuntimeError):
    """E has no pair u != w with u - w parallel to the requested direction."""


class VerificationError(AssertionError):
    """A computed object failed the identity it is guaranteed to satisfy."""
