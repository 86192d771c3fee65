"""Exception types shared across the package."""


class InvalidInput(ValueError):
    """Malformed group, connection set, or permutation."""


class ResourceGuard(RuntimeError):
    """A configured size limit would be exceeded."""


class ClaimViolation(AssertionError):
    """A checked mathematical claim failed; ``mask`` names the witness set if any."""

    def __init__(self, message, mask=None):
        super().__init__(message)
        self.mask = mask


class DichotomyViolation(ClaimViolation):
    """A subset that is neither good nor covered by any bad family."""
