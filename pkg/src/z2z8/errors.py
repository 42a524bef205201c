"""Exception types shared across the package."""


class SelfCheckError(RuntimeError):
    """An always-on internal cross-check failed; indicates a bug, not bad input."""


class NotASubgroupError(ValueError):
    """A word set claimed to be a code is not an additive subgroup."""


class AmbientTooLargeError(ValueError):
    """A brute-force operation was asked to scan an ambient group above its guard."""
