"""Exception hierarchy shared across the package."""


class SensesimError(Exception):
    """Base class for all errors raised by this package."""


class CorpusParseError(SensesimError):
    """Malformed corpus input (bad tag suffix, undecodable bytes, ...)."""

    def __init__(self, message, line_number=None):
        if line_number is not None:
            message = f"line {line_number}: {message}"
        super().__init__(message)
        self.line_number = line_number


class InventoryError(SensesimError):
    """Invalid sense inventory (too few senses, duplicate ids, bad JSON)."""


class FeedbackError(SensesimError):
    """A feedback set could not be built (e.g. empty after filtering)."""


class WeightError(SensesimError):
    """A context has no usable features, or a factor is undefined."""


class ClassifyError(SensesimError):
    """A context cannot be classified (no retained features)."""


class ModelIOError(SensesimError):
    """Model file is corrupt, truncated, or has an unsupported version."""
