"""Exception hierarchy shared by all ltkd modules."""


class LtkdError(Exception):
    """Base class for all errors raised by this package."""


class ShapeError(LtkdError):
    """Operands have incompatible dimensions."""


class ContractError(LtkdError):
    """A call violated an operation's precondition (non-finite input,
    non-scalar loss node, label out of range, ...)."""


class PartitionError(LtkdError):
    """A class-group partition would be invalid (empty group, bad thresholds)."""


class ConfigError(LtkdError):
    """An experiment configuration is inconsistent or out of range."""


class DataFormatError(LtkdError):
    """A dataset file is malformed; message carries the offending line."""


class CheckpointFormatError(LtkdError):
    """A checkpoint file has the wrong magic bytes or version."""
