class DomainError(ValueError):
    """Arithmetic on an argument outside an operation's domain (zero inverse, zero divisor)."""


class UncorrectableError(Exception):
    """The errata pattern exceeds what the decoder can correct."""


class InternalInconsistency(RuntimeError):
    """Solver output violates a layout the algorithms guarantee; indicates a bug, not channel noise."""


class FinishedStateError(RuntimeError):
    """Attempt to step a key-equation register bank that has already run 2t iterations."""
