"""Exception types shared across the package."""


class ResourceLimitError(RuntimeError):
    """An exact computation would exceed a documented size or node limit."""


class InfeasibleError(ValueError):
    """The requested object does not exist for the given parameters."""


class ContractViolation(RuntimeError):
    """An object handed to a certifying routine fails its stated property."""
