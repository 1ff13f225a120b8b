class SimulatorError(Exception):
	"""Base class for every error raised by the simulator."""


class UsageError(SimulatorError, ValueError):
	"""A function was called with arguments outside its contract."""


class ParameterError(SimulatorError, ValueError):
	"""A configuration violates a coding, modulation or topology constraint."""


class FieldDomainError(SimulatorError, ArithmeticError):
	"""Operation undefined in the finite field (inverse of zero)."""
