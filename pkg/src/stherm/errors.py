"""Exception types shared across the package."""


class SthermError(Exception):
    """Base class for all package errors."""


class NotSquare(SthermError):
    pass


class NotHermitian(SthermError):
    pass


class ConvergenceFailure(SthermError):
    pass


class NonFiniteResult(SthermError):
    pass


class DimensionMismatch(SthermError):
    pass


class InvalidSector(SthermError):
    pass


class NotAProbabilityVector(SthermError):
    pass


class NotADensityMatrix(SthermError):
    pass


class SupportViolation(SthermError):
    pass


class BracketFailure(SthermError):
    pass


class DegenerateHamiltonian(SthermError):
    pass


class DegenerateEffectiveTemperature(SthermError):
    pass


class PureStateLimit(SthermError):
    pass


class SpecMismatch(SthermError):
    pass


class IoError(SthermError):
    pass


class ConfigError(SthermError):
    """Base class for configuration problems (CLI exit code 2)."""


class ParseError(ConfigError):
    pass


class ValidationError(ConfigError):
    pass
