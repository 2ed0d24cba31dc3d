__all__ = (
    'MimoLabError',
    'ConfigurationError',
    'DomainError',
    'AsymptoticValidityError',
    'SingularGramError',
    'ScenarioParseError',
    'ScenarioValidationError',
)


class MimoLabError(Exception):
    pass


class ConfigurationError(MimoLabError, ValueError):
    pass


class DomainError(MimoLabError, ValueError):
    pass


class AsymptoticValidityError(MimoLabError, ArithmeticError):
    def __init__(self, message, M=None, denominator=None):
        super().__init__(message)
        self.M = M
        self.denominator = denominator


class SingularGramError(MimoLabError, ArithmeticError):
    def __init__(self, message, condition=None):
        super().__init__(message)
        self.condition = condition


class ScenarioParseError(MimoLabError, ValueError):
    def __init__(self, message, line=None, field=None):
        if line is not None:
            message = f'line {line}: {message}'
        elif field is not None:
            message = f'{field}: {message}'
        super().__init__(message)
        self.line = line
        self.field = field


class ScenarioValidationError(ConfigurationError):
    def __init__(self, message, M=None, case_id=None):
        super().__init__(message)
        self.M = M
        self.case_id = case_id
