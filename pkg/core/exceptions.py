"""Error hierarchy shared by the services and the command line.

Every error carries the exit code the CLI reports for it: 1 for domain
failures, 2 for input and I/O failures.
"""


class SuperderError(Exception):
    exit_code: int = 1

    def __init__(self, detail: str):
        super().__init__(detail)
        self.detail = detail


class DomainError(SuperderError):
    exit_code = 1


class InvalidSpecError(DomainError):
    pass


class ConstructionError(DomainError):
    pass


class NotAnIdealError(DomainError):
    pass


class NotGradedError(DomainError):
    pass


class RootBasisError(DomainError):
    pass


class PreconditionError(DomainError):
    pass


class SolverError(DomainError):
    pass


class ExactArithmeticError(DomainError, ArithmeticError):
    pass


class InputError(SuperderError):
    exit_code = 2


class ParseError(InputError):
    pass


class ArtifactIOError(InputError):
    pass
