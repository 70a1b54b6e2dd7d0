class CarlesonError(Exception):
    pass


class DomainError(CarlesonError, ValueError):
    pass


class RootNotFoundError(CarlesonError):
    pass


class DegeneratePlanError(CarlesonError):
    pass


class WitnessError(CarlesonError):
    pass


class FigureSpecError(CarlesonError):
    pass


class FileFormatNotSupportedError(CarlesonError):
    pass


class UnsupportedPartError(CarlesonError, ValueError):
    def __init__(self, part):
        self.part = part
        self.message = "\'" + str(
            self.part) + "\' is not a part of the inclusion calculus, use 'i', 'ii' or 'iii'."
        super().__init__(self.message)
