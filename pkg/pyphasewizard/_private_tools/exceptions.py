class BadCallError(ValueError):
    def __init__(self, message=None):
        if message is None:
            message = 'Wrong way of invoking this method. Check the documentation of PyPhaseWizard.'
        super().__init__(message)

class DomainError(ValueError):
    def __init__(self, message=None):
        if message is None:
            message = 'The argument lies outside the domain of this function.'
        super().__init__(message)

class TargetOutsideRangeError(ValueError):
    def __init__(self, message=None):
        if message is None:
            message = 'The target value is outside the range of the function over the bracket.'
        super().__init__(message)

class NoiselessOnlyError(ValueError):
    def __init__(self, message=None):
        if message is None:
            message = 'This analytic result only holds without phase diffusion (gamma=0).'
        super().__init__(message)

class ConvergenceError(RuntimeError):
    def __init__(self, message=None):
        if message is None:
            message = 'The iteration did not converge within the allowed number of steps.'
        super().__init__(message)

class QuadratureConvergenceError(ConvergenceError):
    def __init__(self, message=None):
        if message is None:
            message = 'Doubling the quadrature order changed the result beyond tolerance.'
        super().__init__(message)

class DegeneratePointError(ArithmeticError):
    def __init__(self, message=None):
        if message is None:
            message = 'The Fisher information is undefined where P(+) is 0 or 1 and no analytic limit is known.'
        super().__init__(message)

class NoCrossingError(RuntimeError):
    def __init__(self, message=None):
        if message is None:
            message = 'The signal has no half-maximum crossing in (0, pi).'
        super().__init__(message)

class ExperimentAbortedError(RuntimeError):
    def __init__(self, message=None):
        if message is None:
            message = 'The Monte Carlo experiment was aborted.'
        super().__init__(message)

class TailBoundWarning(UserWarning):
    pass
