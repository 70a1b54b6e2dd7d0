from dataclasses import dataclass

from carleson.utils.constants import Numerics
from carleson.utils.error import DomainError, RootNotFoundError
from carleson.utils.reporter import Reporter as rp


@dataclass(frozen=True)
class RootResult:
    value: float
    residual: float
    iterations: int


def bisect(func, lower, upper, tol=Numerics.TOLERANCE, max_iterations=Numerics.MAX_ITERATIONS,
           name='root'):
    """
    Bracketed bisection on [lower, upper] until |func(mid)| <= tol.
    The bracket must show a sign change; running out of iterations is a hard failure.
    """
    if tol <= 0:
        raise DomainError('Tolerance must be positive, got {!r}.'.format(tol))

    f_lower, f_upper = func(lower), func(upper)
    if f_lower == 0.0:
        return RootResult(lower, 0.0, 0)
    if f_upper == 0.0:
        return RootResult(upper, 0.0, 0)
    if (f_lower > 0) == (f_upper > 0):
        raise RootNotFoundError('No sign change for {} on [{!r}, {!r}]: f = {!r}, {!r}.'.format(
            name, lower, upper, f_lower, f_upper))

    for iteration in range(1, max_iterations + 1):
        mid = lower + (upper - lower) / 2.0
        if mid == lower or mid == upper:
            raise RootNotFoundError('Bracket for {} collapsed at {!r} before reaching tolerance '
                                    '{!r}.'.format(name, mid, tol))
        f_mid = func(mid)
        if abs(f_mid) <= tol:
            rp.report('Bisection for {} converged after {} iterations, residual {:.3e}'.format(
                name, iteration, f_mid), 2)
            return RootResult(mid, f_mid, iteration)
        if (f_mid > 0) == (f_lower > 0):
            lower, f_lower = mid, f_mid
        else:
            upper = mid

    raise RootNotFoundError('Bisection for {} did not reach tolerance {!r} in {} iterations.'
                            .format(name, tol, max_iterations))
