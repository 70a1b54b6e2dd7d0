import math

from carleson.analysis.roots import RootResult, bisect
from carleson.utils.constants import Numerics
from carleson.utils.error import DomainError

SQRT2 = math.sqrt(2.0)


def _check_height(h, upper=1.0, name='h'):
    if not (0.0 < h < upper):
        raise DomainError('{} must satisfy 0 < {} < {:.12g}, got {!r}.'.format(
            name, name, upper, h))


def _cubic(x):
    return x * (2.0 - x * x)


def f(x: float) -> float:
    """f(x) = 2x - x^3 on x > 1, strictly decreasing there."""
    if not x > 1.0:
        raise DomainError('f is defined for x > 1, got {!r}.'.format(x))
    return _cubic(x)


def f_inv(h: float, tol: float = Numerics.TOLERANCE) -> RootResult:
    """
    The unique c in (1, sqrt(2)) with 2c - c^3 = h.
    f(1) = 1 > h > 0 = f(sqrt(2)), so [1, sqrt(2)] always brackets the root.
    """
    _check_height(h)
    return bisect(lambda c: _cubic(c) - h, 1.0, SQRT2, tol=tol, name='f_inv({:.12g})'.format(h))


def k(h: float) -> float:
    """
    Lower endpoint of the part (ii) interval, (sqrt(2)/h) sqrt(1 - sqrt(1 - h^2)).
    1 - sqrt(1 - h^2) = h^2 / (1 + sqrt(1 - h^2)), which gives the cancellation free form
    sqrt(2 / (1 + sqrt(1 - h^2))).
    """
    _check_height(h)
    return math.sqrt(2.0 / (1.0 + math.sqrt(1.0 - h * h)))


def k_literal(h: float) -> float:
    """k(h) evaluated term by term; loses digits for small h."""
    _check_height(h)
    return (SQRT2 / h) * math.sqrt(1.0 - math.sqrt(1.0 - h * h))


def quad_interval(h: float):
    """
    Solves h^2 y^2 - 4y + 4 <= 0 for y = c^2 and returns (c_low, c_high) before the ch < 1 cap.
    The roots are y = 2(1 -+ sqrt(1 - h^2)) / h^2; the smaller one is taken through
    Vieta (y_low = 4 / (h^2 y_high)) so it does not cancel.
    """
    _check_height(h)
    root = math.sqrt(1.0 - h * h)
    y_high = 2.0 * (1.0 + root) / (h * h)
    y_low = 4.0 / (h * h * y_high)
    return math.sqrt(y_low), math.sqrt(y_high)


def quadratic_form(h: float, y: float) -> float:
    return h * h * y * y - 4.0 * y + 4.0


def F(h: float) -> float:
    """F(h) = f(k(h)) - h on (0, sqrt(3)/2), strictly decreasing with a single root h0."""
    _check_height(h, Numerics.HEIGHT_THRESHOLD)
    return _cubic(k(h)) - h


def solve_h0(tol: float = Numerics.TOLERANCE) -> RootResult:
    """The crossover root of F, bracketed by F(0.82) > 0 > F(0.83)."""
    lower, upper = Numerics.H0_BRACKET
    return bisect(F, lower, upper, tol=tol, name='h0')


def g(h: float, tol: float = Numerics.TOLERANCE) -> float:
    """Lower endpoint of the part (iii) interval, max(f_inv(h), k(h))."""
    _check_height(h, Numerics.HEIGHT_THRESHOLD)
    return max(f_inv(h, tol).value, k(h))


def cap_margin(h: float) -> float:
    """
    h - f(1/h). Both restrictions of part (iii) have common solutions iff f(1/h) < h,
    i.e. iff f_inv(h) < 1/h; the margin is positive on all of (0, sqrt(3)/2).
    """
    _check_height(h, Numerics.HEIGHT_THRESHOLD)
    return h - f(1.0 / h)


def below_threshold(h: float) -> bool:
    """True iff some c > 1 gives S(b,h) < W(b,ch), i.e. iff h < sqrt(3)/2."""
    return h < Numerics.HEIGHT_THRESHOLD
