from dataclasses import dataclass
from enum import Enum
import math

from carleson.analysis.functions import f_inv, g, k
from carleson.utils.constants import Numerics
from carleson.utils.error import DomainError, UnsupportedPartError

SETTLE_STEPS = 64


class Part(Enum):
    PART_I = 'i'
    PART_II = 'ii'
    PART_III = 'iii'

    @classmethod
    def parse(cls, value):
        if isinstance(value, cls):
            return value
        for part in cls:
            if part.value == str(value).strip().lower():
                return part
        raise UnsupportedPartError(value)


class IntervalKind(Enum):
    RAY_PART_I = 'ray_part_i'
    INTERVAL_PART_II = 'interval_part_ii'
    INTERVAL_PART_III = 'interval_part_iii'
    EMPTY = 'empty'


@dataclass(frozen=True)
class AdmissibleInterval:
    """
    The constants c > 1 admitted by one part of the inclusion calculus, [lower, upper).
    upper is math.inf for the ray of part (i); both endpoints are nan for an empty interval.
    Endpoints carry no tolerance: callers probing the regions near an endpoint should stand
    off it by at least 1e-2.
    """

    lower: float
    upper: float
    kind: IntervalKind
    h: float

    def __post_init__(self):
        if self.kind is IntervalKind.EMPTY:
            return
        if not (1.0 < self.lower < self.upper):
            raise DomainError('Admissible interval needs 1 < lower < upper, got [{!r}, {!r}).'
                              .format(self.lower, self.upper))
        if self.kind is IntervalKind.RAY_PART_I and not math.isinf(self.upper):
            raise DomainError('The part (i) ray must be unbounded above.')
        if self.kind is not IntervalKind.RAY_PART_I and self.upper != 1.0 / self.h:
            raise DomainError('Parts (ii) and (iii) are capped by 1/h, got upper={!r}.'
                              .format(self.upper))

    @classmethod
    def empty(cls, h):
        return cls(math.nan, math.nan, IntervalKind.EMPTY, h)

    @property
    def is_empty(self):
        return self.kind is IntervalKind.EMPTY

    @property
    def is_ray(self):
        return self.kind is IntervalKind.RAY_PART_I

    @property
    def width(self):
        if self.is_empty:
            return 0.0
        return self.upper - self.lower

    @property
    def midpoint(self):
        if self.is_empty or self.is_ray:
            return math.nan
        return (self.lower + self.upper) / 2.0

    def contains(self, c):
        return not self.is_empty and self.lower <= c < self.upper

    def covers(self, a, b):
        """True iff both ends of [a, b] lie in the interval."""
        return self.contains(a) and self.contains(b)


def _checked_h(h):
    if not (0.0 < h < 1.0):
        raise DomainError('h must satisfy 0 < h < 1, got {!r}.'.format(h))
    return float(h)


def _settle(lower, accept):
    """
    Moves a computed endpoint up, by one ulp and then doubling steps, until the closed
    condition holds there, so that c = lower is admitted by analytic_verdict. A root solved
    to a residual tol sits within about tol/|f'| of the exact endpoint.
    """
    step = math.ulp(lower)
    for _ in range(SETTLE_STEPS):
        if accept(lower):
            return lower
        lower += step
        step *= 2.0
    raise DomainError('Endpoint {!r} could not be settled on the admissible side.'.format(lower))


def ray_part_i(h: float, tol: float = Numerics.TOLERANCE) -> AdmissibleInterval:
    """R_h = [f_inv(h), inf): the constants c with W(b,h/c) < S(b,h)."""
    h = _checked_h(h)
    lower = _settle(f_inv(h, tol).value, lambda c: corner_condition(h, c))
    return AdmissibleInterval(lower, math.inf, IntervalKind.RAY_PART_I, h)


def _capped(lower, h, kind, accept):
    lower = _settle(lower, accept)
    upper = 1.0 / h
    # at the threshold the interval shrinks to nothing, rounding must not invert it
    if not lower < upper:
        return AdmissibleInterval.empty(h)
    return AdmissibleInterval(lower, upper, kind, h)


def interval_part_ii(h: float, tol: float = Numerics.TOLERANCE) -> AdmissibleInterval:
    """I_h = [k(h), 1/h): the constants c with S(b,h) < W(b,ch); empty unless h < sqrt(3)/2."""
    h = _checked_h(h)
    if not h < Numerics.HEIGHT_THRESHOLD:
        return AdmissibleInterval.empty(h)
    return _capped(k(h), h, IntervalKind.INTERVAL_PART_II, lambda c: wedge_condition(h, c))


def interval_part_iii(h: float, tol: float = Numerics.TOLERANCE) -> AdmissibleInterval:
    """I_h = [g(h), 1/h): the constants c with W(b,h/c) < S(b,h) < W(b,ch)."""
    h = _checked_h(h)
    if not h < Numerics.HEIGHT_THRESHOLD:
        return AdmissibleInterval.empty(h)
    return _capped(g(h, tol), h, IntervalKind.INTERVAL_PART_III,
                   lambda c: corner_condition(h, c) and wedge_condition(h, c))


def admissible_interval(which, h: float, tol: float = Numerics.TOLERANCE) -> AdmissibleInterval:
    part = Part.parse(which)
    if part is Part.PART_I:
        return ray_part_i(h, tol)
    elif part is Part.PART_II:
        return interval_part_ii(h, tol)
    return interval_part_iii(h, tol)


def corner_condition(h, c):
    """Part (i) condition 2c - c^3 <= h."""
    return c * (2.0 - c * c) <= h


def wedge_condition(h, c):
    """Part (ii) condition h^2 c^4 - 4c^2 + 4 <= 0 together with the window cap ch < 1."""
    y = c * c
    return h * h * y * y - 4.0 * y + 4.0 <= 0.0 and c * h < 1.0


def analytic_verdict(which, h: float, c: float) -> bool:
    """
    Decides the inclusion of a part from its inequality form, not from the solved endpoints,
    so that endpoints and conditions can be checked against each other.
    """
    part = Part.parse(which)
    h = _checked_h(h)
    if not c > 1.0:
        raise DomainError('c must satisfy c > 1, got {!r}.'.format(c))

    if part is Part.PART_I:
        return corner_condition(h, c)
    elif part is Part.PART_II:
        return wedge_condition(h, c)
    return corner_condition(h, c) and wedge_condition(h, c)
