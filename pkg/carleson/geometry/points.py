from dataclasses import dataclass
import math

from carleson.utils.constants import Numerics
from carleson.utils.error import DomainError


@dataclass(frozen=True)
class PlanePoint:
    """A point of the complex plane in Cartesian coordinates."""

    x: float
    y: float

    def __post_init__(self):
        if not (math.isfinite(self.x) and math.isfinite(self.y)):
            raise DomainError('PlanePoint coordinates must be finite, got ({}, {}).'
                              .format(self.x, self.y))
        # keeps equality and hashing on plain floats
        object.__setattr__(self, 'x', float(self.x))
        object.__setattr__(self, 'y', float(self.y))

    @classmethod
    def from_polar(cls, radius, angle):
        return cls(radius * math.cos(angle), radius * math.sin(angle))

    @property
    def modulus(self):
        return math.hypot(self.x, self.y)

    @property
    def argument(self):
        return math.atan2(self.y, self.x)

    def distance(self, other):
        return math.hypot(self.x - other.x, self.y - other.y)

    def scaled(self, factor):
        return PlanePoint(self.x * factor, self.y * factor)

    def rotated(self, alpha):
        """Rotates the point about the origin by alpha radians."""
        cos_a, sin_a = math.cos(alpha), math.sin(alpha)
        return PlanePoint(cos_a * self.x - sin_a * self.y, sin_a * self.x + cos_a * self.y)


ORIGIN = PlanePoint(0.0, 0.0)


def rotate(z, alpha):
    return z.rotated(alpha)


@dataclass(frozen=True)
class BoundaryPoint:
    """
    A point of the unit circle, the base point b of a Carleson set or window.
    The stored point is renormalized to exact unit modulus after a validity check.
    """

    point: PlanePoint

    def __post_init__(self):
        modulus = self.point.modulus
        if abs(modulus - 1.0) > Numerics.UNIT_TOLERANCE:
            raise DomainError('Base point must lie on the unit circle, |b| = {!r}.'.format(modulus))
        object.__setattr__(self, 'point', PlanePoint(self.point.x / modulus,
                                                     self.point.y / modulus))

    @classmethod
    def from_angle(cls, angle):
        return cls(PlanePoint.from_polar(1.0, angle))

    @classmethod
    def default(cls):
        return cls(PlanePoint(1.0, 0.0))

    @property
    def angle(self):
        return self.point.argument

    @property
    def x(self):
        return self.point.x

    @property
    def y(self):
        return self.point.y


@dataclass(frozen=True)
class Height:
    """The height parameter h, restricted to the open interval (0, 1)."""

    value: float

    def __post_init__(self):
        value = float(self.value)
        if not (0.0 < value < 1.0):
            raise DomainError('Height must satisfy 0 < h < 1, got {!r}.'.format(self.value))
        object.__setattr__(self, 'value', value)

    def __float__(self):
        return self.value


def as_height(h):
    """Accepts a Height or a bare real and returns a validated Height."""
    if isinstance(h, Height):
        return h
    return Height(h)
