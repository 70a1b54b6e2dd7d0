from dataclasses import dataclass
import math

from carleson.geometry.points import ORIGIN, BoundaryPoint, PlanePoint, as_height
from carleson.utils.error import DomainError


@dataclass(frozen=True)
class WindowLandmarks:
    """
    The named boundary points of W(b,h) and of the circle T1 of radius h about b.
    M and N are the endpoints of the arc MN on the unit circle, P and Q the corners on the
    inner circle of radius 1 - h, and M' the second point where the ray OM meets T1.
    theta is the half-angle of the arc MN seen from the origin.
    """

    theta: float
    M: PlanePoint
    N: PlanePoint
    P: PlanePoint
    Q: PlanePoint
    Mprime: PlanePoint


def chord_half_angle(h) -> float:
    """
    Angle theta between Ob and OM when |M - b| = h on the unit circle.
    2 - 2cos(theta) = h^2, so theta = 2 asin(h/2), which lies in (0, pi/3).
    """
    height = as_height(h)
    return 2.0 * math.asin(height.value / 2.0)


def landmarks(base: BoundaryPoint, h) -> WindowLandmarks:
    height = as_height(h)
    theta = chord_half_angle(height)
    alpha = base.angle
    inner = 1.0 - height.value
    # M' from the power of O with respect to T1: OM'.OM = 1 - h^2 and OM = 1
    power = power_of_origin(height)
    return WindowLandmarks(
        theta=theta,
        M=PlanePoint.from_polar(1.0, alpha + theta),
        N=PlanePoint.from_polar(1.0, alpha - theta),
        P=PlanePoint.from_polar(inner, alpha + theta),
        Q=PlanePoint.from_polar(inner, alpha - theta),
        Mprime=PlanePoint.from_polar(power, alpha + theta),
    )


def power_of_origin(h) -> float:
    """Power of O with respect to T1: |O - b|^2 - h^2 = 1 - h^2 > 0."""
    height = as_height(h)
    return 1.0 - height.value ** 2


def second_intersection(base: BoundaryPoint, h) -> PlanePoint:
    """
    Meets the ray O -> M with T1 by solving |t u - b|^2 = h^2 for t, u = M/|M|.
    The roots are cos(theta) +- sqrt(cos(theta)^2 - (1 - h^2)); the larger one is M itself,
    the smaller one is M'.
    """
    height = as_height(h)
    theta = chord_half_angle(height)
    direction = PlanePoint.from_polar(1.0, base.angle + theta)
    along = direction.x * base.x + direction.y * base.y
    discriminant = along * along - (base.point.distance(ORIGIN) ** 2 - height.value ** 2)
    if discriminant < 0.0:
        raise DomainError('The ray OM misses T1, discriminant {!r}.'.format(discriminant))
    t = along - math.sqrt(discriminant)
    return direction.scaled(t)


def _check_unit_ratio(name, value):
    if not (0.0 < value < 1.0):
        raise DomainError('{} must satisfy 0 < {} < 1, got {!r}.'.format(name, name, value))


def corner_distance_sq(r: float) -> float:
    """
    Squared distance |P - b|^2 from b to a corner of W(b,r).
    Law of cosines in the triangle bOP with OP = 1 - r and 2 - 2cos(theta) = r^2
    reduces 1 + (1 - r)^2 - 2(1 - r)cos(theta) to 2r^2 - r^3.
    """
    _check_unit_ratio('r', r)
    return 2.0 * r * r - r ** 3


def wedge_distance_sq(s: float) -> float:
    """
    Squared distance from b to the straight edge OM of W(b,s).
    The foot of the perpendicular halves the chord M'M, whose half-length is s^2/2,
    and |M - b| = s, hence s^2 - s^4/4 (which is sin^2 of the chord half-angle).
    """
    _check_unit_ratio('s', s)
    return s * s - s ** 4 / 4.0
