from abc import ABC, abstractmethod
from dataclasses import dataclass
import math

import numpy as np

from carleson.geometry.landmarks import chord_half_angle
from carleson.geometry.points import BoundaryPoint, Height, PlanePoint
from carleson.utils.error import DomainError

# closed angular bound; a few ulps absorb the rounding of z/|z| for points on the arc MN
ARC_ULPS = 4


class Region(ABC):
    """
    Every region family of the unit disk handled by the oracle implements this base class.
    A region knows its exact membership test and its slack, the minimum margin by which a
    point satisfies (positive) or violates (negative) the defining inequalities.
    """

    base: BoundaryPoint
    height: Height

    @property
    def h(self):
        return self.height.value

    @abstractmethod
    def contains(self, z: PlanePoint) -> bool:
        """Exact membership, no tolerance slack."""
        pass

    @abstractmethod
    def slack(self, z: PlanePoint) -> float:
        pass

    @abstractmethod
    def contains_array(self, xy: np.ndarray) -> np.ndarray:
        """Vectorized exact membership for an (n, 2) array of points."""
        pass

    @abstractmethod
    def slack_array(self, xy: np.ndarray) -> np.ndarray:
        pass

    @abstractmethod
    def angular_half_width(self) -> float:
        """Largest |arg z - arg b| over the region's points (a supremum)."""
        pass

    def radial_range(self):
        """Bounding annulus (r_min, r_max) of the region."""
        return (1.0 - self.h, 1.0)

    def inside_with_margin(self, z, margin):
        return self.slack(z) >= margin

    def outside_with_margin(self, z, margin):
        return self.slack(z) <= -margin

    def describe(self):
        return '{}(b=({:.6g}, {:.6g}), h={:.6g})'.format(self.SYMBOL, self.base.x, self.base.y,
                                                          self.h)


@dataclass(frozen=True)
class CarlesonSet(Region):
    """S(b,h) = {z in D : |z - b| < h}."""

    base: BoundaryPoint
    height: Height

    SYMBOL = 'S'

    def contains(self, z):
        return math.hypot(z.x, z.y) < 1.0 and \
            math.hypot(z.x - self.base.x, z.y - self.base.y) < self.h

    def slack(self, z):
        return min(1.0 - math.hypot(z.x, z.y),
                   self.h - math.hypot(z.x - self.base.x, z.y - self.base.y))

    def contains_array(self, xy):
        xy = np.asarray(xy, dtype=float)
        modulus = np.hypot(xy[:, 0], xy[:, 1])
        to_base = np.hypot(xy[:, 0] - self.base.x, xy[:, 1] - self.base.y)
        return (modulus < 1.0) & (to_base < self.h)

    def slack_array(self, xy):
        xy = np.asarray(xy, dtype=float)
        modulus = np.hypot(xy[:, 0], xy[:, 1])
        to_base = np.hypot(xy[:, 0] - self.base.x, xy[:, 1] - self.base.y)
        return np.minimum(1.0 - modulus, self.h - to_base)

    def angular_half_width(self):
        # the rays from O tangent to T1 touch it at angle arcsin(h)
        return math.asin(self.h)


@dataclass(frozen=True)
class CarlesonWindow(Region):
    """
    W(b,h) = {z in D : |z| > 1 - h and z/|z| in closure(S(b,h))}.
    The angular test accepts chords |z/|z| - b| up to h + ARC_ULPS ulps of h (arc_bound), so
    points on the rays OM and ON keep counting as inside after z/|z| is rounded.
    """

    base: BoundaryPoint
    height: Height

    SYMBOL = 'W'

    @property
    def arc_bound(self):
        return self.h + ARC_ULPS * float(np.spacing(self.h))

    def contains(self, z):
        modulus = math.hypot(z.x, z.y)
        if not (1.0 - self.h < modulus < 1.0):
            return False
        # chord form of the angular constraint, no branch cuts
        chord = math.hypot(z.x / modulus - self.base.x, z.y / modulus - self.base.y)
        return chord <= self.arc_bound

    def slack(self, z):
        modulus = math.hypot(z.x, z.y)
        if modulus == 0.0:
            return -(1.0 - self.h)
        chord = math.hypot(z.x / modulus - self.base.x, z.y / modulus - self.base.y)
        return min(modulus - (1.0 - self.h), 1.0 - modulus, self.h - chord)

    def _radial_and_chord(self, xy):
        xy = np.asarray(xy, dtype=float)
        modulus = np.hypot(xy[:, 0], xy[:, 1])
        safe = np.where(modulus > 0.0, modulus, 1.0)
        chord = np.hypot(xy[:, 0] / safe - self.base.x, xy[:, 1] / safe - self.base.y)
        return modulus, chord

    def contains_array(self, xy):
        modulus, chord = self._radial_and_chord(xy)
        return (modulus > 1.0 - self.h) & (modulus < 1.0) & (chord <= self.arc_bound)

    def slack_array(self, xy):
        modulus, chord = self._radial_and_chord(xy)
        slack = np.minimum(np.minimum(modulus - (1.0 - self.h), 1.0 - modulus), self.h - chord)
        return np.where(modulus > 0.0, slack, -(1.0 - self.h))

    def angular_half_width(self):
        return chord_half_angle(self.height)


def make_region(symbol, base, h):
    """Builds S(b,h) or W(b,h) from a one-letter symbol."""
    height = h if isinstance(h, Height) else Height(h)
    if symbol == CarlesonSet.SYMBOL:
        return CarlesonSet(base, height)
    elif symbol == CarlesonWindow.SYMBOL:
        return CarlesonWindow(base, height)
    raise DomainError("Region symbol must be 'S' or 'W', got {!r}.".format(symbol))


def in_set(s: CarlesonSet, z: PlanePoint) -> bool:
    return s.contains(z)


def in_window(w: CarlesonWindow, z: PlanePoint) -> bool:
    """Window membership; the angular bound is h plus ARC_ULPS ulps of h, not exactly h."""
    return w.contains(z)


def set_slack(s: CarlesonSet, z: PlanePoint) -> float:
    return s.slack(z)


def window_slack(w: CarlesonWindow, z: PlanePoint) -> float:
    return w.slack(z)
