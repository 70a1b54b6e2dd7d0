import math

from carleson.geometry.landmarks import chord_half_angle
from carleson.geometry.points import BoundaryPoint, PlanePoint, as_height
from carleson.geometry.regions import CarlesonSet, CarlesonWindow
from carleson.utils.error import WitnessError
from carleson.utils.reporter import Reporter as rp


def prop1_witness(base: BoundaryPoint, h) -> PlanePoint:
    """
    Builds an explicit point of S(b,h) that is not in W(b,h).

    Seen from O, S(b,h) spans the angles |phi| < asin(h) while W(b,h) only spans
    |phi| <= theta = 2 asin(h/2) < asin(h). On the ray at angle phi the point closest to b
    is cos(phi) e^{i phi}, at distance sin(phi) from b. Taking phi halfway between theta and
    asin(h) gives sin(phi) < h (inside S) and phi > theta (outside the closed arc of W).
    """
    height = as_height(h)
    theta = chord_half_angle(height)
    phi = (theta + math.asin(height.value)) / 2.0
    witness = PlanePoint.from_polar(math.cos(phi), base.angle + phi)

    carleson_set = CarlesonSet(base, height)
    window = CarlesonWindow(base, height)
    if not carleson_set.contains(witness) or window.contains(witness):
        raise WitnessError('Constructed point {} does not separate {} from {}.'.format(
            witness, carleson_set.describe(), window.describe()))

    rp.report('Witness for h={:.6g}: phi={:.12g}, set slack={:.3e}, window slack={:.3e}'.format(
        height.value, phi, carleson_set.slack(witness), window.slack(witness)), 2)
    return witness
