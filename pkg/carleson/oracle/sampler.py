import math

import numpy as np

from carleson.geometry.regions import CarlesonWindow, Region
from carleson.oracle.plan import DEFAULT_PLAN, SamplingPlan
from carleson.utils.error import DegeneratePlanError
from carleson.utils.reporter import Reporter as rp

# number of radii in every probe fan
PROBE_FAN = 32
# geometric offsets from an edge, in units of the margin
PROBE_OFFSETS = 4.0 * 2.0 ** np.arange(0, 24)


def _polar_to_xy(radii, angles, base_angle):
    """Points r e^{i(a + arg b)}: a polar layout in the frame b = (1,0), rotated back."""
    return np.column_stack((radii * np.cos(angles + base_angle),
                            radii * np.sin(angles + base_angle)))


def _keep_inside(region, xy, margin):
    if len(xy) == 0:
        return xy
    keep = (region.slack_array(xy) >= margin) & region.contains_array(xy)
    return xy[keep]


def grid_points(region: Region, plan: SamplingPlan) -> np.ndarray:
    """Cell centres of the polar grid over the region's annulus sector, radial-major."""
    r_lo, r_hi = region.radial_range()
    half = region.angular_half_width()
    radii = r_lo + (r_hi - r_lo) * (np.arange(plan.radial_steps) + 0.5) / plan.radial_steps
    angles = -half + 2.0 * half * (np.arange(plan.angular_steps) + 0.5) / plan.angular_steps
    rr, aa = np.meshgrid(radii, angles, indexing='ij')
    return _polar_to_xy(rr.ravel(), aa.ravel(), region.base.angle)


def random_points(region: Region, plan: SamplingPlan) -> np.ndarray:
    if plan.random_samples == 0:
        return np.empty((0, 2))
    rng = np.random.default_rng(plan.seed)
    r_lo, r_hi = region.radial_range()
    half = region.angular_half_width()
    radii = rng.uniform(r_lo, r_hi, plan.random_samples)
    angles = rng.uniform(-half, half, plan.random_samples)
    return _polar_to_xy(radii, angles, region.base.angle)


def sample_region(region: Region, plan: SamplingPlan = DEFAULT_PLAN) -> np.ndarray:
    """
    Deterministic sample of a region as an (n, 2) array of x, y rows: the polar grid
    followed by the seeded random points, each kept only if it lies in the region with
    slack >= plan.margin. Identical plans give bitwise identical samples.
    """
    plan.check_margin(region.h)
    grid = _keep_inside(region, grid_points(region, plan), plan.margin)
    extra = _keep_inside(region, random_points(region, plan), plan.margin)
    samples = np.concatenate((grid, extra))
    if len(samples) == 0:
        raise DegeneratePlanError('Sampling plan {} accepted no point of {}.'.format(
            plan, region.describe()))
    rp.report('Sampled {}: {} grid and {} random points'.format(
        region.describe(), len(grid), len(extra)), 2)
    return samples


def _edge_angles(half, margin, limit):
    """Angles just past an angular edge at half, up to limit, nearest first."""
    if not limit > half:
        return np.empty(0)
    fractions = np.array([1.0 / 64, 1.0 / 16, 0.25, 0.5, 0.75])
    angles = np.concatenate((half + margin * PROBE_OFFSETS, half + (limit - half) * fractions))
    return np.sort(angles[angles < limit])


def landmark_probes(subject: Region, target: Region, plan: SamplingPlan) -> np.ndarray:
    """
    Points of the subject placed where inclusion failures concentrate: the corners P, Q and
    the arc ends M, N of a window, and rays just past the target's angular edge, where a
    Carleson set pokes out of a window near M' (radius 1 - h^2).
    """
    margin = plan.margin
    base_angle = subject.base.angle
    r_lo, r_hi = subject.radial_range()
    half_s = subject.angular_half_width()
    half_t = target.angular_half_width()
    fan = r_lo + (r_hi - r_lo) * (np.arange(PROBE_FAN) + 0.5) / PROBE_FAN
    chunks = []

    if isinstance(subject, CarlesonWindow):
        inset = 4.0 * margin
        corner_angles = np.concatenate(([half_s - inset], half_s - margin * PROBE_OFFSETS))
        corner_angles = corner_angles[corner_angles > 0.0]
        for sign in (1.0, -1.0):
            angles = sign * corner_angles
            chunks.append(_polar_to_xy(np.full(len(angles), r_lo + inset), angles, base_angle))
            chunks.append(_polar_to_xy(np.full(len(angles), r_hi - inset), angles, base_angle))

    for phi in _edge_angles(half_t, margin, half_s):
        radii = np.concatenate(([math.cos(phi)], fan))
        for sign in (1.0, -1.0):
            chunks.append(_polar_to_xy(radii, np.full(len(radii), sign * phi), base_angle))

    if not chunks:
        return np.empty((0, 2))
    return _keep_inside(subject, np.concatenate(chunks), margin)
