from dataclasses import dataclass
from enum import Enum
from multiprocessing import Pool
from typing import List, Optional, Tuple

import numpy as np

from carleson.analysis.intervals import Part
from carleson.geometry.points import BoundaryPoint, Height, PlanePoint
from carleson.geometry.regions import CarlesonSet, CarlesonWindow, Region
from carleson.oracle.plan import DEFAULT_PLAN, SamplingPlan
from carleson.oracle.sampler import landmark_probes, sample_region
from carleson.utils.error import DomainError, WitnessError
from carleson.utils.reporter import Reporter as rp


class Outcome(Enum):
    VERIFIED = 'verified'
    REFUTED = 'refuted'


@dataclass(frozen=True)
class InclusionVerdict:
    """
    Result of an empirical inclusion check of subject into target.
    A Refuted verdict carries a witness lying in the subject and outside the target, both
    with slack of at least margin; it is rechecked with the exact predicates on creation.
    marginal_failures counts sampled points that missed the target only by less than margin.
    """

    outcome: Outcome
    tested_points: int
    subject: Region
    target: Region
    margin: float
    witness: Optional[PlanePoint] = None
    marginal_failures: int = 0

    def __post_init__(self):
        if self.outcome is Outcome.VERIFIED:
            if self.witness is not None:
                raise WitnessError('A verified inclusion cannot carry a witness.')
            return
        if self.witness is None:
            raise WitnessError('A refuted inclusion needs a witness.')
        if not is_robust_witness(self.subject, self.target, self.witness, self.margin):
            raise WitnessError('Witness {} is not margin-robust for {} < {}.'.format(
                self.witness, self.subject.describe(), self.target.describe()))

    @property
    def verified(self):
        return self.outcome is Outcome.VERIFIED

    @property
    def refuted(self):
        return self.outcome is Outcome.REFUTED


def is_robust_witness(subject, target, z, margin):
    return (subject.contains(z) and subject.inside_with_margin(z, margin)
            and not target.contains(z) and target.outside_with_margin(z, margin))


def candidate_points(subject: Region, target: Region, plan: SamplingPlan) -> np.ndarray:
    """Subject sample in scan order: grid (radial-major), random, landmark probes."""
    return np.concatenate((sample_region(subject, plan), landmark_probes(subject, target, plan)))


def _scan_chunk(args):
    """
    Scans candidates[start:stop] and returns (first robust index or None, marginal failures).
    Module level so a worker pool can pickle it.
    """
    subject, target, candidates, start, margin = args
    failing = ~target.contains_array(candidates)
    beyond_margin = target.slack_array(candidates) <= -margin
    marginal = int(np.count_nonzero(failing & ~beyond_margin))
    for index in np.flatnonzero(failing & beyond_margin):
        z = PlanePoint(float(candidates[index, 0]), float(candidates[index, 1]))
        if is_robust_witness(subject, target, z, margin):
            return start + int(index), marginal
    return None, marginal


def _scan(subject, target, candidates, plan):
    if plan.workers == 1:
        return [_scan_chunk((subject, target, candidates, 0, plan.margin))]

    bounds = np.linspace(0, len(candidates), plan.workers + 1).astype(int)
    jobs = [(subject, target, candidates[lo:hi], int(lo), plan.margin)
            for lo, hi in zip(bounds[:-1], bounds[1:]) if hi > lo]
    with Pool(processes=plan.workers) as pool:
        return pool.map(_scan_chunk, jobs)


def check_inclusion(subject: Region, target: Region,
                    plan: SamplingPlan = DEFAULT_PLAN) -> InclusionVerdict:
    """
    Samples the subject and tests every point against the target's exact predicate.
    The witness of a refutation is the first margin-robust failure in scan order,
    whatever the number of workers.
    """
    if subject.base != target.base:
        raise DomainError('Subject and target must share the base point, got {} and {}.'.format(
            subject.describe(), target.describe()))
    plan.check_margin(subject.h, target.h)

    rp.report('Checking {} < {}'.format(subject.describe(), target.describe()), 1)
    candidates = candidate_points(subject, target, plan)
    results = _scan(subject, target, candidates, plan)

    # the reducer keeps the minimal scan index
    found = [index for index, _ in results if index is not None]
    marginal = sum(count for _, count in results)
    if found:
        first = min(found)
        witness = PlanePoint(float(candidates[first, 0]), float(candidates[first, 1]))
        rp.report('Refuted at scan index {} of {}: {}'.format(first, len(candidates), witness), 1)
        return InclusionVerdict(Outcome.REFUTED, len(candidates), subject, target, plan.margin,
                                witness, marginal)

    if marginal:
        rp.report('{} points missed {} by less than the margin, treated as boundary noise'
                  .format(marginal, target.describe()), 1)
    return InclusionVerdict(Outcome.VERIFIED, len(candidates), subject, target, plan.margin,
                            None, marginal)


def find_counterexample(subject: Region, target: Region,
                        plan: SamplingPlan = DEFAULT_PLAN) -> Optional[PlanePoint]:
    return check_inclusion(subject, target, plan).witness


def check_chain(base: BoundaryPoint, h: float, c: float,
                plan: SamplingPlan = DEFAULT_PLAN) -> Tuple[InclusionVerdict,
                                                            Optional[InclusionVerdict]]:
    """
    Checks W(b,h/c) < S(b,h) and S(b,h) < W(b,ch). The second verdict is None when ch >= 1,
    there is no window W(b,ch) then.
    """
    carleson_set = CarlesonSet(base, Height(h))
    inner = check_inclusion(CarlesonWindow(base, Height(h / c)), carleson_set, plan)
    if not c * h < 1.0:
        return inner, None
    return inner, check_inclusion(carleson_set, CarlesonWindow(base, Height(c * h)), plan)


def oracle_verdicts(which, base: BoundaryPoint, h: float, c: float,
                    plan: SamplingPlan = DEFAULT_PLAN) -> Optional[List[InclusionVerdict]]:
    """
    The inclusions a part of the calculus asserts, checked empirically.
    Returns None when the part needs W(b,ch) and ch >= 1.
    """
    part = Part.parse(which)
    if not c > 1.0:
        raise DomainError('c must satisfy c > 1, got {!r}.'.format(c))
    if part is not Part.PART_I and not c * h < 1.0:
        rp.report('Oracle skipped: the window parameter ch = {:.12g} is not below 1'.format(c * h))
        return None

    carleson_set = CarlesonSet(base, Height(h))
    verdicts = []
    if part in (Part.PART_I, Part.PART_III):
        verdicts.append(check_inclusion(CarlesonWindow(base, Height(h / c)), carleson_set, plan))
    if part in (Part.PART_II, Part.PART_III):
        verdicts.append(check_inclusion(carleson_set, CarlesonWindow(base, Height(c * h)), plan))
    return verdicts
