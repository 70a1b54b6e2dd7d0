from carleson.oracle.inclusion import (InclusionVerdict, Outcome, check_chain, check_inclusion,
                                       find_counterexample, oracle_verdicts)
from carleson.oracle.plan import DEFAULT_PLAN, SamplingPlan
from carleson.oracle.sampler import landmark_probes, sample_region
