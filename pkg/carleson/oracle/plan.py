from dataclasses import dataclass, fields, replace

from carleson.utils.constants import OracleDefaults
from carleson.utils.error import DegeneratePlanError, FileFormatNotSupportedError
from carleson.utils.file_util import is_json_file, is_yaml_file, load_json_file, load_yaml_file
from carleson.utils.reporter import Reporter as rp


@dataclass(frozen=True)
class SamplingPlan:
    """
    How the oracle samples a subject region: a polar grid of radial_steps x angular_steps
    cell centres, then random_samples seeded uniform points, both kept only where every
    defining inequality holds with slack >= margin.
    """

    radial_steps: int = OracleDefaults.RADIAL_STEPS
    angular_steps: int = OracleDefaults.ANGULAR_STEPS
    margin: float = OracleDefaults.MARGIN
    random_samples: int = OracleDefaults.RANDOM_SAMPLES
    seed: int = OracleDefaults.SEED
    workers: int = OracleDefaults.WORKERS

    def __post_init__(self):
        if self.radial_steps < 2 or self.angular_steps < 2:
            raise DegeneratePlanError('A sampling grid needs at least 2 x 2 cells, got {} x {}.'
                                      .format(self.radial_steps, self.angular_steps))
        if not self.margin > 0:
            raise DegeneratePlanError('The sampling margin must be positive, got {!r}.'
                                      .format(self.margin))
        if self.random_samples < 0:
            raise DegeneratePlanError('random_samples must be >= 0, got {}.'
                                      .format(self.random_samples))
        if self.workers < 1:
            raise DegeneratePlanError('workers must be >= 1, got {}.'.format(self.workers))

    def check_margin(self, *heights):
        """The margin has to stay below a quarter of every height the plan is used with."""
        smallest = min(heights)
        if not self.margin < smallest / 4.0:
            raise DegeneratePlanError('Margin {!r} is too large for h = {!r}, it must be below '
                                      '{!r}.'.format(self.margin, smallest, smallest / 4.0))

    def with_overrides(self, **overrides):
        """Returns a copy with every override that is not None applied."""
        names = {f.name for f in fields(self)}
        changes = {key: value for key, value in overrides.items()
                   if value is not None and key in names}
        return replace(self, **changes)

    @classmethod
    def from_dict(cls, values):
        names = {f.name for f in fields(cls)}
        unknown = [key for key in values if key not in names]
        if unknown:
            rp.report('Ignoring unknown sampling plan keys: {}'.format(', '.join(sorted(unknown))))
        casts = {'radial_steps': int, 'angular_steps': int, 'margin': float,
                 'random_samples': int, 'seed': int, 'workers': int}
        return cls(**{key: casts[key](value) for key, value in values.items() if key in names})

    @classmethod
    def from_file(cls, file_path):
        """Loads a plan from a JSON or YAML mapping, optionally nested under a 'plan' key."""
        if is_json_file(file_path):
            values = load_json_file(file_path)
        elif is_yaml_file(file_path):
            values = load_yaml_file(file_path)
        else:
            raise FileFormatNotSupportedError('Sampling plans can only be read from JSON or YAML.')

        if isinstance(values, dict) and isinstance(values.get('plan'), dict):
            values = values['plan']
        if not isinstance(values, dict):
            raise FileFormatNotSupportedError('{} does not hold a sampling plan mapping.'
                                              .format(file_path))
        rp.report('Loaded sampling plan from {}'.format(file_path), 1)
        return cls.from_dict(values)


DEFAULT_PLAN = SamplingPlan()
