import abc

from carleson.geometry.points import BoundaryPoint
from carleson.oracle.plan import DEFAULT_PLAN, SamplingPlan
from carleson.utils.constants import Numerics

# every subcommand accepts these
COMMON_FLAGS = [
    {
        'command': '--json',
        'help': 'Print one JSON document instead of key=value lines.',
        'action': 'store_true',
    },
    {
        'command': '--b-angle',
        'help': 'Angle in radians of the base point b. Defaults to 0, b = (1, 0).',
        'type': float, 'default': 0.0, 'metavar': 'RADIANS',
    },
    {
        'command': '--verbose',
        'help': 'Reporter verbosity: 0 notices, 1 phases, 2 numerical detail.',
        'type': int, 'default': 0, 'metavar': 'LEVEL',
    },
    {
        'command': '--log-file',
        'help': 'Save every reported message to this text file.',
        'type': str, 'metavar': 'LOG_PATH',
    },
]

TOLERANCE_FLAG = {
    'command': '--tol',
    'help': 'Residual tolerance of the bisections.',
    'type': float, 'default': Numerics.TOLERANCE,
}

# sampling plan overrides, shared by check and batch
PLAN_FLAGS = [
    {
        'command': '--oracle',
        'help': 'Also run the sampling oracle and compare it with the analytic verdict.',
        'action': 'store_true',
    },
    {'command': '--plan-file', 'help': 'JSON or YAML sampling plan.', 'type': str,
     'metavar': 'PLAN_FILE_PATH'},
    {'command': '--radial', 'help': 'Radial grid steps.', 'type': int},
    {'command': '--angular', 'help': 'Angular grid steps.', 'type': int},
    {'command': '--margin', 'help': 'Robustness margin of samples and witnesses.',
     'type': float},
    {'command': '--samples', 'help': 'Number of seeded random samples.', 'type': int},
    {'command': '--seed', 'help': 'Seed of the random samples.', 'type': int},
    {'command': '--workers', 'help': 'Processes scanning the candidates.', 'type': int},
]


class Command(abc.ABC):

    def __init__(self, top_parser, subparser):
        self.top_parser = top_parser
        self.subparser = subparser

    @abc.abstractmethod
    def run(self, args):
        """Executes the subcommand and returns its exit code."""
        pass

    def add_subcommand(self):
        subcommand = self.subparser.add_parser(self.command, help=self.help)

        for flag in self.flags + COMMON_FLAGS:
            options = {key: value for key, value in flag.items() if key != 'command'}
            subcommand.add_argument(flag['command'], **options)

        subcommand.set_defaults(func=self.run)

    @staticmethod
    def base_point(args):
        return BoundaryPoint.from_angle(args.b_angle)

    @staticmethod
    def sampling_plan(args):
        plan = SamplingPlan.from_file(args.plan_file) if args.plan_file else DEFAULT_PLAN
        return plan.with_overrides(radial_steps=args.radial, angular_steps=args.angular,
                                   margin=args.margin, random_samples=args.samples,
                                   seed=args.seed, workers=args.workers)

    @staticmethod
    def emit(record, args):
        print(record.render(as_json=args.json))
