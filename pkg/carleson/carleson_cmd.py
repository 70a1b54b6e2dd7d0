# -*- coding: utf-8 -*-
import sys

from carleson.runner.parserbuilder import ParserBuilder
from carleson.utils.constants import ExitCodes
from carleson.utils.error import CarlesonError
from carleson.utils.reporter import Reporter as rp


def main(argv=None):
    parser = ParserBuilder.DefaultParser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exit_request:
        # argparse exits with 2 on usage errors and 0 after --help
        return exit_request.code

    if not hasattr(args, 'func'):
        parser.print_help()
        return ExitCodes.USAGE

    rp.set_verbosity(args.verbose)
    try:
        return args.func(args)
    except CarlesonError as error:
        rp.report('{}: {}'.format(type(error).__name__, error))
        return ExitCodes.USAGE
    finally:
        if args.log_file is not None:
            rp.save(args.log_file)


if __name__ == '__main__':
    sys.exit(main())
