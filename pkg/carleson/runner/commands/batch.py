import json
import os

import pandas as pd

from carleson.analysis.intervals import analytic_verdict
from carleson.oracle.inclusion import oracle_verdicts
from carleson.runner.base.command import PLAN_FLAGS, Command
from carleson.runner.commands.check import oracle_status
from carleson.runner.output import json_value
from carleson.utils.casefile import CaseFile
from carleson.utils.constants import ExitCodes, Output
from carleson.utils.reporter import Reporter as rp

BATCH_COLUMNS = ['h', 'c', 'which', 'analytic', 'oracle', 'agree']


class BatchCommand(Command):

    def __init__(self, top_parser, subparser):
        super().__init__(top_parser, subparser)
        self.command = 'batch'
        self.help = 'Runs every (h, c, which) case of a JSON, YAML or CSV case file.'
        self.flags = [
            {'command': '--case-file', 'help': 'JSON, YAML or CSV file listing the cases.',
             'type': str, 'required': True, 'metavar': 'CASE_FILE_PATH'},
            {'command': '--out', 'help': 'CSV file to write. Standard output when omitted.',
             'type': str, 'metavar': 'CSV_PATH'},
        ] + PLAN_FLAGS

        self.add_subcommand()

    def run_case(self, case, base, plan, with_oracle):
        analytic = analytic_verdict(case.which, case.h, case.c)
        row = {'h': case.h, 'c': case.c, 'which': case.which,
               'analytic': 'true' if analytic else 'false', 'oracle': '', 'agree': ''}
        if with_oracle:
            verdicts = oracle_verdicts(case.which, base, case.h, case.c, plan)
            row['oracle'] = oracle_status(verdicts)
            if verdicts is not None:
                row['agree'] = int(all(v.verified for v in verdicts) == analytic)
        return row

    def run(self, args):
        cases = CaseFile(args.case_file)
        base = self.base_point(args)
        plan = self.sampling_plan(args) if args.oracle else None
        rows = [self.run_case(case, base, plan, args.oracle) for case in cases]
        table = pd.DataFrame(rows, columns=BATCH_COLUMNS)

        if args.json:
            records = [{key: json_value(value) for key, value in row.items()} for row in rows]
            text = json.dumps({'command': self.command, 'rows': records}) + '\n'
        else:
            text = table.to_csv(index=False, float_format=Output.FLOAT_FORMAT,
                                lineterminator='\n')
        if args.out is None:
            print(text, end='')
        else:
            os.makedirs(os.path.dirname(os.path.abspath(args.out)), exist_ok=True)
            with open(args.out, 'w', newline='') as csv_out:
                csv_out.write(text)
            rp.report('{} cases written to {}'.format(len(rows), args.out))

        disagreements = sum(1 for row in rows if row['agree'] == 0)
        if disagreements:
            rp.report('{} cases disagree with the oracle'.format(disagreements))
            return ExitCodes.DISAGREEMENT
        if any(row['analytic'] == 'false' for row in rows):
            return ExitCodes.REFUTED
        return ExitCodes.OK
