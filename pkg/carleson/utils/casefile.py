from dataclasses import dataclass

import pandas as pd

from carleson.utils.error import DomainError, FileFormatNotSupportedError
from carleson.utils.file_util import (is_csv_file, is_json_file, is_yaml_file, load_json_file,
                                      load_yaml_file)
from carleson.utils.reporter import Reporter as rp

DEFAULT_PART = 'iii'


@dataclass(frozen=True)
class Case:
    h: float
    c: float
    which: str = DEFAULT_PART


class CaseFile:
    """
    A list of (h, c, which) cases read from JSON, YAML or CSV. JSON and YAML files hold a
    list of mappings, or a mapping with a 'cases' list; a CSV file has the columns h, c and
    optionally which. A missing or blank which means part (iii).
    """

    def __init__(self, file_path):
        self.file_path = file_path
        self.cases = []

        if is_json_file(file_path):
            self.load_records(load_json_file(file_path))
        elif is_yaml_file(file_path):
            self.load_records(load_yaml_file(file_path))
        elif is_csv_file(file_path):
            self.load_csv_file(file_path)
        else:
            raise FileFormatNotSupportedError('Case files can only be JSON, YAML or CSV.')
        rp.report('Loaded {} cases from {}'.format(len(self.cases), file_path), 1)

    def load_csv_file(self, csv_file_path):
        df = pd.read_csv(csv_file_path, dtype={'which': str})
        df = df.rename(columns=lambda name: name.strip())
        self.load_records(df.to_dict(orient='records'))

    def load_records(self, records):
        if isinstance(records, dict):
            records = records.get('cases')
        if not isinstance(records, list):
            raise FileFormatNotSupportedError('{} does not hold a list of cases.'.format(
                self.file_path))
        self.cases = [self.to_case(index, record) for index, record in enumerate(records)]

    @staticmethod
    def to_case(index, record):
        if not isinstance(record, dict) or 'h' not in record or 'c' not in record:
            raise DomainError('Case {} needs the fields h and c, got {!r}.'.format(index, record))
        which = record.get('which')
        if which is None or pd.isna(which) or str(which).strip() == '':
            which = DEFAULT_PART
        return Case(float(record['h']), float(record['c']), str(which).strip().lower())

    def as_dataframe(self):
        return pd.DataFrame([vars(case) for case in self.cases], columns=['h', 'c', 'which'])

    def __iter__(self):
        return iter(self.cases)

    def __len__(self):
        return len(self.cases)
