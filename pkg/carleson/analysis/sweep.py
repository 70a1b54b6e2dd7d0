import math

import numpy as np
import pandas as pd

from carleson.analysis.functions import f_inv, k
from carleson.analysis.intervals import interval_part_iii
from carleson.utils.constants import Numerics
from carleson.utils.error import DomainError

SWEEP_COLUMNS = ['h', 'f_inv', 'k', 'g', 'lower_iii', 'upper_iii', 'empty']


def sweep_heights(h_min, h_max, steps):
    """h_i = h_min + i (h_max - h_min) / (steps - 1) for i = 0, ..., steps - 1."""
    if not (0.0 < h_min <= h_max < 1.0):
        raise DomainError('A sweep needs 0 < h_min <= h_max < 1, got [{!r}, {!r}].'.format(
            h_min, h_max))
    if steps < 2:
        raise DomainError('A sweep needs at least 2 steps, got {}.'.format(steps))
    return [h_min + i * (h_max - h_min) / (steps - 1) for i in range(steps)]


def sweep_table(h_min, h_max, steps, tol=Numerics.TOLERANCE) -> pd.DataFrame:
    """
    f_inv, k, g and the part (iii) interval along a uniform grid of heights.
    g and the interval columns are nan where the interval is empty, i.e. for h >= sqrt(3)/2.
    """
    rows = []
    for h in sweep_heights(h_min, h_max, steps):
        interval = interval_part_iii(h, tol)
        lower_f = f_inv(h, tol).value
        k_h = k(h)
        rows.append({
            'h': h,
            'f_inv': lower_f,
            'k': k_h,
            'g': math.nan if interval.is_empty else max(lower_f, k_h),
            'lower_iii': interval.lower,
            'upper_iii': interval.upper,
            'empty': int(interval.is_empty),
        })
    table = pd.DataFrame(rows, columns=SWEEP_COLUMNS)
    table['empty'] = table['empty'].astype(np.int64)
    return table


def sweep_csv(table: pd.DataFrame) -> str:
    """Byte-stable CSV text: 12 significant digits, blanks for missing values."""
    return table.to_csv(index=False, float_format='%.12g', na_rep='', lineterminator='\n')
