from carleson.analysis.functions import (F, below_threshold, cap_margin, f, f_inv, g, k, k_literal,
                                         quad_interval, quadratic_form, solve_h0)
from carleson.analysis.intervals import (AdmissibleInterval, IntervalKind, Part,
                                         admissible_interval, analytic_verdict, interval_part_ii,
                                         interval_part_iii, ray_part_i)
from carleson.analysis.roots import RootResult, bisect
from carleson.analysis.sweep import SWEEP_COLUMNS, sweep_csv, sweep_heights, sweep_table
