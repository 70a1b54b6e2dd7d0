import os

import matplotlib

matplotlib.use('Agg')
import matplotlib.pyplot as plt  # noqa: E402

from carleson.utils.constants import Numerics  # noqa: E402
from carleson.utils.reporter import Reporter as rp  # noqa: E402

CURVES = (('f_inv', 'f^-1(h)'), ('k', 'k(h)'), ('g', 'g(h)'), ('upper_iii', '1/h'))


def plot_sweep(table, path, h0=None, size_in_inches=(8, 5)):
    """
    Draws the sweep columns f_inv, k, g and upper_iii against h and marks the crossover
    root h0 (when given) and the threshold sqrt(3)/2. The file type follows the extension
    of path, as for any matplotlib figure.
    """
    fig, ax = plt.subplots(figsize=size_in_inches)
    for column, label in CURVES:
        if column in table:
            ax.plot(table['h'], table[column], label=label)
    if h0 is not None:
        ax.axvline(h0, color='grey', linestyle='--', label='h0 = {:.5f}'.format(h0))
    ax.axvline(Numerics.HEIGHT_THRESHOLD, color='black', linestyle=':', label='sqrt(3)/2')
    ax.set(xlabel='h', ylabel='c', title='Admissible constants for the inclusion chain')
    ax.set_ylim(1.0, 2.5)
    ax.grid()
    ax.legend()

    directory = os.path.dirname(os.path.abspath(path))
    os.makedirs(directory, exist_ok=True)
    plt.savefig(path)
    plt.close(fig)
    rp.report('Sweep plot written to {}'.format(path))
    return path
