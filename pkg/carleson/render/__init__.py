from carleson.render.figures import FigureKind, FigureSpec, render_figure, write_figure
from carleson.render.plots import plot_sweep
from carleson.render.svg import SvgCanvas
