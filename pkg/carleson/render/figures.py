from dataclasses import dataclass, field
from enum import Enum
import os
from typing import Optional

from carleson.geometry.landmarks import landmarks
from carleson.geometry.points import ORIGIN, BoundaryPoint, Height
from carleson.render.svg import SvgCanvas
from carleson.utils.constants import RenderDefaults
from carleson.utils.error import DomainError, FigureSpecError
from carleson.utils.reporter import Reporter as rp


class FigureKind(Enum):
    FIG1 = 'fig1'
    FIG2 = 'fig2'
    FIG3 = 'fig3'

    @classmethod
    def parse(cls, value):
        if isinstance(value, cls):
            return value
        for kind in cls:
            if kind.value == str(value).strip().lower():
                return kind
        raise FigureSpecError(
            "Figure kind must be one of fig1, fig2, fig3, got '{}'.".format(value))


@dataclass(frozen=True)
class FigureSpec:
    """
    What to draw. fig1 shows W(b,h) inside the circle of radius h about b, fig2 adds the
    window W(b,h/c) and fig3 the window W(b,ch) with the chord M'M.
    Figures are drawn to scale.
    """

    kind: FigureKind
    h: Height
    c: Optional[float] = None
    show_labels: bool = True
    canvas_px: int = RenderDefaults.CANVAS_PX
    base: BoundaryPoint = field(default_factory=BoundaryPoint.default)

    def __post_init__(self):
        object.__setattr__(self, 'kind', FigureKind.parse(self.kind))
        if not isinstance(self.h, Height):
            try:
                object.__setattr__(self, 'h', Height(self.h))
            except DomainError as error:
                raise FigureSpecError(str(error))
        if self.canvas_px <= 0:
            raise FigureSpecError('canvas_px must be positive, got {}.'.format(self.canvas_px))
        if self.kind is FigureKind.FIG1:
            return
        if self.c is None or not self.c > 1.0:
            raise FigureSpecError('{} needs a constant c > 1, got {!r}.'.format(
                self.kind.value, self.c))
        if self.kind is FigureKind.FIG3 and not self.c * self.h.value < 1.0:
            raise FigureSpecError('fig3 needs ch < 1, got ch = {!r}.'.format(self.c * self.h.value))

    @property
    def window_height(self):
        """Height of the window the figure is built around."""
        if self.kind is FigureKind.FIG2:
            return self.h.value / self.c
        if self.kind is FigureKind.FIG3:
            return self.c * self.h.value
        return self.h.value


def _draw_window(canvas, spec, marks, labels):
    canvas.line(marks.M, marks.P, 'edge')
    canvas.line(marks.Q, marks.N, 'edge')
    canvas.line(spec.base.point, spec.base.point.scaled(-1.0), 'diameter')
    if spec.show_labels:
        for name, point in (('O', ORIGIN), ('b', spec.base.point), ('M', marks.M),
                            ('N', marks.N), ('P', marks.P), ('Q', marks.Q)):
            labels.append((point, name))


def render_figure(spec: FigureSpec) -> str:
    """
    Draws one figure as an SVG document. The window whose landmarks are drawn is W(b,h)
    for fig1, W(b,h/c) for fig2 and W(b,ch) for fig3.
    """
    h = spec.h.value
    r = spec.window_height
    marks = landmarks(spec.base, r)
    base = spec.base.point
    canvas = SvgCanvas(spec.canvas_px, title='{} h={:.6g}{}'.format(
        spec.kind.value, h, '' if spec.c is None else ' c={:.6g}'.format(spec.c)))
    labels = []

    canvas.circle(ORIGIN, 1.0, 'unit')
    canvas.circle(ORIGIN, 1.0 - r, 'inner')
    canvas.circle(base, h, 'carleson')
    if spec.kind is not FigureKind.FIG1:
        canvas.circle(base, r, 'scaled')

    _draw_window(canvas, spec, marks, labels)
    if spec.kind is FigureKind.FIG3:
        # OM'.OM = 1 - (ch)^2 puts M' on the segment OM
        canvas.line(marks.Mprime, marks.M, 'chord')
        if spec.show_labels:
            labels.append((marks.Mprime, "M′"))

    for point, text in labels:
        canvas.label(point, text)
    rp.report('Rendered {} with window height {:.6g}'.format(spec.kind.value, r), 2)
    return canvas.to_string()


def write_figure(spec: FigureSpec, path):
    """Renders the figure completely before touching path."""
    document = render_figure(spec)
    directory = os.path.dirname(os.path.abspath(path))
    os.makedirs(directory, exist_ok=True)
    with open(path, 'w', encoding='utf-8') as svg_out:
        svg_out.write(document)
    rp.report('Figure written to {}'.format(path))
    return path
