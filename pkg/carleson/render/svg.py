import xml.etree.ElementTree as ET

from carleson.geometry.points import PlanePoint
from carleson.utils.constants import RenderDefaults

SVG_NAMESPACE = 'http://www.w3.org/2000/svg'
XML_DECLARATION = '<?xml version="1.0" encoding="UTF-8"?>\n'


def fmt(value, decimals=RenderDefaults.DECIMALS):
    """Fixed-point coordinate text; negative zero is written as zero."""
    text = '{:.{}f}'.format(value, decimals)
    if float(text) == 0.0:
        text = text.lstrip('-')
    return text


class SvgCanvas:
    """
    Collects SVG primitives in mathematical coordinates. The viewBox is the square
    [-half_width, half_width]^2 of the plane and the y-axis is flipped on output, so
    callers pass points exactly as the geometry computes them.
    """

    def __init__(self, canvas_px=RenderDefaults.CANVAS_PX,
                 half_width=RenderDefaults.FRAME_HALF_WIDTH, title=None):
        self.canvas_px = canvas_px
        self.half_width = half_width
        side = 2.0 * half_width
        self.root = ET.Element('svg', {
            'xmlns': SVG_NAMESPACE,
            'version': '1.1',
            'width': str(canvas_px),
            'height': str(canvas_px),
            'viewBox': ' '.join(fmt(v) for v in (-half_width, -half_width, side, side)),
        })
        if title is not None:
            ET.SubElement(self.root, 'title').text = title
        self.group = ET.SubElement(self.root, 'g', {
            'fill': 'none',
            'stroke': 'black',
            'stroke-width': fmt(RenderDefaults.STROKE_WIDTH),
        })

    @property
    def scale(self):
        """Pixels per unit of the mathematical frame."""
        return self.canvas_px / (2.0 * self.half_width)

    @staticmethod
    def _xy(point: PlanePoint):
        return fmt(point.x), fmt(-point.y)

    def circle(self, centre: PlanePoint, radius, css_class):
        cx, cy = self._xy(centre)
        return ET.SubElement(self.group, 'circle', {
            'class': css_class, 'cx': cx, 'cy': cy, 'r': fmt(radius)})

    def line(self, start: PlanePoint, end: PlanePoint, css_class):
        x1, y1 = self._xy(start)
        x2, y2 = self._xy(end)
        return ET.SubElement(self.group, 'line', {
            'class': css_class, 'x1': x1, 'y1': y1, 'x2': x2, 'y2': y2})

    def label(self, anchor: PlanePoint, text, offset=RenderDefaults.LABEL_OFFSET):
        """Writes text next to anchor, pushed away from the origin by offset."""
        modulus = anchor.modulus
        if modulus > 0.0:
            position = anchor.scaled(1.0 + offset / modulus)
        else:
            position = PlanePoint(offset / 2.0, -offset)
        x, y = self._xy(position)
        element = ET.SubElement(self.root, 'text', {
            'x': x, 'y': y,
            'font-size': fmt(RenderDefaults.FONT_SIZE),
            'text-anchor': 'middle',
            'dominant-baseline': 'middle',
        })
        element.text = text
        return element

    def to_string(self):
        ET.indent(self.root)
        return XML_DECLARATION + ET.tostring(self.root, encoding='unicode') + '\n'
