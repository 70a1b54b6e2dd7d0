import json
import math
import numbers

from carleson.utils.constants import Output


def format_float(value):
    """12 significant digits; infinities as inf and -inf."""
    if math.isinf(value):
        return 'inf' if value > 0 else '-inf'
    return '{:.{}g}'.format(value, Output.SIGNIFICANT_DIGITS)


def format_value(value):
    if value is None:
        return 'none'
    if isinstance(value, bool):
        return 'true' if value else 'false'
    if isinstance(value, float):
        return format_float(value)
    return str(value)


def json_value(value):
    if isinstance(value, numbers.Integral) and not isinstance(value, bool):
        return int(value)
    if isinstance(value, float):
        if math.isnan(value):
            return None
        if math.isinf(value):
            return format_float(value)
        return float(format_float(value))
    return value


class OutputRecord:
    """
    The flat key-value result of one command. Keys keep their insertion order; the command
    name always comes first.
    """

    def __init__(self, command):
        self.values = {'command': command}

    def add(self, key, value):
        if isinstance(value, float):
            # plain floats also for numpy scalars
            value = float(value)
        self.values[key] = value
        return self

    def update(self, **values):
        for key, value in values.items():
            self.add(key, value)
        return self

    def add_point(self, prefix, point):
        if point is None:
            return self.update(**{prefix + '_x': None, prefix + '_y': None})
        return self.update(**{prefix + '_x': point.x, prefix + '_y': point.y})

    def __getitem__(self, key):
        return self.values[key]

    def __contains__(self, key):
        return key in self.values

    def as_text(self):
        return '\n'.join('{}={}'.format(key, format_value(value))
                         for key, value in self.values.items())

    def as_json(self):
        return json.dumps({key: json_value(value) for key, value in self.values.items()})

    def render(self, as_json=False):
        return self.as_json() if as_json else self.as_text()
