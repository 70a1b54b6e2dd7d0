import math


class Numerics:
    TOLERANCE = 1e-12
    MAX_ITERATIONS = 200
    UNIT_TOLERANCE = 1e-12
    # S(b,h) < W(b,ch) is possible for some c > 1 iff h < sqrt(3)/2
    HEIGHT_THRESHOLD = math.sqrt(3) / 2
    H0_BRACKET = (0.82, 0.83)


class OracleDefaults:
    RADIAL_STEPS = 400
    ANGULAR_STEPS = 400
    MARGIN = 1e-6
    RANDOM_SAMPLES = 10000
    SEED = 0
    WORKERS = 1


class RenderDefaults:
    CANVAS_PX = 600
    FRAME_HALF_WIDTH = 1.15
    DECIMALS = 6
    STROKE_WIDTH = 0.008
    FONT_SIZE = 0.07
    LABEL_OFFSET = 0.06


class ExitCodes:
    OK = 0
    REFUTED = 1
    USAGE = 2
    DISAGREEMENT = 3


class Output:
    SIGNIFICANT_DIGITS = 12
    FLOAT_FORMAT = '%.12g'
