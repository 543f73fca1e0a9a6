"""Color space conversions and color-difference metrics.

8-bit sRGB -> linear RGB -> XYZ -> CIELAB under the D65 white point
(2 degree observer), plus the CIE76 and CIEDE2000 difference formulas.
All functions are pure and operate in double precision.
"""
from __future__ import annotations

import math
from typing import Iterable, NamedTuple, Sequence, Tuple


class Rgb(NamedTuple):
    r: int
    g: int
    b: int


class Lab(NamedTuple):
    L: float
    a: float
    b: float


METRICS = ("cie76", "ciede2000")

# D65 reference white, 2 degree observer, normalized to Y=1
_WHITE_X = 0.95047
_WHITE_Y = 1.0
_WHITE_Z = 1.08883

# junction constants for the Lab f() function
_EPS = 216.0 / 24389.0
_KAPPA = 24389.0 / 27.0

_POW25_7 = 25.0 ** 7


def validate_rgb(c: Sequence[int]) -> Rgb:
    """Check that c is a 3-channel color with each channel in [0, 255]."""
    if len(c) != 3:
        raise ValueError(f"expected 3 channels, got {len(c)}")
    r, g, b = c
    for name, v in zip("rgb", (r, g, b)):
        if not float(v).is_integer():
            raise ValueError(f"channel {name} must be an integer, got {v!r}")
        if not 0 <= v <= 255:
            raise ValueError(f"channel {name} out of range [0, 255]: {v}")
    return Rgb(int(r), int(g), int(b))


def _srgb_to_linear(u: float) -> float:
    # standard piecewise companding curve
    if u <= 0.04045:
        return u / 12.92
    return ((u + 0.055) / 1.055) ** 2.4


def _f(t: float) -> float:
    if t > _EPS:
        return t ** (1.0 / 3.0)
    return (_KAPPA * t + 16.0) / 116.0


def rgb_to_lab(c: Sequence[int]) -> Lab:
    """Convert an 8-bit sRGB color to CIELAB (D65/2deg)."""
    r, g, b = (ch / 255.0 for ch in validate_rgb(c))
    rl = _srgb_to_linear(r)
    gl = _srgb_to_linear(g)
    bl = _srgb_to_linear(b)

    x = 0.4124564 * rl + 0.3575761 * gl + 0.1804375 * bl
    y = 0.2126729 * rl + 0.7151522 * gl + 0.0721750 * bl
    z = 0.0193339 * rl + 0.1191920 * gl + 0.9503041 * bl

    fx = _f(x / _WHITE_X)
    fy = _f(y / _WHITE_Y)
    fz = _f(z / _WHITE_Z)

    return Lab(116.0 * fy - 16.0, 500.0 * (fx - fy), 200.0 * (fy - fz))


def delta_e_76(x: Lab, y: Lab) -> float:
    """Euclidean distance in Lab space."""
    return math.sqrt(
        (x[0] - y[0]) ** 2 + (x[1] - y[1]) ** 2 + (x[2] - y[2]) ** 2
    )


def delta_e_2000(x: Lab, y: Lab) -> float:
    """CIEDE2000 color difference with kL = kC = kH = 1.

    Full formula: a' chroma correction, SL/SC/SH weighting and the RT
    hue rotation term, with hue angles handled in degrees.
    """
    L1, a1, b1 = x
    L2, a2, b2 = y

    c1 = math.hypot(a1, b1)
    c2 = math.hypot(a2, b2)
    c_mean = 0.5 * (c1 + c2)

    c7 = c_mean ** 7
    g = 0.5 * (1.0 - math.sqrt(c7 / (c7 + _POW25_7)))

    a1p = (1.0 + g) * a1
    a2p = (1.0 + g) * a2
    c1p = math.hypot(a1p, b1)
    c2p = math.hypot(a2p, b2)

    h1p = _hue_deg(a1p, b1)
    h2p = _hue_deg(a2p, b2)

    dl = L2 - L1
    dc = c2p - c1p

    if c1p * c2p == 0.0:
        dh_deg = 0.0
    else:
        dh_deg = h2p - h1p
        if dh_deg > 180.0:
            dh_deg -= 360.0
        elif dh_deg < -180.0:
            dh_deg += 360.0
    dh = 2.0 * math.sqrt(c1p * c2p) * math.sin(math.radians(dh_deg) / 2.0)

    l_mean = 0.5 * (L1 + L2)
    cp_mean = 0.5 * (c1p + c2p)

    h_sum = h1p + h2p
    if c1p * c2p == 0.0:
        hp_mean = h_sum
    elif abs(h1p - h2p) <= 180.0:
        hp_mean = 0.5 * h_sum
    elif h_sum < 360.0:
        hp_mean = 0.5 * (h_sum + 360.0)
    else:
        hp_mean = 0.5 * (h_sum - 360.0)

    t = (
        1.0
        - 0.17 * math.cos(math.radians(hp_mean - 30.0))
        + 0.24 * math.cos(math.radians(2.0 * hp_mean))
        + 0.32 * math.cos(math.radians(3.0 * hp_mean + 6.0))
        - 0.20 * math.cos(math.radians(4.0 * hp_mean - 63.0))
    )

    d_theta = 30.0 * math.exp(-(((hp_mean - 275.0) / 25.0) ** 2))
    cp7 = cp_mean ** 7
    rc = 2.0 * math.sqrt(cp7 / (cp7 + _POW25_7))
    rt = -math.sin(math.radians(2.0 * d_theta)) * rc

    l50 = (l_mean - 50.0) ** 2
    sl = 1.0 + 0.015 * l50 / math.sqrt(20.0 + l50)
    sc = 1.0 + 0.045 * cp_mean
    sh = 1.0 + 0.015 * cp_mean * t

    return math.sqrt(
        (dl / sl) ** 2
        + (dc / sc) ** 2
        + (dh / sh) ** 2
        + rt * (dc / sc) * (dh / sh)
    )


def _hue_deg(ap: float, b: float) -> float:
    if ap == 0.0 and b == 0.0:
        return 0.0
    h = math.degrees(math.atan2(b, ap))
    return h + 360.0 if h < 0.0 else h


def delta_e(x: Lab, y: Lab, metric: str = "ciede2000") -> float:
    """Dispatch to the selected difference formula."""
    if metric == "ciede2000":
        return delta_e_2000(x, y)
    if metric == "cie76":
        return delta_e_76(x, y)
    raise ValueError(f"unknown metric {metric!r}; expected one of {METRICS}")


def mean_delta_e(
    pairs: Iterable[Tuple[Sequence[int], Sequence[int]]],
    metric: str = "ciede2000",
) -> float:
    """Mean color difference over (rgb, rgb) pairs, converted to Lab."""
    values = [
        delta_e(rgb_to_lab(a), rgb_to_lab(b), metric) for a, b in pairs
    ]
    if not values:
        raise ValueError("no pairs")
    return sum(values) / len(values)


def rgb_to_hex(c: Sequence[int]) -> str:
    r, g, b = c
    return f"#{r:02X}{g:02X}{b:02X}"


def hex_to_rgb(s: str) -> Rgb:
    t = s.strip().lstrip("#")
    if len(t) != 6:
        raise ValueError(f"expected a #RRGGBB hex color, got {s!r}")
    return Rgb(int(t[0:2], 16), int(t[2:4], 16), int(t[4:6], 16))
