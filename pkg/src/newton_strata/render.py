"""Deterministic SVG pictures of the polygons involved in a decision.

Coordinates are computed exactly and printed as fixed-point decimals, so
identical inputs give byte-identical files.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Optional

from .bg import NewtonClass
from .polygon import Polygon, add, breakpoints, dual, ordinary_cochar, partial_sums, shift
from .strata import MinusculeShape

SCALE = 40
MARGIN = 40

# role -> stroke colour
PALETTE = {
    "nu_b": "#d62728",
    "nu_b_plus_dual_mu": "#1f77b4",
    "nu_bt": "#2ca02c",
    "nu_bt_plus_one": "#17becf",
}
LABELS = {
    "nu_b": "nu_b",
    "nu_b_plus_dual_mu": "nu_b + mu*",
    "nu_bt": "nu_bt",
    "nu_bt_plus_one": "nu_bt + 1",
}

HEADER = '<?xml version="1.0" encoding="UTF-8"?>\n'


def _fmt(v: Fraction) -> str:
    q = round(v * 1000)
    sign = "-" if q < 0 else ""
    q = abs(q)
    whole, frac = divmod(q, 1000)
    return f"{sign}{whole}" if frac == 0 else f"{sign}{whole}.{frac:03d}".rstrip("0")


def _vertices(p: Polygon) -> list[tuple[int, Fraction]]:
    return [(0, Fraction(0))] + list(enumerate(partial_sums(p), start=1))


def render_svg(b: NewtonClass, bt: Optional[NewtonClass] = None, mu: Optional[MinusculeShape] = None) -> str:
    """Picture of ``nu_b`` and, when given, the other three polygons of the criterion.

    With ``bt`` the instance is first normalized to d = 0 (``bt`` shifted
    by ``d * 1``), so the picture always shows the ordinary-shape bounds.
    """
    length = len(b.nu)
    layers: list[tuple[str, Polygon]] = [("nu_b", b.nu)]
    if bt is not None:
        d = mu.d if mu is not None else 0
        nu_bt = shift(bt.nu, d)
        star = dual(ordinary_cochar(length // 2))
        layers = [
            ("nu_bt_plus_one", shift(nu_bt, 1)),
            ("nu_b", b.nu),
            ("nu_b_plus_dual_mu", add(b.nu, star)),
            ("nu_bt", nu_bt),
        ]
    ys = [y for _, p in layers for _, y in _vertices(p)]
    y_min, y_max = min(min(ys), 0), max(max(ys), 0)
    y_lo = Fraction(y_min.numerator // y_min.denominator)
    y_hi = -Fraction((-y_max.numerator) // y_max.denominator)
    width = 2 * MARGIN + SCALE * length
    height = 2 * MARGIN + SCALE * int(y_hi - y_lo) + 20 * len(layers)

    def px(x) -> str:
        return _fmt(Fraction(MARGIN + SCALE * x))

    def py(y) -> str:
        return _fmt(MARGIN + SCALE * (y_hi - y))

    out = [HEADER]
    out.append(
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{height}" '
        f'viewBox="0 0 {width} {height}">\n'
    )
    out.append(f'<rect x="0" y="0" width="{width}" height="{height}" fill="#ffffff"/>\n')
    out.append('<g stroke="#e0e0e0" stroke-width="1">\n')
    for x in range(length + 1):
        out.append(f'<line x1="{px(x)}" y1="{py(y_hi)}" x2="{px(x)}" y2="{py(y_lo)}"/>\n')
    for y in range(int(y_lo), int(y_hi) + 1):
        out.append(f'<line x1="{px(0)}" y1="{py(y)}" x2="{px(length)}" y2="{py(y)}"/>\n')
    out.append("</g>\n")
    out.append('<g stroke="#555555" stroke-width="1" stroke-dasharray="2,3">\n')
    for x, _ in breakpoints(b.nu):
        out.append(f'<line x1="{px(x)}" y1="{py(y_hi)}" x2="{px(x)}" y2="{py(y_lo)}"/>\n')
    out.append("</g>\n")
    for role, p in layers:
        color = PALETTE[role]
        pts = " ".join(f"{px(x)},{py(y)}" for x, y in _vertices(p))
        out.append(
            f'<polyline class="{role}" points="{pts}" fill="none" stroke="{color}" stroke-width="2"/>\n'
        )
        corners = [(0, Fraction(0))] + [(x, y) for x, y in breakpoints(p)] + [(length, p.total)]
        for x, y in corners:
            out.append(f'<circle cx="{px(x)}" cy="{py(y)}" r="3" fill="{color}"/>\n')
    legend_y = MARGIN + SCALE * int(y_hi - y_lo) + 20
    for i, (role, _) in enumerate(layers):
        out.append(
            f'<text x="{MARGIN}" y="{legend_y + 20 * i}" font-family="monospace" '
            f'font-size="12" fill="{PALETTE[role]}">{LABELS[role]}</text>\n'
        )
    out.append("</svg>\n")
    return "".join(out)
