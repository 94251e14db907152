"""Deterministic text output: CSV (LF, shortest round-trip floats), JSON, SVG."""
from __future__ import annotations

import csv
import io
import json
import math


def fmt(value) -> str:
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, float):
        return repr(value)
    if value is None:
        return ""
    return str(value)


def to_csv(header, rows) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(header)
    for row in rows:
        writer.writerow([fmt(v) for v in row])
    return buf.getvalue()


def _jsonable(obj):
    if isinstance(obj, complex):
        return {"re": obj.real, "im": obj.imag}
    if isinstance(obj, dict):
        return {k: _jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_jsonable(v) for v in obj]
    if isinstance(obj, float) and not math.isfinite(obj):
        return None
    return obj


def to_json(obj) -> str:
    return json.dumps(_jsonable(obj), indent=2) + "\n"


def svg_polylines(series, width: int = 800, height: int = 800, pad: float = 0.05) -> str:
    """One <polyline> per (name, points) pair; viewBox fitted to all points.

    The y axis is flipped so the picture matches the complex plane.
    """
    xs = [p[0] for _, pts in series for p in pts]
    ys = [-p[1] for _, pts in series for p in pts]
    x0, x1, y0, y1 = min(xs), max(xs), min(ys), max(ys)
    span = max(x1 - x0, y1 - y0) or 1.0
    x0 -= pad * span
    y0 -= pad * span
    span *= 1 + 2 * pad
    stroke = span / 1000
    colors = ["#1f77b4", "#d62728", "#2ca02c", "#9467bd"]
    out = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{height}" '
        f'viewBox="{fmt(x0)} {fmt(y0)} {fmt(span)} {fmt(span)}">',
    ]
    for i, (name, pts) in enumerate(series):
        coords = " ".join(f"{fmt(float(px))},{fmt(float(-py))}" for px, py in pts)
        out.append(f'<polyline id="{name}" fill="none" stroke="{colors[i % len(colors)]}" '
                   f'stroke-width="{fmt(stroke)}" points="{coords}"/>')
    out.append("</svg>")
    return "\n".join(out) + "\n"
