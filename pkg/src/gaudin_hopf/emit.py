"""Deterministic serialization of analysis records and momentum-map figures.

Numbers are written with 17 significant digits and JSON keys are sorted, so
identical inputs give byte-identical JSON and CSV files.  SVG output differs
between package versions only in its version comment.
"""
from __future__ import annotations

import csv
import io
import json
import math
from enum import Enum
from fractions import Fraction
from pathlib import Path

import numpy as np

from .momentum import FigureData, PointType, segment_labels

FORMATS = ("svg", "csv", "json")
SVG_SIZE = 640
SVG_MARGIN = 56
CLASS_COLORS = {
    "elliptic-elliptic": "#1f77b4",
    "focus-focus": "#d62728",
    "elliptic-hyperbolic": "#2ca02c",
    "hyperbolic-hyperbolic": "#9467bd",
    "degenerate": "#ff7f0e",
}


def fmt(x) -> str:
    """A real number with 17 significant digits; non-finite values become ``null``."""
    x = float(x)
    if not math.isfinite(x):
        return "null"
    if x == 0:
        return "0"
    return format(x, ".17g")


def _plain(obj):
    if isinstance(obj, Enum):
        return obj.value
    if isinstance(obj, Fraction):
        return float(obj)
    if isinstance(obj, np.ndarray):
        return obj.tolist()
    if isinstance(obj, (np.floating, np.integer, np.bool_)):
        return obj.item()
    if hasattr(obj, "to_dict"):
        return obj.to_dict()
    return obj


def dumps(obj, indent: int = 2, _level: int = 0) -> str:
    """JSON text with sorted keys and 17-significant-digit floats."""
    obj = _plain(obj)
    pad, inner = " " * (indent * _level), " " * (indent * (_level + 1))
    if obj is None or isinstance(obj, bool):
        return json.dumps(obj)
    if isinstance(obj, int):
        return str(obj)
    if isinstance(obj, float):
        return fmt(obj)
    if isinstance(obj, str):
        return json.dumps(obj)
    if isinstance(obj, dict):
        if not obj:
            return "{}"
        items = [f"{inner}{json.dumps(str(k))}: {dumps(obj[k], indent, _level + 1)}" for k in sorted(obj, key=str)]
        return "{\n" + ",\n".join(items) + "\n" + pad + "}"
    if isinstance(obj, (list, tuple)):
        if not obj:
            return "[]"
        if all(isinstance(_plain(v), (int, float)) and not isinstance(v, bool) for v in obj):
            return "[" + ", ".join(dumps(v) for v in obj) + "]"
        return "[\n" + ",\n".join(inner + dumps(v, indent, _level + 1) for v in obj) + "\n" + pad + "]"
    raise TypeError(f"cannot serialize {type(obj).__name__}")


def figure_record(fig: FigureData) -> dict:
    """Plain dictionary of the curves, markers and events of a figure."""
    labels = iter(segment_labels(fig))
    curves = []
    for c in fig.curves:
        d = c.to_dict()
        if c.type is PointType.HyperbolicRegular:
            d["label"] = next(labels)
        curves.append(d)
    rec = {
        "params": fig.params.to_dict(),
        "t4": float(fig.t4),
        "curves": curves,
        "cusps": [m.to_dict() for m in fig.cusps],
        "rank0": [m.to_dict() for m in fig.rank0],
        "events": [e.to_dict() for e in fig.events],
        "counts": {
            "hyperbolic_regular": fig.count(PointType.HyperbolicRegular),
            "elliptic_regular": fig.count(PointType.EllipticRegular),
            "cusps": len(fig.cusps),
        },
    }
    if fig.occupancy is not None:
        occ = fig.occupancy
        rec["occupancy"] = {
            "shape": list(occ.shape),
            "J_range": [float(v) for v in occ.J_range],
            "H_range": [float(v) for v in occ.H_range],
            "occupied_cells": int(occ.bitmap.sum()),
            "double_cells": int((occ.multiplicity >= 2).sum()),
        }
    return rec


def figure_csv(fig: FigureData) -> str:
    """One row per polyline vertex and per marker."""
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["record", "id", "type", "branch", "index", "J", "H"])
    for i, c in enumerate(fig.curves):
        for k, (J, H) in enumerate(c.points):
            w.writerow(["curve", i, c.type.value, c.branch, k, fmt(J), fmt(H)])
    for i, m in enumerate(fig.cusps):
        w.writerow(["cusp", i, m.kind, "", "", fmt(m.J), fmt(m.H)])
    for m in fig.rank0:
        w.writerow(["rank0", m.label, m.kind, "", "", fmt(m.J), fmt(m.H)])
    return buf.getvalue()


def _frame(fig: FigureData):
    """Data ranges of the plot and the affine map to SVG coordinates."""
    if fig.occupancy is not None:
        (J0, J1), (H0, H1) = fig.occupancy.J_range, fig.occupancy.H_range
    else:
        p = fig.params.as_float()
        J0, J1 = -(p.R1 + p.R2), p.R1 + p.R2
        pts = [c.points for c in fig.curves] + [np.array([[m.J, m.H] for m in fig.rank0])]
        Hs = np.concatenate([q[:, 1] for q in pts if len(q)])
        pad = 0.05 * max(float(np.ptp(Hs)), 1e-6)
        H0, H1 = float(Hs.min()) - pad, float(Hs.max()) + pad
    inner = SVG_SIZE - 2 * SVG_MARGIN

    def to_svg(J, H):
        x = SVG_MARGIN + (np.asarray(J) - J0) / (J1 - J0) * inner
        y = SVG_MARGIN + (H1 - np.asarray(H)) / (H1 - H0) * inner
        return x, y

    return (J0, J1, H0, H1), to_svg


def _star(x, y, r=5.0) -> str:
    pts = []
    for k in range(10):
        rad = r if k % 2 == 0 else 0.45 * r
        a = math.pi / 2 + k * math.pi / 5
        pts.append(f"{x + rad * math.cos(a):.3f},{y - rad * math.sin(a):.3f}")
    return "M" + " L".join(pts) + " Z"


def _ticks(lo, hi, n=5):
    step = 10 ** math.floor(math.log10((hi - lo) / n))
    for m in (1, 2, 5, 10):
        if (hi - lo) / (m * step) <= n:
            step *= m
            break
    start = math.ceil(lo / step) * step
    return [start + k * step for k in range(int((hi - start) / step) + 1)]


def figure_svg(fig: FigureData, version: str = "") -> str:
    """SVG drawing: occupancy as filled cells, elliptic curves solid, hyperbolic dashed,
    cusps as stars and rank-0 values as dots coloured by their linear class."""
    (J0, J1, H0, H1), to_svg = _frame(fig)
    inner = SVG_SIZE - 2 * SVG_MARGIN
    out = [f'<svg xmlns="http://www.w3.org/2000/svg" width="{SVG_SIZE}" height="{SVG_SIZE}" '
           f'viewBox="0 0 {SVG_SIZE} {SVG_SIZE}">',
           f"<!-- gaudin-hopf {version} -->",
           '<rect width="100%" height="100%" fill="white"/>']
    if fig.occupancy is not None:
        occ = fig.occupancy
        nH, nJ = occ.shape
        cw, ch = inner / nJ, inner / nH
        for level, color in ((1, "#d9d9d9"), (2, "#a6a6a6")):
            mask = occ.bitmap if level == 1 else occ.multiplicity >= 2
            parts = []
            for r in range(nH):
                row = mask[r]
                if not row.any():
                    continue
                d = np.diff(np.concatenate([[0], row.view(np.int8), [0]]))
                y = SVG_MARGIN + (nH - 1 - r) * ch
                for a, b in zip(np.flatnonzero(d == 1), np.flatnonzero(d == -1)):
                    parts.append(f"M{SVG_MARGIN + a * cw:.3f},{y:.3f}h{(b - a) * cw:.3f}v{ch:.3f}h{-(b - a) * cw:.3f}z")
            if parts:
                out.append(f'<path fill="{color}" stroke="none" d="{"".join(parts)}"/>')
    for c in fig.curves:
        x, y = to_svg(c.points[:, 0], c.points[:, 1])
        pts = " ".join(f"{a:.3f},{b:.3f}" for a, b in zip(x, y))
        dash = ' stroke-dasharray="6 4"' if c.type is PointType.HyperbolicRegular else ""
        out.append(f'<polyline fill="none" stroke="black" stroke-width="1.4"{dash} points="{pts}"/>')
    for m in fig.cusps:
        x, y = to_svg(m.J, m.H)
        out.append(f'<path fill="black" d="{_star(float(x), float(y))}"/>')
    for m in fig.rank0:
        x, y = to_svg(m.J, m.H)
        color = CLASS_COLORS.get(m.kind, "black")
        out.append(f'<circle cx="{float(x):.3f}" cy="{float(y):.3f}" r="4" fill="{color}"><title>{m.label} {m.kind}</title></circle>')
    # axes
    lo, hi = SVG_MARGIN, SVG_MARGIN + inner
    out.append(f'<rect x="{lo}" y="{lo}" width="{inner}" height="{inner}" fill="none" stroke="black"/>')
    for t in _ticks(J0, J1):
        x, _ = to_svg(t, H0)
        out.append(f'<line x1="{float(x):.3f}" y1="{hi}" x2="{float(x):.3f}" y2="{hi + 5}" stroke="black"/>')
        out.append(f'<text x="{float(x):.3f}" y="{hi + 18}" font-size="11" text-anchor="middle">{t:g}</text>')
    for t in _ticks(H0, H1):
        _, y = to_svg(J0, t)
        out.append(f'<line x1="{lo - 5}" y1="{float(y):.3f}" x2="{lo}" y2="{float(y):.3f}" stroke="black"/>')
        out.append(f'<text x="{lo - 8}" y="{float(y) + 4:.3f}" font-size="11" text-anchor="end">{t:g}</text>')
    out.append(f'<text x="{SVG_SIZE / 2}" y="{SVG_SIZE - 12}" font-size="13" text-anchor="middle">J</text>')
    out.append(f'<text x="16" y="{SVG_SIZE / 2}" font-size="13" text-anchor="middle">H</text>')
    out.append(f'<text x="{SVG_SIZE / 2}" y="30" font-size="13" text-anchor="middle">t4 = {fig.t4:.6g}</text>')
    out.append("</svg>")
    return "\n".join(out) + "\n"


def render(fig: FigureData, fmt_name: str) -> str:
    from . import __version__
    if fmt_name == "svg":
        return figure_svg(fig, __version__)
    if fmt_name == "csv":
        return figure_csv(fig)
    if fmt_name == "json":
        return dumps(figure_record(fig)) + "\n"
    raise ValueError(f"unknown format {fmt_name!r}; expected one of {FORMATS}")


def emit_figure(fig: FigureData, fmt_name: str, path) -> Path:
    """Write ``fig`` as SVG, CSV or JSON to ``path`` and return the path."""
    text = render(fig, fmt_name)
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write(text)
    return path


__all__ = ["FORMATS", "fmt", "dumps", "figure_record", "figure_csv", "figure_svg", "render", "emit_figure"]
