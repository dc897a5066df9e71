"""Figure-data export: per-series observed/estimated CSVs, the first-integral
and TFP series, the capital scatter with its regression line, and optional
SVG renderings of the same data."""

from __future__ import annotations

from pathlib import Path

import numpy as np

from .dataset import SeriesTable
from .growth import estimate_series
from .regression import observed_vs_estimated_fit
from .report import PipelineReport


def export_report(
    report: PipelineReport,
    table: SeriesTable,
    out_dir: str | Path,
    svg: bool = False,
) -> list[Path]:
    """Write the figure-data files for one pipeline run.

    CSV files (header row first; floats in shortest round-trip form):

    - ``labor_fit.csv`` / ``capital_fit.csv`` / ``production_fit.csv``:
      ``year,observed,estimated`` log-scale series per fitted column.
    - ``capital_levels.csv``: the same capital comparison on the index-level
      scale, for observed-and-estimated-versus-time plots.
    - ``h3_series.csv``: ``year,h3,tfp`` with the per-year first integral and
      the per-year TFP exp(H3 / (a-b)).
    - ``capital_scatter.csv``: ``estimated,observed`` scatter (log scale),
      preceded by ``#`` metadata lines carrying the regression of observed on
      estimated (slope, intercept, R^2, adjusted R^2).

    With ``svg=True`` a simple line/scatter chart is rendered next to each
    CSV.  Returns the list of written paths.
    """
    out = Path(out_dir)
    out.mkdir(parents=True, exist_ok=True)
    fitted = estimate_series(report.growth.params, table, origin=report.time_origin)
    years = table.years
    written: list[Path] = []

    series = [
        ("labor_fit.csv", table.ln_labor, fitted.ln_labor, "labor (log)"),
        ("capital_fit.csv", table.ln_capital, fitted.ln_capital, "capital (log)"),
        ("production_fit.csv", table.ln_output, fitted.ln_output, "production (log)"),
        ("capital_levels.csv", np.exp(table.ln_capital), fitted.capital, "capital (level)"),
    ]
    for name, observed, estimated, label in series:
        path = out / name
        lines = ["year,observed,estimated"]
        lines += [
            f"{int(y)},{obs!r},{est!r}" for y, obs, est in zip(years, observed, estimated)
        ]
        path.write_text("\n".join(lines) + "\n")
        written.append(path)
        if svg:
            svg_path = path.with_suffix(".svg")
            svg_path.write_text(
                _line_chart(
                    label,
                    years.astype(float),
                    [("observed", observed, "circle"), ("estimated", estimated, "line")],
                )
            )
            written.append(svg_path)

    h3_path = out / "h3_series.csv"
    h3_tfp = np.exp(report.h3.values / report.solution.a_minus_b)
    lines = ["year,h3,tfp"]
    lines += [
        f"{year},{value!r},{float(a)!r}"
        for (year, value), a in zip(report.h3.per_year, h3_tfp)
    ]
    h3_path.write_text("\n".join(lines) + "\n")
    written.append(h3_path)
    if svg:
        svg_path = h3_path.with_suffix(".svg")
        svg_path.write_text(
            _line_chart(
                "per-year TFP",
                years.astype(float),
                [("tfp", h3_tfp, "line")],
            )
        )
        written.append(svg_path)

    scatter_path = out / "capital_scatter.csv"
    scatter_fit = observed_vs_estimated_fit(table.ln_capital, fitted.ln_capital)
    lines = [
        "# linear regression of observed on estimated capital (log scale)",
        f"# slope={scatter_fit.slope!r} intercept={scatter_fit.intercept!r}"
        f" r_squared={scatter_fit.r_squared!r} adjusted_r_squared={scatter_fit.adjusted_r_squared!r}",
        "estimated,observed",
    ]
    lines += [f"{est!r},{obs!r}" for est, obs in zip(fitted.ln_capital, table.ln_capital)]
    scatter_path.write_text("\n".join(lines) + "\n")
    written.append(scatter_path)
    if svg:
        svg_path = scatter_path.with_suffix(".svg")
        line_y = scatter_fit.predicted(fitted.ln_capital)
        svg_path.write_text(
            _line_chart(
                "observed vs estimated capital (log)",
                fitted.ln_capital,
                [("observed", table.ln_capital, "circle"), ("regression", line_y, "line")],
            )
        )
        written.append(svg_path)

    return written


_WIDTH, _HEIGHT, _MARGIN = 640, 400, 50
_COLORS = ("#1f6fb2", "#d1495b", "#3a7d44")


def _line_chart(title: str, xs: np.ndarray, layers: list[tuple[str, np.ndarray, str]]) -> str:
    """Minimal deterministic SVG chart: polylines and/or scatter circles."""
    all_y = np.concatenate([np.asarray(ys, dtype=float) for _, ys, _ in layers])
    x_lo, x_hi = float(np.min(xs)), float(np.max(xs))
    y_lo, y_hi = float(np.min(all_y)), float(np.max(all_y))
    x_span = (x_hi - x_lo) or 1.0
    y_span = (y_hi - y_lo) or 1.0

    def px(x: float) -> float:
        return _MARGIN + (x - x_lo) / x_span * (_WIDTH - 2 * _MARGIN)

    def py(y: float) -> float:
        return _HEIGHT - _MARGIN - (y - y_lo) / y_span * (_HEIGHT - 2 * _MARGIN)

    parts = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{_WIDTH}" height="{_HEIGHT}" '
        f'viewBox="0 0 {_WIDTH} {_HEIGHT}">',
        f'<rect width="{_WIDTH}" height="{_HEIGHT}" fill="white"/>',
        f'<text x="{_WIDTH / 2:.1f}" y="24" text-anchor="middle" '
        f'font-family="sans-serif" font-size="15">{title}</text>',
        f'<line x1="{_MARGIN}" y1="{_HEIGHT - _MARGIN}" x2="{_WIDTH - _MARGIN}" '
        f'y2="{_HEIGHT - _MARGIN}" stroke="black"/>',
        f'<line x1="{_MARGIN}" y1="{_MARGIN}" x2="{_MARGIN}" '
        f'y2="{_HEIGHT - _MARGIN}" stroke="black"/>',
    ]
    for idx, (label, ys, mode) in enumerate(layers):
        color = _COLORS[idx % len(_COLORS)]
        ys = np.asarray(ys, dtype=float)
        if mode == "line":
            points = " ".join(f"{px(x):.2f},{py(y):.2f}" for x, y in zip(xs, ys))
            parts.append(
                f'<polyline fill="none" stroke="{color}" stroke-width="1.5" points="{points}"/>'
            )
        else:
            parts.extend(
                f'<circle cx="{px(x):.2f}" cy="{py(y):.2f}" r="3" fill="{color}"/>'
                for x, y in zip(xs, ys)
            )
        parts.append(
            f'<text x="{_WIDTH - _MARGIN:.1f}" y="{_MARGIN + 16 * idx}" text-anchor="end" '
            f'font-family="sans-serif" font-size="12" fill="{color}">{label}</text>'
        )
    parts.append("</svg>")
    return "\n".join(parts) + "\n"
