"""Deterministic SVG rendering of evaluation results.

Two modes: "bands" draws one horizontal lane per alternative with the score
interval as a filled band (crisp scores as a single vertical line); "lines"
draws each score as a function of I over the configured range.
"""

from __future__ import annotations

from .engine import DecisionProblem, EvaluationConfig, EvaluationResult
from .problem_io import format_interval, format_number

LANE_HEIGHT = 44
MARGIN_LEFT = 70
MARGIN_RIGHT = 30
MARGIN_TOP = 30
MARGIN_BOTTOM = 40
AXIS_MARGIN_FRACTION = 0.05

BAND_FILL = "#7aa6d6"
CRISP_STROKE = "#1f4e79"
LINE_COLORS = ("#1f4e79", "#c05746", "#4a7c59", "#8a6d9c", "#b08b2e", "#527a8a")


def _fmt(x: float) -> str:
    return f"{x:.2f}"


def _axis_range(values: list[float]) -> tuple[float, float]:
    lo, hi = min(values), max(values)
    span = hi - lo
    margin = span * AXIS_MARGIN_FRACTION if span > 0 else max(abs(hi), 1.0) * AXIS_MARGIN_FRACTION
    return lo - margin, hi + margin


def render_plot(
    problem: DecisionProblem,
    result: EvaluationResult,
    cfg: EvaluationConfig,
    mode: str = "bands",
    width: int = 720,
) -> str:
    if mode == "bands":
        return _render_bands(problem, result, width)
    if mode == "lines":
        return _render_lines(problem, result, cfg, width)
    raise ValueError(f"unknown plot mode {mode!r}")


def _svg_open(width: int, height: int) -> list[str]:
    return [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{height}" '
        f'viewBox="0 0 {width} {height}" font-family="sans-serif" font-size="12">',
        f'<rect x="0" y="0" width="{width}" height="{height}" fill="white"/>',
    ]


def _render_bands(problem: DecisionProblem, result: EvaluationResult, width: int) -> str:
    m = problem.n_alternatives
    height = MARGIN_TOP + m * LANE_HEIGHT + MARGIN_BOTTOM
    axis_lo, axis_hi = _axis_range(
        [iv.lo for iv in result.intervals] + [iv.hi for iv in result.intervals]
    )
    plot_w = width - MARGIN_LEFT - MARGIN_RIGHT

    def x_of(score: float) -> float:
        return MARGIN_LEFT + (score - axis_lo) / (axis_hi - axis_lo) * plot_w

    parts = _svg_open(width, height)
    axis_y = MARGIN_TOP + m * LANE_HEIGHT + 10
    parts.append(
        f'<line class="axis" x1="{MARGIN_LEFT}" y1="{axis_y}" x2="{width - MARGIN_RIGHT}" '
        f'y2="{axis_y}" stroke="#333" stroke-width="1"/>'
    )
    for t in range(6):
        score = axis_lo + (axis_hi - axis_lo) * t / 5
        x = x_of(score)
        parts.append(
            f'<line class="tick" x1="{_fmt(x)}" y1="{axis_y}" x2="{_fmt(x)}" y2="{axis_y + 5}" '
            f'stroke="#333" stroke-width="1"/>'
        )
        parts.append(
            f'<text class="tick-label" x="{_fmt(x)}" y="{axis_y + 18}" text-anchor="middle">'
            f"{score:.4g}</text>"
        )

    for lane, j in enumerate(range(m)):
        iv = result.intervals[j]
        alt = problem.alternatives[j]
        y0 = MARGIN_TOP + lane * LANE_HEIGHT + 6
        y1 = y0 + LANE_HEIGHT - 16
        selected = j == result.selected_index
        label_weight = ' font-weight="bold"' if selected else ""
        parts.append(
            f'<text class="label" x="{MARGIN_LEFT - 8}" y="{_fmt((y0 + y1) / 2 + 4)}" '
            f'text-anchor="end"{label_weight}>{alt.id}</text>'
        )
        if iv.is_point:
            x = x_of(iv.lo)
            parts.append(
                f'<line class="crisp" x1="{_fmt(x)}" y1="{_fmt(y0)}" x2="{_fmt(x)}" '
                f'y2="{_fmt(y1)}" stroke="{CRISP_STROKE}" stroke-width="3"/>'
            )
            caption = format_number(iv.lo)
        else:
            x0, x1 = x_of(iv.lo), x_of(iv.hi)
            parts.append(
                f'<rect class="band" x="{_fmt(x0)}" y="{_fmt(y0)}" width="{_fmt(x1 - x0)}" '
                f'height="{_fmt(y1 - y0)}" fill="{BAND_FILL}" fill-opacity="0.7"/>'
            )
            caption = format_interval(iv.lo, iv.hi)
        parts.append(
            f'<text class="value" x="{_fmt(x_of(iv.hi) + 6)}" y="{_fmt((y0 + y1) / 2 + 4)}">'
            f"{caption}</text>"
        )
    parts.append("</svg>")
    return "\n".join(parts) + "\n"


def _render_lines(
    problem: DecisionProblem, result: EvaluationResult, cfg: EvaluationConfig, width: int
) -> str:
    height = 360
    plot_w = width - MARGIN_LEFT - MARGIN_RIGHT
    plot_h = height - MARGIN_TOP - MARGIN_BOTTOM
    endpoint_values = [s.evaluate(cfg.i_min) for s in result.neutro_scores] + [
        s.evaluate(cfg.i_max) for s in result.neutro_scores
    ]
    y_lo, y_hi = _axis_range(endpoint_values)
    i_span = cfg.i_max - cfg.i_min

    def x_of(i_value: float) -> float:
        frac = (i_value - cfg.i_min) / i_span if i_span > 0 else 0.5
        return MARGIN_LEFT + frac * plot_w

    def y_of(score: float) -> float:
        return MARGIN_TOP + (y_hi - score) / (y_hi - y_lo) * plot_h

    parts = _svg_open(width, height)
    parts.append(
        f'<line class="axis" x1="{MARGIN_LEFT}" y1="{MARGIN_TOP + plot_h}" '
        f'x2="{width - MARGIN_RIGHT}" y2="{MARGIN_TOP + plot_h}" stroke="#333" stroke-width="1"/>'
    )
    parts.append(
        f'<line class="axis" x1="{MARGIN_LEFT}" y1="{MARGIN_TOP}" x2="{MARGIN_LEFT}" '
        f'y2="{MARGIN_TOP + plot_h}" stroke="#333" stroke-width="1"/>'
    )
    for t in range(6):
        i_value = cfg.i_min + i_span * t / 5
        x = x_of(i_value)
        parts.append(
            f'<text class="tick-label" x="{_fmt(x)}" y="{MARGIN_TOP + plot_h + 18}" '
            f'text-anchor="middle">{i_value:.4g}</text>'
        )
    parts.append(
        f'<text class="axis-label" x="{MARGIN_LEFT + plot_w / 2:.2f}" y="{height - 6}" '
        f'text-anchor="middle">I</text>'
    )
    for j, score in enumerate(result.neutro_scores):
        color = LINE_COLORS[j % len(LINE_COLORS)]
        x0, y0 = x_of(cfg.i_min), y_of(score.evaluate(cfg.i_min))
        x1, y1 = x_of(cfg.i_max), y_of(score.evaluate(cfg.i_max))
        parts.append(
            f'<line class="score-line" x1="{_fmt(x0)}" y1="{_fmt(y0)}" x2="{_fmt(x1)}" '
            f'y2="{_fmt(y1)}" stroke="{color}" stroke-width="2"/>'
        )
        parts.append(
            f'<text class="label" x="{_fmt(x1 + 6)}" y="{_fmt(y1 + 4)}" fill="{color}">'
            f"{problem.alternatives[j].id}</text>"
        )
    parts.append("</svg>")
    return "\n".join(parts) + "\n"
