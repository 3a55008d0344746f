"""Problem file format (JSON, version 1) and the rating-expression grammar.

Rating expressions are sums of terms, each a plain number or a multiple of
the indeterminacy symbol I: "7", "I", "2.5-0.5I", "1+1+I".  Numeric terms
accumulate into the determinate part, I-terms into the I coefficient.
"""

from __future__ import annotations

import json
import math
import re
from dataclasses import dataclass, field

from .engine import (
    Alternative,
    Criterion,
    DecisionProblem,
    EvaluationConfig,
    EvaluationResult,
    InvalidProblemError,
    RatingScheme,
    validate_problem,
)
from .values import NeutroValue

FORMAT_VERSION = 1

_KNOWN_TOP_LEVEL = {"version", "title", "scheme", "criteria", "alternatives", "ratings", "defaults"}

_NUMBER_RE = re.compile(r"(?:\d+(?:\.\d*)?|\.\d+)(?:[eE][+-]?\d+)?")


class RatingSyntaxError(ValueError):
    def __init__(self, message: str, position: int):
        self.position = position
        super().__init__(f"{message} (position {position})")


class ProblemFormatError(ValueError):
    def __init__(self, message: str, location: str = ""):
        self.location = location
        super().__init__(f"{message}{' at ' + location if location else ''}")


@dataclass(frozen=True)
class ProblemDocument:
    title: str
    problem: DecisionProblem
    defaults: EvaluationConfig | None = None
    version: int = FORMAT_VERSION
    warnings: tuple[str, ...] = field(default=(), compare=False)


def parse_rating(token: str) -> NeutroValue:
    """Parse a rating expression; raises RatingSyntaxError with the position."""
    text = token
    pos = 0

    def skip_ws() -> None:
        nonlocal pos
        while pos < len(text) and text[pos].isspace():
            pos += 1

    det = 0.0
    ind = 0.0
    skip_ws()
    if pos >= len(text):
        raise RatingSyntaxError("empty rating", pos)
    sign = 1.0
    if text[pos] in "+-":
        sign = -1.0 if text[pos] == "-" else 1.0
        pos += 1
        skip_ws()
    while True:
        coeff = None
        m = _NUMBER_RE.match(text, pos)
        if m:
            coeff = float(m.group())
            if not math.isfinite(coeff):
                raise RatingSyntaxError(f"number {m.group()!r} out of range", pos)
            pos = m.end()
            skip_ws()
        if pos < len(text) and text[pos] == "I":
            pos += 1
            ind += sign * (1.0 if coeff is None else coeff)
        elif coeff is not None:
            det += sign * coeff
        else:
            if pos < len(text):
                raise RatingSyntaxError(f"expected a number or 'I', found {text[pos]!r}", pos)
            raise RatingSyntaxError("expected a number or 'I'", pos)

        skip_ws()
        if pos >= len(text):
            if not (math.isfinite(det) and math.isfinite(ind)):
                raise RatingSyntaxError("expression overflows", len(text))
            return NeutroValue(det, ind)
        if text[pos] not in "+-":
            raise RatingSyntaxError(f"unexpected character {text[pos]!r}", pos)
        sign = -1.0 if text[pos] == "-" else 1.0
        pos += 1
        skip_ws()
        if pos >= len(text):
            raise RatingSyntaxError("trailing operator", pos)


def format_number(x: float) -> str:
    """Shortest exact decimal form, integers without a trailing '.0'."""
    if x == int(x) and abs(x) < 1e16:
        return str(int(x))
    return repr(float(x))


def format_rating(v: NeutroValue) -> str:
    """Canonical text form; parse_rating inverts it exactly."""
    if v.ind == 0:
        return format_number(v.det)
    if v.ind == 1:
        i_part = "I"
    elif v.ind == -1:
        i_part = "-I"
    else:
        i_part = f"{format_number(v.ind)}I"
    if v.det == 0:
        return i_part
    sign = "+" if not i_part.startswith("-") else ""
    return f"{format_number(v.det)}{sign}{i_part}"


def format_interval(lo: float, hi: float) -> str:
    return f"[{format_number(lo)},{format_number(hi)}]"


def document_from_dict(data: object) -> ProblemDocument:
    """Decode the version-1 problem dict; structural errors only.

    Unknown top-level fields are collected as warnings, not errors.
    """
    if not isinstance(data, dict):
        raise ProblemFormatError("problem document must be a JSON object")
    if data.get("version") != FORMAT_VERSION:
        raise ProblemFormatError(f"unsupported format version {data.get('version')!r}, expected {FORMAT_VERSION}", "version")
    warnings = tuple(f"unknown field {key!r} ignored" for key in data if key not in _KNOWN_TOP_LEVEL)

    title = data.get("title", "")
    if not isinstance(title, str):
        raise ProblemFormatError("title must be a string", "title")

    scheme_data = data.get("scheme")
    if not isinstance(scheme_data, dict) or "kind" not in scheme_data:
        raise ProblemFormatError("scheme must be an object with a 'kind'", "scheme")
    scheme = RatingScheme(
        kind=scheme_data["kind"],
        min=_opt_number(scheme_data.get("min"), "scheme.min"),
        max=_opt_number(scheme_data.get("max"), "scheme.max"),
    )

    criteria = []
    for idx, c in enumerate(_require_list(data, "criteria")):
        if not isinstance(c, dict) or "id" not in c:
            raise ProblemFormatError("criterion must be an object with an 'id'", f"criteria[{idx}]")
        criteria.append(Criterion(
            id=str(c["id"]),
            label=str(c.get("label", c["id"])),
            weight=_number(c.get("weight"), f"criteria[{idx}].weight"),
        ))

    alternatives = []
    for idx, a in enumerate(_require_list(data, "alternatives")):
        if not isinstance(a, dict) or "id" not in a:
            raise ProblemFormatError("alternative must be an object with an 'id'", f"alternatives[{idx}]")
        alternatives.append(Alternative(id=str(a["id"]), label=str(a.get("label", a["id"]))))

    rows = _require_list(data, "ratings")
    ratings = []
    for i, row in enumerate(rows):
        if not isinstance(row, list):
            raise ProblemFormatError("ratings row must be an array", f"ratings[{i}]")
        parsed_row = []
        for j, cell in enumerate(row):
            parsed_row.append(_decode_rating(cell, f"ratings[{i}][{j}]"))
        ratings.append(tuple(parsed_row))

    defaults = None
    if "defaults" in data:
        d = data["defaults"]
        if not isinstance(d, dict):
            raise ProblemFormatError("defaults must be an object", "defaults")
        try:
            defaults = EvaluationConfig(
                i_min=_number(d.get("iMin", 0.0), "defaults.iMin"),
                i_max=_number(d.get("iMax", 1.0), "defaults.iMax"),
                k=_number(d.get("k", 0.0), "defaults.k"),
            )
        except ValueError as exc:
            raise ProblemFormatError(str(exc), "defaults")

    problem = DecisionProblem(criteria, alternatives, ratings, scheme)
    return ProblemDocument(title=title, problem=problem, defaults=defaults, warnings=warnings)


def parse_problem(text: str) -> ProblemDocument:
    """Decode and fully validate a problem document from JSON text."""
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ProblemFormatError(f"malformed JSON: {exc.msg}", f"line {exc.lineno} column {exc.colno}")
    doc = document_from_dict(data)
    diags = validate_problem(doc.problem)
    if diags:
        raise InvalidProblemError(diags)
    return doc


def _json_number(x: float) -> float | int:
    # integral floats print as ints; the parse side accepts either
    if isinstance(x, float) and x == int(x) and abs(x) < 1e16:
        return int(x)
    return x


def document_to_dict(doc: ProblemDocument) -> dict:
    """Canonical dict form: fixed key order, ratings in canonical text."""
    scheme: dict[str, object] = {"kind": doc.problem.scheme.kind}
    if doc.problem.scheme.min is not None:
        scheme["min"] = _json_number(doc.problem.scheme.min)
    if doc.problem.scheme.max is not None:
        scheme["max"] = _json_number(doc.problem.scheme.max)
    out: dict[str, object] = {
        "version": doc.version,
        "title": doc.title,
        "scheme": scheme,
        "criteria": [
            {"id": c.id, "label": c.label, "weight": _json_number(c.weight)}
            for c in doc.problem.criteria
        ],
        "alternatives": [{"id": a.id, "label": a.label} for a in doc.problem.alternatives],
        "ratings": [[format_rating(v) for v in row] for row in doc.problem.ratings],
    }
    if doc.defaults is not None:
        out["defaults"] = {
            "iMin": _json_number(doc.defaults.i_min),
            "iMax": _json_number(doc.defaults.i_max),
            "k": _json_number(doc.defaults.k),
        }
    return out


def serialize_problem(doc: ProblemDocument) -> str:
    return json.dumps(document_to_dict(doc), indent=2) + "\n"


def result_to_dict(doc_or_problem, result: EvaluationResult) -> dict:
    """JSON-friendly evaluation result; shared by the CLI and the HTTP API."""
    problem = getattr(doc_or_problem, "problem", doc_or_problem)
    ids = [a.id for a in problem.alternatives]
    return {
        "neutroScores": [format_rating(s) for s in result.neutro_scores],
        "intervals": [[iv.lo, iv.hi] for iv in result.intervals],
        "ranking": [ids[i] for i in result.ranking],
        "selected": ids[result.selected_index],
        "contentions": [
            {
                "crisp": ids[c.crisp_index],
                "interval": ids[c.interval_index],
                "threshold": c.threshold,
                "kCritical": c.k_critical,
            }
            for c in result.contentions
        ],
        "warnings": list(result.warnings),
    }


def sensitivity_to_list(problem: DecisionProblem, steps) -> list[dict]:
    ids = [a.id for a in problem.alternatives]
    out = []
    for step in steps:
        entry: dict[str, object] = {"kAbove" if step.above else "k": step.k, "selected": ids[step.selected_index]}
        out.append(entry)
    return out


def _require_list(data: dict, key: str) -> list:
    value = data.get(key)
    if not isinstance(value, list):
        raise ProblemFormatError(f"{key} must be an array", key)
    return value


def _number(value: object, location: str) -> float:
    if isinstance(value, bool) or not isinstance(value, (int, float)):
        raise ProblemFormatError(f"expected a number, got {value!r}", location)
    if not math.isfinite(value):
        raise ProblemFormatError(f"expected a finite number, got {value!r}", location)
    return float(value)


def _opt_number(value: object, location: str) -> float | None:
    if value is None:
        return None
    return _number(value, location)


def _decode_rating(cell: object, location: str) -> NeutroValue:
    if isinstance(cell, bool):
        raise ProblemFormatError("rating must be a number or expression string", location)
    if isinstance(cell, (int, float)):
        if not math.isfinite(cell):
            raise ProblemFormatError("rating must be finite", location)
        return NeutroValue(float(cell), 0.0)
    if isinstance(cell, str):
        try:
            return parse_rating(cell)
        except RatingSyntaxError as exc:
            raise ProblemFormatError(f"invalid rating {cell!r}: {exc}", location)
    raise ProblemFormatError("rating must be a number or expression string", location)
