"""Decision problems, weighted scoring, interval projection and selection.

Scores are S = W x D: for each alternative, the weighted sum of its column of
ratings.  With indeterminate ratings the score keeps the form d + c*I; it is
then projected to an interval over the configured I-range and the ranking is
decided by interval midpoints, with a k-parameterized tie rule whenever a
crisp score sits strictly inside another alternative's interval.
"""

from __future__ import annotations

import functools
from dataclasses import dataclass, field

from .values import Interval, NeutroValue

MIDPOINT_TOL = 1e-9

SCHEME_KINDS = ("baseline", "scale", "rank-order", "unrestricted")


@dataclass(frozen=True)
class Criterion:
    id: str
    label: str
    weight: float


@dataclass(frozen=True)
class Alternative:
    id: str
    label: str


@dataclass(frozen=True)
class RatingScheme:
    kind: str
    min: float | None = None
    max: float | None = None


@dataclass(frozen=True)
class DecisionProblem:
    """n criteria, m alternatives and an n x m rating matrix (row = criterion)."""

    criteria: tuple[Criterion, ...]
    alternatives: tuple[Alternative, ...]
    ratings: tuple[tuple[NeutroValue, ...], ...]
    scheme: RatingScheme

    def __init__(self, criteria, alternatives, ratings, scheme):
        object.__setattr__(self, "criteria", tuple(criteria))
        object.__setattr__(self, "alternatives", tuple(alternatives))
        object.__setattr__(self, "ratings", tuple(tuple(row) for row in ratings))
        object.__setattr__(self, "scheme", scheme)

    @property
    def n_criteria(self) -> int:
        return len(self.criteria)

    @property
    def n_alternatives(self) -> int:
        return len(self.alternatives)


@dataclass(frozen=True)
class EvaluationConfig:
    i_min: float = 0.0
    i_max: float = 1.0
    k: float = 0.0

    def __post_init__(self) -> None:
        if self.i_min > self.i_max:
            raise ValueError("invalid I-bounds: i_min > i_max")
        if self.k < 0:
            raise ValueError("k must be nonnegative")


@dataclass(frozen=True)
class Diagnostic:
    code: str
    message: str
    row: int | None = None
    col: int | None = None

    def __str__(self) -> str:
        where = ""
        if self.row is not None and self.col is not None:
            where = f" at ratings[{self.row}][{self.col}]"
        elif self.row is not None:
            where = f" at row {self.row}"
        return f"{self.code}: {self.message}{where}"


class InvalidProblemError(ValueError):
    def __init__(self, diagnostics: list[Diagnostic]):
        self.diagnostics = list(diagnostics)
        super().__init__("; ".join(str(d) for d in self.diagnostics))


@dataclass(frozen=True)
class Contention:
    """One application of the crisp-vs-containing-interval rule.

    ``k_critical`` is the largest k at which the crisp alternative still wins
    (negative: it never wins); ``threshold`` is the score it must reach.
    """

    crisp_index: int
    interval_index: int
    threshold: float
    k_critical: float


@dataclass(frozen=True)
class EvaluationResult:
    neutro_scores: tuple[NeutroValue, ...]
    intervals: tuple[Interval, ...]
    selected_index: int
    ranking: tuple[int, ...]
    contentions: tuple[Contention, ...]
    warnings: tuple[str, ...] = field(default=())


@dataclass(frozen=True)
class SensitivityStep:
    """Winner on one segment of the k axis.

    The first step holds from k = ``k`` inclusive; later steps (``above`` is
    True) hold for k strictly greater than ``k``, up to the next step.
    """

    k: float
    selected_index: int
    above: bool = False


def validate_problem(problem: DecisionProblem) -> list[Diagnostic]:
    """All invariant violations as diagnostics; empty list means valid."""
    diags: list[Diagnostic] = []
    n, m = problem.n_criteria, problem.n_alternatives
    if n < 1:
        diags.append(Diagnostic("empty-criteria", "at least one criterion required"))
    if m < 1:
        diags.append(Diagnostic("empty-alternatives", "at least one alternative required"))

    seen: set[str] = set()
    for c in problem.criteria:
        if c.id in seen:
            diags.append(Diagnostic("duplicate-id", f"duplicate criterion id {c.id!r}"))
        seen.add(c.id)
        if not (c.weight >= 0) or c.weight != c.weight or c.weight == float("inf"):
            diags.append(Diagnostic("negative-weight", f"criterion {c.id!r} weight {c.weight} must be finite and >= 0"))
    seen = set()
    for a in problem.alternatives:
        if a.id in seen:
            diags.append(Diagnostic("duplicate-id", f"duplicate alternative id {a.id!r}"))
        seen.add(a.id)

    if len(problem.ratings) != n:
        diags.append(Diagnostic("dimension-mismatch", f"expected {n} rating rows, got {len(problem.ratings)}"))
        return diags
    for i, row in enumerate(problem.ratings):
        if len(row) != m:
            diags.append(Diagnostic("dimension-mismatch", f"expected {m} ratings in row {i}, got {len(row)}", row=i))
            return diags

    diags.extend(_validate_scheme(problem))
    return diags


def _validate_scheme(problem: DecisionProblem) -> list[Diagnostic]:
    diags: list[Diagnostic] = []
    scheme = problem.scheme
    if scheme.kind not in SCHEME_KINDS:
        return [Diagnostic("invalid-scheme", f"unknown scheme kind {scheme.kind!r}")]
    if scheme.kind == "scale":
        if scheme.min is None or scheme.max is None or not scheme.min < scheme.max:
            return [Diagnostic("invalid-scheme", f"scale scheme requires min < max, got min={scheme.min} max={scheme.max}")]
    if scheme.kind == "unrestricted":
        return diags

    m = problem.n_alternatives
    for i, row in enumerate(problem.ratings):
        for j, v in enumerate(row):
            if _is_bare_indeterminate(v):
                continue  # a bare +/-I entry is exempt from range checks
            if scheme.kind == "baseline":
                if v.det not in (-1.0, 0.0, 1.0):
                    diags.append(Diagnostic("scheme-violation", f"baseline rating det {v.det} not in {{-1, 0, +1}}", row=i, col=j))
            elif scheme.kind == "scale":
                if not scheme.min <= v.det <= scheme.max:
                    diags.append(Diagnostic("scheme-violation", f"rating det {v.det} outside scale [{scheme.min}, {scheme.max}]", row=i, col=j))
                if v.ind != 0 and abs(v.ind) > scheme.max - scheme.min:
                    diags.append(Diagnostic("scheme-violation", f"indeterminacy spread {abs(v.ind)} exceeds scale width {scheme.max - scheme.min}", row=i, col=j))
            elif scheme.kind == "rank-order":
                if v.det != int(v.det) or not 1 <= v.det <= m:
                    diags.append(Diagnostic("scheme-violation", f"rank {v.det} is not an integer in 1..{m}", row=i, col=j))
    return diags


def _is_bare_indeterminate(v: NeutroValue) -> bool:
    return v.det == 0.0 and abs(v.ind) == 1.0


def score_neutro(problem: DecisionProblem) -> list[NeutroValue]:
    """Weighted column sums, accumulated in criterion order."""
    diags = validate_problem(problem)
    if diags:
        raise InvalidProblemError(diags)
    scores = []
    for j in range(problem.n_alternatives):
        acc = NeutroValue(0.0, 0.0)
        for i, criterion in enumerate(problem.criteria):
            acc = acc + problem.ratings[i][j].scale(criterion.weight)
        scores.append(acc)
    return scores


def score_classical(problem: DecisionProblem) -> list[float]:
    """Plain weighted scores; every rating must be crisp."""
    for i, row in enumerate(problem.ratings):
        for j, v in enumerate(row):
            if v.ind != 0:
                raise ValueError(f"indeterminate rating in classical mode at ratings[{i}][{j}]")
    return [s.det for s in score_neutro(problem)]


def deneutrosophy(scores: list[NeutroValue], cfg: EvaluationConfig) -> list[Interval]:
    return [s.to_interval(cfg.i_min, cfg.i_max) for s in scores]


def _find_contentions(intervals: list[Interval], k: float) -> dict[tuple[int, int], Contention]:
    """All (crisp, containing-interval) pairs, keyed by index pair."""
    found: dict[tuple[int, int], Contention] = {}
    for i, a in enumerate(intervals):
        if a.width > MIDPOINT_TOL:
            continue
        s = a.midpoint
        for j, b in enumerate(intervals):
            if i == j or not b.lo < s < b.hi:
                continue
            found[(i, j)] = Contention(
                crisp_index=i,
                interval_index=j,
                threshold=b.midpoint + k,
                k_critical=s - b.midpoint,
            )
    return found


def select(intervals: list[Interval], k: float) -> tuple[int, list[int], list[Contention]]:
    """Total order over interval scores, best first.

    Midpoint decides, except that a crisp score strictly inside another
    interval must clear that interval's midpoint by k (ties go to the crisp
    side); midpoint ties fall back to higher top, then narrower width, then
    original index.
    """
    if not intervals:
        raise ValueError("select requires at least one interval")
    if k < 0:
        raise ValueError("k must be nonnegative")

    contentions = _find_contentions(intervals, k)

    def compare(i: int, j: int) -> int:
        pair = contentions.get((i, j))
        if pair is not None:
            return -1 if intervals[i].midpoint >= pair.threshold else 1
        pair = contentions.get((j, i))
        if pair is not None:
            return 1 if intervals[j].midpoint >= pair.threshold else -1
        a, b = intervals[i], intervals[j]
        if abs(a.midpoint - b.midpoint) > MIDPOINT_TOL:
            return -1 if a.midpoint > b.midpoint else 1
        if abs(a.hi - b.hi) > MIDPOINT_TOL:
            return -1 if a.hi > b.hi else 1
        if abs(a.width - b.width) > MIDPOINT_TOL:
            return -1 if a.width < b.width else 1
        return -1 if i < j else 1

    ranking = sorted(range(len(intervals)), key=functools.cmp_to_key(compare))
    ordered = sorted(contentions.values(), key=lambda c: (c.crisp_index, c.interval_index))
    return ranking[0], ranking, ordered


def evaluate(problem: DecisionProblem, cfg: EvaluationConfig) -> EvaluationResult:
    scores = score_neutro(problem)
    intervals = deneutrosophy(scores, cfg)
    selected, ranking, contentions = select(intervals, cfg.k)

    warnings: list[str] = []
    if cfg.i_min < -1 or cfg.i_max > 1:
        warnings.append(f"I-bounds [{cfg.i_min}, {cfg.i_max}] extend outside the customary [-1, 1]")
    for c in contentions:
        bound = intervals[c.interval_index].hi - intervals[c.crisp_index].midpoint
        if cfg.k >= bound:
            rel = "equals" if cfg.k == bound else "exceeds"
            warnings.append(
                f"k = {cfg.k:g} {rel} the admissible bound {bound:g} for the contention between "
                f"alternatives {c.crisp_index} and {c.interval_index}"
            )

    return EvaluationResult(
        neutro_scores=tuple(scores),
        intervals=tuple(intervals),
        selected_index=selected,
        ranking=tuple(ranking),
        contentions=tuple(contentions),
        warnings=tuple(warnings),
    )


def k_sensitivity(problem: DecisionProblem, i_min: float, i_max: float) -> list[SensitivityStep]:
    """Winner as a piecewise-constant function of k, from contention breakpoints.

    The selection can only change at a contention's k_critical, so the winner
    on each open segment between consecutive breakpoints is constant and can
    be read off by one select() call anywhere inside it.
    """
    scores = score_neutro(problem)
    intervals = deneutrosophy(scores, EvaluationConfig(i_min=i_min, i_max=i_max, k=0.0))
    contentions = _find_contentions(intervals, 0.0)
    breakpoints = sorted({c.k_critical for c in contentions.values() if c.k_critical >= 0})

    steps = [SensitivityStep(k=0.0, selected_index=select(intervals, 0.0)[0])]
    for idx, bp in enumerate(breakpoints):
        nxt = breakpoints[idx + 1] if idx + 1 < len(breakpoints) else bp + 1.0
        probe = (bp + nxt) / 2.0 if nxt > bp else bp + 1.0
        winner_above = select(intervals, probe)[0]
        if winner_above != steps[-1].selected_index:
            steps.append(SensitivityStep(k=bp, selected_index=winner_above, above=True))
    return steps
