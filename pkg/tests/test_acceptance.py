"""Acceptance suite: one test per criterion, each printing a PASS line.

Run with `pytest tests/test_acceptance.py -v -s` to see the per-criterion
lines; criteria 1 and 3 also enforce their runtime budgets.
"""

import json
import random
import time

import pytest
from click.testing import CliRunner
from fastapi.testclient import TestClient

from ndmm import (
    Criterion,
    DecisionProblem,
    EvaluationConfig,
    NeutroValue,
    RatingSyntaxError,
    evaluate,
    format_rating,
    k_sensitivity,
    parse_problem,
    parse_rating,
    score_classical,
    serialize_problem,
)
from ndmm.cli import main as cli_main
from ndmm.service import create_app
from conftest import random_problem

TOL = 1e-9


def _report(criterion: int, label: str) -> None:
    print(f"[ACCEPTANCE] criterion {criterion} ({label}): PASS")


def test_criterion_1_worked_example_exact(sample_problem):
    start = time.perf_counter()
    result = evaluate(sample_problem, EvaluationConfig(0, 1, 0))
    elapsed = time.perf_counter() - start
    assert result.neutro_scores == (NeutroValue(44, 0), NeutroValue(28, 3), NeutroValue(43, 2))
    assert [(iv.lo, iv.hi) for iv in result.intervals] == [(44, 44), (28, 31), (43, 45)]
    assert elapsed < 0.010, f"evaluation took {elapsed * 1000:.2f} ms"
    _report(1, "worked example reproduced exactly")


def test_criterion_2_selection_flip(sample_problem):
    assert evaluate(sample_problem, EvaluationConfig(0, 1, 0)).selected_index == 0
    for k in (0.001, 0.5, 1):
        assert evaluate(sample_problem, EvaluationConfig(0, 1, k)).selected_index == 2, f"k={k}"
    steps = k_sensitivity(sample_problem, 0, 1)
    breakpoints = [s for s in steps if s.above]
    assert len(breakpoints) == 1
    assert breakpoints[0].k == 0.0
    assert breakpoints[0].selected_index == 2
    _report(2, "selection flips exactly at k = 0")


def test_criterion_3_degeneration_to_classical():
    rng = random.Random(101)
    start = time.perf_counter()
    for _ in range(1000):
        p = random_problem(rng, crisp=True)
        result = evaluate(p, EvaluationConfig(0, 1, 0))
        classical = score_classical(p)
        for j, iv in enumerate(result.intervals):
            assert abs(iv.lo - iv.hi) <= TOL
            assert abs(iv.lo - classical[j]) <= TOL
        expected = sorted(range(len(classical)), key=lambda j: (-classical[j], j))
        assert list(result.ranking) == expected
    elapsed = time.perf_counter() - start
    assert elapsed < 5.0, f"1000 problems took {elapsed:.2f} s"
    _report(3, "crisp problems degenerate to classical scoring")


def test_criterion_4_grid_oracle_soundness_tightness():
    rng = random.Random(103)
    for _ in range(500):
        p = random_problem(rng, crisp=False, max_ind=3.0)
        i_min = rng.uniform(-1, 1)
        i_max = rng.uniform(i_min, 1)
        result = evaluate(p, EvaluationConfig(i_min, i_max, 0))
        for j, score in enumerate(result.neutro_scores):
            samples = [
                score.evaluate(i_min + (i_max - i_min) * g / 100) for g in range(101)
            ]
            assert abs(min(samples) - result.intervals[j].lo) <= TOL
            assert abs(max(samples) - result.intervals[j].hi) <= TOL
    _report(4, "interval endpoints match the 101-point grid oracle")


def test_criterion_5_argmax_invariance_under_weight_scaling():
    rng = random.Random(107)
    for _ in range(500):
        p = random_problem(rng, crisp=False)
        base = evaluate(p, EvaluationConfig(0, 1, 0))
        for lam in (0.5, 2, 10):
            scaled = DecisionProblem(
                criteria=[Criterion(c.id, c.label, c.weight * lam) for c in p.criteria],
                alternatives=p.alternatives,
                ratings=p.ratings,
                scheme=p.scheme,
            )
            result = evaluate(scaled, EvaluationConfig(0, 1, 0))
            assert result.selected_index == base.selected_index
            assert result.ranking == base.ranking
    _report(5, "ranking invariant under positive weight scaling")


def test_criterion_6_io_round_trips():
    rng = random.Random(109)
    for _ in range(200):
        n = rng.randint(1, 6)
        m = rng.randint(1, 6)
        data = {
            "version": 1,
            "title": f"doc {rng.randint(0, 10 ** 6)}",
            "scheme": {"kind": "unrestricted"},
            "criteria": [
                {"id": f"c{i}", "label": f"C{i}", "weight": rng.choice([rng.randint(0, 10), rng.uniform(0, 10)])}
                for i in range(n)
            ],
            "alternatives": [{"id": f"a{j}", "label": f"A{j}"} for j in range(m)],
            "ratings": [
                [
                    format_rating(
                        NeutroValue(
                            rng.choice([rng.randint(-10, 10), rng.uniform(-10, 10)]),
                            rng.choice([0, 0, 1, -1, rng.uniform(-5, 5)]),
                        )
                    )
                    for _ in range(m)
                ]
                for _ in range(n)
            ],
            "defaults": {"iMin": 0, "iMax": 1, "k": rng.uniform(0, 2)},
        }
        doc = parse_problem(json.dumps(data))
        again = parse_problem(serialize_problem(doc))
        assert again.problem == doc.problem
        assert again.title == doc.title
        assert again.defaults == doc.defaults

    for _ in range(1000):
        v = NeutroValue(
            rng.choice([rng.randint(-100, 100), rng.uniform(-100, 100)]),
            rng.choice([0, 1, -1, rng.randint(-20, 20), rng.uniform(-20, 20)]),
        )
        assert parse_rating(format_rating(v)) == v

    for _ in range(10000):
        token = bytes(rng.randrange(256) for _ in range(rng.randint(0, 16))).decode(
            "latin-1"
        )
        try:
            result = parse_rating(token)
            assert isinstance(result, NeutroValue)
        except RatingSyntaxError:
            pass
    _report(6, "document/rating round-trips hold; grammar fuzzing clean")


def test_criterion_7_cli_end_to_end(tmp_path, sample_json):
    path = tmp_path / "example.json"
    path.write_text(sample_json)
    runner = CliRunner()

    result = runner.invoke(cli_main, ["evaluate", str(path), "--format", "json"])
    assert result.exit_code == 0
    body = json.loads(result.output)
    assert body["neutroScores"] == ["44", "28+3I", "43+2I"]
    assert body["intervals"] == [[44, 44], [28, 31], [43, 45]]
    assert body["selected"] == "A1"

    out1, out2 = tmp_path / "p1.svg", tmp_path / "p2.svg"
    assert runner.invoke(cli_main, ["plot", str(path), "--out", str(out1)]).exit_code == 0
    assert runner.invoke(cli_main, ["plot", str(path), "--out", str(out2)]).exit_code == 0
    svg = out1.read_text()
    assert svg.count('<rect class="band"') == 2
    assert svg.count('<line class="crisp"') == 1
    assert out1.read_bytes() == out2.read_bytes()
    _report(7, "CLI evaluate/plot match the worked example deterministically")


def test_criterion_8_api_contract(tmp_path, sample_doc_dict):
    data_dir = str(tmp_path / "store")
    client = TestClient(create_app(data_dir=data_dir))

    created = client.post("/api/problems", json=sample_doc_dict)
    assert created.status_code == 201
    problem_id = created.json()["id"]

    assert client.get(f"/api/problems/{problem_id}/evaluate").json()["selected"] == "A1"
    assert (
        client.get(f"/api/problems/{problem_id}/evaluate", params={"k": 0.5}).json()["selected"]
        == "A3"
    )

    broken = dict(sample_doc_dict, ratings=sample_doc_dict["ratings"][:2])
    response = client.post("/api/problems", json=broken)
    assert response.status_code == 400
    assert response.json()["diagnostics"]

    assert client.get("/api/problems/does-not-exist/evaluate").status_code == 404

    restarted = TestClient(create_app(data_dir=data_dir))
    body = restarted.get(f"/api/problems/{problem_id}").json()
    assert body["document"]["title"] == sample_doc_dict["title"]
    assert restarted.get(f"/api/problems/{problem_id}/evaluate").json()["selected"] == "A1"
    _report(8, "HTTP API create/evaluate/errors/persistence contract holds")
