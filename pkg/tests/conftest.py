import json
import random

import pytest

from ndmm import (
    Alternative,
    Criterion,
    DecisionProblem,
    NeutroValue,
    RatingScheme,
)
from ndmm.sample import sample_document


@pytest.fixture
def sample_doc_dict():
    return sample_document()


@pytest.fixture
def sample_json(sample_doc_dict):
    return json.dumps(sample_doc_dict)


@pytest.fixture
def sample_problem():
    """The built-in 4-criteria / 3-alternative problem with two I entries."""
    weights = [3, 3, 2, 1]
    rows = [
        [NeutroValue(5), NeutroValue(6), NeutroValue(7)],
        [NeutroValue(2), NeutroValue(0, 1), NeutroValue(5)],
        [NeutroValue(10), NeutroValue(4), NeutroValue(0, 1)],
        [NeutroValue(3), NeutroValue(2), NeutroValue(7)],
    ]
    return DecisionProblem(
        criteria=[Criterion(f"c{i + 1}", f"c{i + 1}", w) for i, w in enumerate(weights)],
        alternatives=[Alternative(f"A{j + 1}", f"A{j + 1}") for j in range(3)],
        ratings=rows,
        scheme=RatingScheme("scale", min=1, max=10),
    )


def random_problem(rng: random.Random, crisp: bool = True, max_ind: float = 3.0) -> DecisionProblem:
    """Random unrestricted problem for property checks."""
    n = rng.randint(1, 10)
    m = rng.randint(1, 10)
    criteria = [Criterion(f"c{i}", f"c{i}", rng.uniform(0, 10)) for i in range(n)]
    alternatives = [Alternative(f"a{j}", f"a{j}") for j in range(m)]
    rows = []
    for _ in range(n):
        row = []
        for _ in range(m):
            ind = 0.0 if crisp else rng.uniform(-max_ind, max_ind)
            row.append(NeutroValue(rng.uniform(-10, 10), ind))
        rows.append(row)
    return DecisionProblem(criteria, alternatives, rows, RatingScheme("unrestricted"))
