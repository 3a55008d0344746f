"""Built-in sample problem: 4 weighted criteria, 3 alternatives, two
indeterminate ratings.  Used by the docs, the tests and the web UI's
"load sample" action.
"""

from __future__ import annotations

SAMPLE_DOCUMENT = {
    "version": 1,
    "title": "Concept selection sample",
    "scheme": {"kind": "scale", "min": 1, "max": 10},
    "criteria": [
        {"id": "c1", "label": "Cost", "weight": 3},
        {"id": "c2", "label": "Reliability", "weight": 3},
        {"id": "c3", "label": "Ease of use", "weight": 2},
        {"id": "c4", "label": "Maintainability", "weight": 1},
    ],
    "alternatives": [
        {"id": "A1", "label": "Alternative 1"},
        {"id": "A2", "label": "Alternative 2"},
        {"id": "A3", "label": "Alternative 3"},
    ],
    "ratings": [
        ["5", "6", "7"],
        ["2", "I", "5"],
        ["10", "4", "I"],
        ["3", "2", "7"],
    ],
    "defaults": {"iMin": 0, "iMax": 1, "k": 0},
}


def sample_document() -> dict:
    """A fresh copy of the sample problem document."""
    import copy

    return copy.deepcopy(SAMPLE_DOCUMENT)
