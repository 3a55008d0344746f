"""HTTP API: problem CRUD plus evaluation and k-sensitivity endpoints.

Problems live in an in-memory store, optionally mirrored to a directory as
one JSON file per problem (the problem file format).  Evaluation is computed
per request from an immutable snapshot; nothing is cached.
"""

from __future__ import annotations

import os
import threading
import uuid
from dataclasses import dataclass

from fastapi import FastAPI, Request
from fastapi.middleware.cors import CORSMiddleware
from fastapi.responses import JSONResponse
from fastapi.staticfiles import StaticFiles

from . import problem_io
from .engine import EvaluationConfig, InvalidProblemError, evaluate, k_sensitivity
from .problem_io import ProblemDocument, ProblemFormatError
from .sample import sample_document


@dataclass(frozen=True)
class StoredProblem:
    doc: ProblemDocument
    revision: int


class ProblemStore:
    """Atomic per-id read/replace; writers to the same store are serialized."""

    def __init__(self, data_dir: str | None = None):
        self._lock = threading.Lock()
        self._problems: dict[str, StoredProblem] = {}
        self._data_dir = data_dir
        if data_dir:
            os.makedirs(data_dir, exist_ok=True)
            self._load(data_dir)

    def _load(self, data_dir: str) -> None:
        for name in sorted(os.listdir(data_dir)):
            if not name.endswith(".json"):
                continue
            path = os.path.join(data_dir, name)
            with open(path, encoding="utf-8") as fh:
                doc = problem_io.parse_problem(fh.read())
            self._problems[name[: -len(".json")]] = StoredProblem(doc, revision=1)

    def _persist(self, problem_id: str, doc: ProblemDocument | None) -> None:
        if not self._data_dir:
            return
        path = os.path.join(self._data_dir, f"{problem_id}.json")
        if doc is None:
            if os.path.exists(path):
                os.remove(path)
            return
        tmp = path + ".tmp"
        with open(tmp, "w", encoding="utf-8") as fh:
            fh.write(problem_io.serialize_problem(doc))
        os.replace(tmp, path)

    def create(self, doc: ProblemDocument) -> tuple[str, int]:
        problem_id = uuid.uuid4().hex[:12]
        with self._lock:
            self._problems[problem_id] = StoredProblem(doc, revision=1)
            self._persist(problem_id, doc)
        return problem_id, 1

    def get(self, problem_id: str) -> StoredProblem | None:
        with self._lock:
            return self._problems.get(problem_id)

    def list_ids(self) -> list[tuple[str, StoredProblem]]:
        with self._lock:
            return sorted(self._problems.items())

    def update(self, problem_id: str, doc: ProblemDocument, expected_revision: int | None) -> int | None:
        """New revision, or None if missing; raises StaleRevisionError on mismatch."""
        with self._lock:
            current = self._problems.get(problem_id)
            if current is None:
                return None
            if expected_revision is not None and expected_revision != current.revision:
                raise StaleRevisionError(current.revision)
            revision = current.revision + 1
            self._problems[problem_id] = StoredProblem(doc, revision)
            self._persist(problem_id, doc)
        return revision

    def delete(self, problem_id: str) -> bool:
        with self._lock:
            if problem_id not in self._problems:
                return False
            del self._problems[problem_id]
            self._persist(problem_id, None)
        return True


class StaleRevisionError(Exception):
    def __init__(self, current_revision: int):
        self.current_revision = current_revision


def _error(status: int, message: str, diagnostics: list[str] | None = None) -> JSONResponse:
    body: dict[str, object] = {"error": message}
    if diagnostics:
        body["diagnostics"] = diagnostics
    return JSONResponse(body, status_code=status)


def _decode_body(data: object) -> ProblemDocument | JSONResponse:
    try:
        doc = problem_io.document_from_dict(data)
    except ProblemFormatError as exc:
        return _error(400, str(exc))
    from .engine import validate_problem

    diags = validate_problem(doc.problem)
    if diags:
        return _error(400, "invalid problem", [str(d) for d in diags])
    return doc


def _config_from_query(request: Request, doc: ProblemDocument) -> EvaluationConfig | JSONResponse:
    defaults = doc.defaults or EvaluationConfig()
    params = request.query_params
    try:
        i_min = float(params.get("iMin", defaults.i_min))
        i_max = float(params.get("iMax", defaults.i_max))
        k = float(params.get("k", defaults.k))
    except ValueError:
        return _error(400, "iMin, iMax and k must be numbers")
    try:
        return EvaluationConfig(i_min=i_min, i_max=i_max, k=k)
    except ValueError as exc:
        return _error(400, str(exc))


def create_app(data_dir: str | None = None, static_dir: str | None = None) -> FastAPI:
    app = FastAPI(title="ndmm", docs_url=None, redoc_url=None)
    app.add_middleware(
        CORSMiddleware, allow_origins=["*"], allow_methods=["*"], allow_headers=["*"]
    )
    store = ProblemStore(data_dir)
    app.state.store = store

    @app.get("/api/sample")
    def get_sample():
        return sample_document()

    @app.post("/api/problems", status_code=201)
    async def create_problem(request: Request):
        try:
            data = await request.json()
        except Exception:
            return _error(400, "request body must be JSON")
        doc = _decode_body(data)
        if isinstance(doc, JSONResponse):
            return doc
        problem_id, revision = store.create(doc)
        return {"id": problem_id, "revision": revision}

    @app.get("/api/problems")
    def list_problems():
        return [
            {"id": problem_id, "title": stored.doc.title, "revision": stored.revision}
            for problem_id, stored in store.list_ids()
        ]

    @app.get("/api/problems/{problem_id}")
    def get_problem(problem_id: str):
        stored = store.get(problem_id)
        if stored is None:
            return _error(404, "unknown problem id")
        return {
            "id": problem_id,
            "revision": stored.revision,
            "document": problem_io.document_to_dict(stored.doc),
        }

    @app.put("/api/problems/{problem_id}")
    async def update_problem(problem_id: str, request: Request):
        try:
            data = await request.json()
        except Exception:
            return _error(400, "request body must be JSON")
        doc = _decode_body(data)
        if isinstance(doc, JSONResponse):
            return doc
        if_match = request.headers.get("If-Match")
        expected = None
        if if_match is not None:
            try:
                expected = int(if_match.strip().strip('"'))
            except ValueError:
                return _error(400, "If-Match must be a revision number")
        try:
            revision = store.update(problem_id, doc, expected)
        except StaleRevisionError as exc:
            return _error(409, f"stale revision; current is {exc.current_revision}")
        if revision is None:
            return _error(404, "unknown problem id")
        return {"id": problem_id, "revision": revision}

    @app.delete("/api/problems/{problem_id}")
    def delete_problem(problem_id: str):
        if not store.delete(problem_id):
            return _error(404, "unknown problem id")
        return {"deleted": problem_id}

    @app.get("/api/problems/{problem_id}/evaluate")
    def evaluate_problem(problem_id: str, request: Request):
        stored = store.get(problem_id)
        if stored is None:
            return _error(404, "unknown problem id")
        cfg = _config_from_query(request, stored.doc)
        if isinstance(cfg, JSONResponse):
            return cfg
        try:
            result = evaluate(stored.doc.problem, cfg)
        except InvalidProblemError as exc:
            return _error(400, "invalid problem", [str(d) for d in exc.diagnostics])
        return problem_io.result_to_dict(stored.doc, result)

    @app.get("/api/problems/{problem_id}/sensitivity")
    def sensitivity(problem_id: str, request: Request):
        stored = store.get(problem_id)
        if stored is None:
            return _error(404, "unknown problem id")
        cfg = _config_from_query(request, stored.doc)
        if isinstance(cfg, JSONResponse):
            return cfg
        steps = k_sensitivity(stored.doc.problem, cfg.i_min, cfg.i_max)
        return problem_io.sensitivity_to_list(stored.doc.problem, steps)

    if static_dir and os.path.isdir(static_dir):
        app.mount("/", StaticFiles(directory=static_dir, html=True), name="ui")

    return app
