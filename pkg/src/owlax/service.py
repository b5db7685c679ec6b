"""HTTP facade over review sessions for the web UI.

Sessions live in memory; with a state directory configured, every mutation is
snapshotted to JSON so a restart restores sessions byte-identically. Mutating
requests are serialized per session; reads are lock-free.
"""

from __future__ import annotations

import json
import os
import secrets
import threading
import time
from dataclasses import dataclass, field
from pathlib import Path

from fastapi import FastAPI, HTTPException, Request, Response
from fastapi.middleware.cors import CORSMiddleware
from fastapi.responses import JSONResponse, PlainTextResponse
from fastapi.staticfiles import StaticFiles

from .diagram import diagram_from_dict, diagram_to_dict, validate_diagram
from .errors import DiagramFormatError, UnknownCandidateIdError
from .functional import parse_functional, render_functional
from .generate import generate
from .manchester import render_manchester
from .session import (
    SessionState,
    apply_selection,
    diagram_entities,
    integrate,
    merge_existing,
    review_from_dict,
    review_to_dict,
)

DEFAULT_MAX_BODY_BYTES = 1 << 20


@dataclass
class SessionRecord:
    id: str
    state: SessionState = field(default_factory=SessionState)
    created: float = field(default_factory=time.time)
    updated: float = field(default_factory=time.time)
    lock: threading.Lock = field(default_factory=threading.Lock)


class SessionStore:
    """Thread-safe registry of sessions with optional JSON snapshots."""

    def __init__(self, state_dir: str | Path | None = None):
        self._records: dict[str, SessionRecord] = {}
        self._registry_lock = threading.Lock()
        self.state_dir = Path(state_dir) if state_dir else None
        if self.state_dir:
            self.state_dir.mkdir(parents=True, exist_ok=True)
            self._restore()

    def create(self) -> SessionRecord:
        with self._registry_lock:
            session_id = secrets.token_hex(8)
            while session_id in self._records:
                session_id = secrets.token_hex(8)
            record = SessionRecord(id=session_id)
            self._records[session_id] = record
        self.persist(record)
        return record

    def get(self, session_id: str) -> SessionRecord:
        record = self._records.get(session_id)
        if record is None:
            raise HTTPException(status_code=404, detail=f"unknown session {session_id!r}")
        return record

    def delete(self, session_id: str) -> None:
        with self._registry_lock:
            if session_id not in self._records:
                raise HTTPException(status_code=404, detail=f"unknown session {session_id!r}")
            del self._records[session_id]
        if self.state_dir:
            (self.state_dir / f"{session_id}.json").unlink(missing_ok=True)

    def persist(self, record: SessionRecord) -> None:
        if not self.state_dir:
            return
        state = record.state
        snapshot = {
            "id": record.id,
            "created": record.created,
            "updated": record.updated,
            "diagram": diagram_to_dict(state.diagram) if state.diagram else None,
            "ontology": render_functional(state.ontology),
            "review": review_to_dict(state.last_review) if state.last_review else None,
        }
        path = self.state_dir / f"{record.id}.json"
        tmp = path.with_suffix(".tmp")
        tmp.write_text(json.dumps(snapshot, ensure_ascii=False), encoding="utf-8")
        os.replace(tmp, path)

    def _restore(self) -> None:
        for path in sorted(self.state_dir.glob("*.json")):
            snapshot = json.loads(path.read_text(encoding="utf-8"))
            state = SessionState(
                diagram=diagram_from_dict(snapshot["diagram"]) if snapshot["diagram"] else None,
                ontology=parse_functional(snapshot["ontology"]),
                last_review=review_from_dict(snapshot["review"]) if snapshot["review"] else None,
            )
            record = SessionRecord(
                id=snapshot["id"],
                state=state,
                created=snapshot["created"],
                updated=snapshot["updated"],
            )
            self._records[record.id] = record


def create_app(
    state_dir: str | Path | None = None,
    static_dir: str | Path | None = None,
    max_body_bytes: int = DEFAULT_MAX_BODY_BYTES,
) -> FastAPI:
    app = FastAPI(title="owlax", docs_url=None, redoc_url=None)
    app.add_middleware(
        CORSMiddleware, allow_origins=["*"], allow_methods=["*"], allow_headers=["*"]
    )
    store = SessionStore(state_dir)
    app.state.store = store

    @app.post("/session", status_code=201)
    def create_session() -> dict:
        return {"id": store.create().id}

    @app.delete("/session/{session_id}", status_code=204)
    def delete_session(session_id: str) -> Response:
        store.delete(session_id)
        return Response(status_code=204)

    @app.put("/session/{session_id}/diagram")
    async def put_diagram(session_id: str, request: Request) -> dict:
        record = store.get(session_id)
        body = await request.body()
        if len(body) > max_body_bytes:
            raise HTTPException(status_code=413, detail="diagram body too large")
        try:
            obj = json.loads(body)
            diagram = diagram_from_dict(obj)
        except (json.JSONDecodeError, DiagramFormatError) as exc:
            raise HTTPException(status_code=400, detail=str(exc)) from exc
        with record.lock:
            record.state.diagram = diagram
            record.updated = time.time()
            store.persist(record)
        return validate_diagram(diagram).to_dict()

    @app.get("/session/{session_id}/diagram")
    def get_diagram(session_id: str) -> dict:
        record = store.get(session_id)
        if record.state.diagram is None:
            raise HTTPException(status_code=404, detail="no diagram stored for this session")
        return diagram_to_dict(record.state.diagram)

    @app.post("/session/{session_id}/candidates")
    def generate_candidates(session_id: str) -> dict:
        record = store.get(session_id)
        with record.lock:
            diagram = record.state.diagram
            if diagram is None:
                report = {
                    "errors": [
                        {"code": "NO_DIAGRAM", "element": None, "message": "no diagram stored"}
                    ],
                    "warnings": [],
                }
                return JSONResponse(status_code=409, content=report)
            report = validate_diagram(diagram)
            if not report.ok:
                return JSONResponse(status_code=409, content=report.to_dict())
            review = merge_existing(generate(diagram), record.state.ontology)
            record.state.last_review = review
            record.updated = time.time()
            store.persist(record)
        return review_to_dict(review)

    @app.post("/session/{session_id}/integrate")
    def integrate_decisions(session_id: str, decisions: dict[str, bool]) -> dict:
        record = store.get(session_id)
        with record.lock:
            review = record.state.last_review
            if review is None:
                raise HTTPException(status_code=409, detail="no review generated yet")
            try:
                applied = apply_selection(review, decisions)
            except UnknownCandidateIdError as exc:
                raise HTTPException(
                    status_code=422,
                    detail={"message": "unknown candidate ids", "unknown_ids": list(exc.ids)},
                ) from exc
            before = record.state.ontology
            after = integrate(applied, before)
            if record.state.diagram is not None:
                after = after.declaring(diagram_entities(record.state.diagram))
            record.state.ontology = after
            record.state.last_review = applied
            record.updated = time.time()
            store.persist(record)
        before_set, after_set = before.axiom_set(), after.axiom_set()
        return {
            "added": len(after_set - before_set),
            "removed": len(before_set - after_set),
            "total": len(after_set),
        }

    @app.get("/session/{session_id}/ontology")
    def get_ontology(session_id: str, format: str = "functional") -> PlainTextResponse:
        record = store.get(session_id)
        ontology = record.state.ontology
        if format == "functional":
            return PlainTextResponse(render_functional(ontology))
        if format == "manchester":
            lines = [render_manchester(axiom) for axiom in ontology.axioms]
            return PlainTextResponse("".join(line + "\n" for line in lines))
        raise HTTPException(status_code=400, detail=f"unknown format {format!r}")

    if static_dir:
        app.mount("/", StaticFiles(directory=str(static_dir), html=True), name="ui")

    return app
