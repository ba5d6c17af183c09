"""Read-only HTTP interface over a scored snapshot.

All endpoints serve one immutable snapshot; replacing it is a single
reference swap, so concurrent readers always see a consistent population.
What-if requests are stateless recomputations and never write anything.
"""
from __future__ import annotations

from pathlib import Path
from typing import Any

from fastapi import FastAPI, HTTPException, Request
from fastapi.responses import JSONResponse
from fastapi.staticfiles import StaticFiles

from .model import PrivacySetting, UserId
from .pipeline import (
    Snapshot,
    SettingChange,
    build_report,
    content_record,
    report_record,
    summary_record,
    what_if,
)


class SnapshotHolder:
    """Mutable cell holding the currently published snapshot."""

    def __init__(self, snapshot: Snapshot | None = None):
        self.current = snapshot

    def publish(self, snapshot: Snapshot) -> None:
        if len(snapshot.users) == 0:
            raise ValueError("refusing to publish a snapshot with no users")
        self.current = snapshot

    def get_or_503(self) -> Snapshot:
        snapshot = self.current
        if snapshot is None:
            raise HTTPException(status_code=503, detail="no snapshot published yet")
        return snapshot


def _neighbor_subgraph(snapshot: Snapshot, user: UserId, depth: int, limit: int) -> dict[str, Any]:
    """Breadth-first neighborhood capped at ``limit`` nodes (center first,
    then nearer rings, ids ascending within a ring)."""
    graph = snapshot.dataset.graph
    included: list[UserId] = [user]
    seen = {user}
    truncated = False
    frontier = [user]
    for _ in range(depth):
        ring: list[UserId] = []
        for node in frontier:
            for neighbor in graph.neighbors(node):
                if neighbor not in seen:
                    seen.add(neighbor)
                    ring.append(neighbor)
        ring.sort()
        for node in ring:
            if len(included) >= limit:
                truncated = True
                break
            included.append(node)
        if truncated or not ring:
            break
        frontier = ring

    member = set(included)
    edges = [
        [u, v]
        for u, v in snapshot.dataset.graph.edges
        if u in member and v in member
    ]
    s = snapshot.scores
    return {
        "center": user,
        "depth": depth,
        "nodes": [
            {
                "id": node,
                "sgprs": s.sgprs[node],
                "r_struct": s.r_struct[node],
                "r_imp": s.r_imp[node],
                "neighbor_risk": s.aprs[node],
            }
            for node in included
        ],
        "edges": edges,
        "truncated": truncated,
    }


def _parse_changes(payload: Any) -> list[SettingChange]:
    """Validate a what-if request body; malformed shapes are a 400."""
    if not isinstance(payload, dict) or not isinstance(payload.get("changes"), list):
        raise HTTPException(status_code=400, detail="body must be {\"changes\": [...]}")
    changes: list[SettingChange] = []
    for i, raw in enumerate(payload["changes"]):
        if not isinstance(raw, dict):
            raise HTTPException(status_code=400, detail=f"changes[{i}] must be an object")
        kind = raw.get("kind")
        item = raw.get("item")
        setting = raw.get("setting")
        if kind not in ("attribute", "post"):
            raise HTTPException(
                status_code=400, detail=f"changes[{i}].kind must be 'attribute' or 'post'"
            )
        if not isinstance(item, str) or not item:
            raise HTTPException(status_code=400, detail=f"changes[{i}].item must be a string")
        try:
            parsed = PrivacySetting.parse(str(setting))
        except ValueError as exc:
            raise HTTPException(status_code=400, detail=f"changes[{i}]: {exc}") from None
        changes.append(SettingChange(kind=kind, item=item, new_setting=parsed))
    return changes


def create_app(snapshot: Snapshot | None = None, static_dir: str | Path | None = None) -> FastAPI:
    """Build the API app, optionally pre-publishing a snapshot and mounting
    a static dashboard build at the web root."""
    app = FastAPI(title="privrisk", docs_url="/api/docs", openapi_url="/api/openapi.json")
    holder = SnapshotHolder()
    if snapshot is not None:
        holder.publish(snapshot)
    app.state.holder = holder

    @app.get("/api/health")
    def health() -> dict[str, Any]:
        current = holder.current
        return {
            "status": "ok",
            "snapshot_published": current is not None,
            "population": len(current.users) if current is not None else 0,
            "config_fingerprint": current.fingerprint if current is not None else None,
        }

    @app.get("/api/summary")
    def summary() -> dict[str, Any]:
        return summary_record(holder.get_or_503())

    @app.get("/api/users/{user_id}/report")
    def user_report(user_id: int) -> dict[str, Any]:
        snap = holder.get_or_503()
        try:
            report = build_report(snap, user_id)
        except KeyError:
            raise HTTPException(status_code=404, detail=f"unknown user {user_id}") from None
        return report_record(report)

    @app.get("/api/users/{user_id}/neighbors")
    def user_neighbors(user_id: int, depth: int = 1) -> dict[str, Any]:
        snap = holder.get_or_503()
        if user_id not in snap.dataset.graph:
            raise HTTPException(status_code=404, detail=f"unknown user {user_id}")
        if depth < 0:
            raise HTTPException(status_code=400, detail="depth must be non-negative")
        return _neighbor_subgraph(snap, user_id, depth, snap.config.neighbor_limit)

    @app.get("/api/users/{user_id}/content")
    def user_content(user_id: int) -> dict[str, Any]:
        snap = holder.get_or_503()
        if user_id not in snap.dataset.graph:
            raise HTTPException(status_code=404, detail=f"unknown user {user_id}")
        posts = [content_record(snap, post) for post in snap.posts_by(user_id)]
        return {"user": user_id, "posts": posts}

    @app.post("/api/users/{user_id}/whatif")
    async def user_whatif(user_id: int, request: Request) -> dict[str, Any]:
        snap = holder.get_or_503()
        try:
            payload = await request.json()
        except Exception:
            raise HTTPException(status_code=400, detail="body must be JSON") from None
        changes = _parse_changes(payload)
        try:
            result = what_if(snap, user_id, changes)
        except KeyError as exc:
            raise HTTPException(status_code=404, detail=str(exc.args[0])) from None
        return {
            "user": result.user,
            "old": dict(result.old),
            "new": dict(result.new),
            "old_cprs": dict(result.old_cprs),
            "new_cprs": dict(result.new_cprs),
            "deltas": {key: result.new[key] - result.old[key] for key in result.new},
            "cprs_deltas": {
                name: result.new_cprs[name] - result.old_cprs[name]
                for name in result.new_cprs
            },
            "sgprs_approximate": result.sgprs_approximate,
        }

    @app.exception_handler(404)
    async def not_found(request: Request, exc) -> JSONResponse:
        detail = getattr(exc, "detail", "not found")
        return JSONResponse(status_code=404, content={"detail": detail})

    if static_dir is not None and Path(static_dir).is_dir():
        app.mount("/", StaticFiles(directory=str(static_dir), html=True), name="dashboard")

    return app


def publish_snapshot(app: FastAPI, snapshot: Snapshot) -> None:
    """Atomically replace the app's served snapshot."""
    app.state.holder.publish(snapshot)
