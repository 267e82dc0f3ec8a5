"""Loopback HTTP service exposing the filter store.

Endpoints:
    GET  /v1/filters          -> stored labels with metadata
    POST /v1/filters/{label}  -> insert a password's filter (201)
    POST /v1/check            -> CheckDecision for a candidate (200)

Candidate and stored passwords travel only in request bodies, are never
logged, and only their filters are persisted. The server binds the
loopback interface unless explicitly told otherwise.
"""

from __future__ import annotations

from fastapi import FastAPI, HTTPException
from pydantic import BaseModel

from .bloomfilter import BloomFilter
from .checker import DEFAULT_THRESHOLD, check_candidate
from .errors import StoreError
from .similarity import qinsert
from .storage import FilterStore


class PasswordBody(BaseModel):
    password: str


def build_history_filter(store: FilterStore, password: str) -> BloomFilter:
    """New filter for one password, using the store's configured family."""
    config = store.config()
    entries = store.entries()
    if entries:
        template = store.load(entries[0].label)
        family, kappa, nu = template.family, template.kappa, template.nu
    else:
        from .hashing import HashFamily

        family = HashFamily(
            salts=tuple(bytes.fromhex(s) for s in config["salts"]),
            digest=config["digest"],
            origin=config.get("origin", "fixed"),
        )
        kappa, nu = config["kappa"], config["nu"]
    f = BloomFilter(family, kappa, nu)
    qinsert(f, password, nu)
    return f


def create_app(store: FilterStore, threshold: float = DEFAULT_THRESHOLD) -> FastAPI:
    app = FastAPI(title="simbloom", docs_url=None, redoc_url=None)

    @app.get("/v1/filters")
    def list_filters() -> list[dict]:
        try:
            return [
                {"label": e.label, "created_at": e.created_at, "nu": e.nu}
                for e in store.entries()
            ]
        except StoreError as exc:
            raise HTTPException(status_code=503, detail=str(exc))

    @app.post("/v1/filters/{label}", status_code=201)
    def add_filter(label: str, body: PasswordBody) -> dict:
        f = build_history_filter(store, body.password)
        try:
            store.add(label, f)
        except StoreError as exc:
            status = 409 if "duplicate" in str(exc) else 503
            raise HTTPException(status_code=status, detail=f"cannot add {label!r}")
        return {"label": label}

    @app.get("/v1/filters/{label}")
    def get_filter(label: str) -> dict:
        for e in store.entries():
            if e.label == label:
                return {"label": e.label, "created_at": e.created_at, "nu": e.nu}
        raise HTTPException(status_code=404, detail=f"no filter labeled {label!r}")

    @app.post("/v1/check")
    def check(body: PasswordBody) -> dict:
        try:
            return check_candidate(store, body.password, threshold).as_dict()
        except StoreError as exc:
            raise HTTPException(status_code=503, detail=str(exc))

    return app


def serve(
    store: FilterStore,
    port: int,
    threshold: float = DEFAULT_THRESHOLD,
    host: str = "127.0.0.1",
) -> None:
    """Run the service until interrupted. Loopback-only by default."""
    import uvicorn

    uvicorn.run(create_app(store, threshold), host=host, port=port, log_level="warning")
