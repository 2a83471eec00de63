from __future__ import annotations

import logging

from fastapi import FastAPI

from .api_server import app as api_app, settings


logger = logging.getLogger(__name__)

app: FastAPI = api_app


@app.on_event("startup")
async def _startup() -> None:
    logger.info("braid-markov api up (env=%s, base_path=%r)", settings.app.env, settings.api.base_path)
