"""HTTP service backing the interactive annotation frontend.

Endpoints (JSON over HTTP/1.1, UTF-8):

    GET  /healthz              -> 200 "ok"
    GET  /api/frames           -> list of {"frame_id", "filename"}
    GET  /api/frames/<id>      -> image bytes (404 for unknown ids)
    POST /api/estimate         -> {"geometry": ..., "diagnostics": ...}
    POST /api/annotations      -> persist annotation JSON by frame id

Geometry failures map to 400 with a machine-readable "code" carrying the
exception class name (e.g. "MissingPoints").  Static frontend assets are
served from static_dir at the root path.
"""

from __future__ import annotations

import json
import logging
import os
import tempfile
from http.server import BaseHTTPRequestHandler, ThreadingHTTPServer
from pathlib import Path

from ..geometry import (
    AnnotationFormatError,
    GeometryError,
    annotation_from_jsonable,
    estimate_speakers,
    estimate_table_detailed,
    geometry_to_jsonable,
)

logger = logging.getLogger(__name__)

IMAGE_TYPES = {
    ".png": "image/png",
    ".jpg": "image/jpeg",
    ".jpeg": "image/jpeg",
    ".gif": "image/gif",
    ".bmp": "image/bmp",
}
STATIC_TYPES = {
    ".html": "text/html; charset=utf-8",
    ".js": "text/javascript; charset=utf-8",
    ".css": "text/css; charset=utf-8",
    ".map": "application/json",
    ".json": "application/json",
    ".svg": "image/svg+xml",
    **IMAGE_TYPES,
}


def estimate_annotation_doc(doc: dict) -> dict:
    """Annotation JSON -> {"geometry", "diagnostics"}; shared with the CLI
    path via the same estimation calls and canonical geometry encoding."""
    annotation = annotation_from_jsonable(doc)
    table, diagnostics = estimate_table_detailed(annotation)
    geometry = estimate_speakers(annotation, table)
    return {
        "geometry": geometry_to_jsonable(geometry),
        "diagnostics": diagnostics,
    }


class AnnotationServiceHandler(BaseHTTPRequestHandler):
    server_version = "tabletalk/0.1"

    # directories are attached to the server instance by serve()
    @property
    def frames_dir(self) -> Path:
        return self.server.frames_dir

    @property
    def annotations_dir(self) -> Path:
        return self.server.annotations_dir

    @property
    def static_dir(self):
        return self.server.static_dir

    def log_message(self, fmt, *args):
        logger.debug("%s %s", self.address_string(), fmt % args)

    def _send(self, status: int, body: bytes, content_type: str) -> None:
        self.send_response(status)
        self.send_header("Content-Type", content_type)
        self.send_header("Content-Length", str(len(body)))
        self.end_headers()
        self.wfile.write(body)

    def _send_json(self, status: int, payload) -> None:
        body = json.dumps(payload, sort_keys=True).encode("utf-8")
        self._send(status, body, "application/json; charset=utf-8")

    def _read_json_body(self):
        length = int(self.headers.get("Content-Length", "0"))
        raw = self.rfile.read(length)
        return json.loads(raw.decode("utf-8"))

    def _frame_files(self):
        files = [
            p for p in sorted(self.frames_dir.iterdir())
            if p.suffix.lower() in IMAGE_TYPES
        ] if self.frames_dir.is_dir() else []
        return {p.stem: p for p in files}

    def do_GET(self):
        if self.path == "/healthz":
            self._send(200, b"ok", "text/plain; charset=utf-8")
            return
        if self.path == "/api/frames":
            frames = [
                {"frame_id": stem, "filename": path.name}
                for stem, path in self._frame_files().items()
            ]
            self._send_json(200, frames)
            return
        if self.path.startswith("/api/frames/"):
            frame_id = self.path[len("/api/frames/"):]
            path = self._frame_files().get(frame_id)
            if path is None:
                self._send_json(404, {"code": "UnknownFrame", "message": frame_id})
                return
            self._send(200, path.read_bytes(), IMAGE_TYPES[path.suffix.lower()])
            return
        self._serve_static()

    def _serve_static(self):
        if self.static_dir is None:
            self._send_json(404, {"code": "NotFound", "message": self.path})
            return
        relative = self.path.lstrip("/") or "index.html"
        target = (self.static_dir / relative).resolve()
        if not str(target).startswith(str(self.static_dir.resolve())) \
                or not target.is_file():
            self._send_json(404, {"code": "NotFound", "message": self.path})
            return
        ctype = STATIC_TYPES.get(target.suffix.lower(), "application/octet-stream")
        self._send(200, target.read_bytes(), ctype)

    def do_POST(self):
        if self.path == "/api/estimate":
            self._handle_estimate()
        elif self.path == "/api/annotations":
            self._handle_save_annotation()
        else:
            self._send_json(404, {"code": "NotFound", "message": self.path})

    def _handle_estimate(self):
        try:
            doc = self._read_json_body()
        except (ValueError, UnicodeDecodeError) as exc:
            self._send_json(400, {"code": "InvalidJson", "message": str(exc)})
            return
        try:
            self._send_json(200, estimate_annotation_doc(doc))
        except AnnotationFormatError as exc:
            self._send_json(400, {"code": "AnnotationFormatError", "message": str(exc)})
        except GeometryError as exc:
            self._send_json(400, {"code": type(exc).__name__, "message": str(exc)})

    def _handle_save_annotation(self):
        try:
            doc = self._read_json_body()
            frame_id = doc["frame_id"]
        except (ValueError, KeyError, UnicodeDecodeError) as exc:
            self._send_json(400, {"code": "InvalidJson", "message": str(exc)})
            return
        if not isinstance(frame_id, str) or not frame_id \
                or any(ch in frame_id for ch in "/\\"):
            self._send_json(400, {"code": "InvalidFrameId", "message": repr(frame_id)})
            return
        self.annotations_dir.mkdir(parents=True, exist_ok=True)
        payload = json.dumps(doc, sort_keys=True, indent=2) + "\n"
        # atomic replace: concurrent saves are last-write-wins per frame id
        fd, tmp_name = tempfile.mkstemp(dir=self.annotations_dir, suffix=".tmp")
        try:
            with os.fdopen(fd, "w", encoding="utf-8") as fh:
                fh.write(payload)
            os.replace(tmp_name, self.annotations_dir / f"{frame_id}.json")
        except OSError:
            os.unlink(tmp_name)
            raise
        self._send_json(200, {"saved": f"{frame_id}.json"})


def make_server(port=0, frames_dir=".", annotations_dir="annotations",
                static_dir=None) -> ThreadingHTTPServer:
    server = ThreadingHTTPServer(("127.0.0.1", port), AnnotationServiceHandler)
    server.frames_dir = Path(frames_dir)
    server.annotations_dir = Path(annotations_dir)
    server.static_dir = Path(static_dir) if static_dir else None
    return server


def serve(port=8765, frames_dir=".", annotations_dir="annotations",
          static_dir=None) -> None:
    server = make_server(port, frames_dir, annotations_dir, static_dir)
    host, bound_port = server.server_address
    print(f"tabletalk service listening on http://{host}:{bound_port}")
    try:
        server.serve_forever()
    except KeyboardInterrupt:
        server.shutdown()
