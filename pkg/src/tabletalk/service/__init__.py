"""CLI entry points and the annotation HTTP service."""

from .cli import main
from .http import estimate_annotation_doc, make_server, serve

__all__ = ["estimate_annotation_doc", "main", "make_server", "serve"]
