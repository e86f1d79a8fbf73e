"""
CLI module - command-line surface and lattice serialization.
"""
from .commands import build_parser, main
from .document import (
    LatticeDocument,
    build_document,
    build_oracle_document,
    diff_documents,
    rules_text,
    to_dot,
    to_json,
)


__all__ = [
    "main",
    "build_parser",
    "LatticeDocument",
    "build_document",
    "build_oracle_document",
    "diff_documents",
    "rules_text",
    "to_dot",
    "to_json",
]
