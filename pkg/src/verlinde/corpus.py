"""Locate the shipped golden corpus; overridable via VERLINDE_CORPUS."""

from __future__ import annotations

import os
from pathlib import Path

__all__ = ["corpus_dir", "corpus_path", "list_corpus"]

ENV_VAR = "VERLINDE_CORPUS"


def corpus_dir() -> Path:
    override = os.environ.get(ENV_VAR)
    if override:
        return Path(override)
    return Path(__file__).parent / "corpus"


def corpus_path(name: str) -> Path:
    path = corpus_dir() / name
    if not path.exists():
        raise FileNotFoundError(f"no corpus file {name!r} in {corpus_dir()}")
    return path


def list_corpus(suffix: str = "") -> list[str]:
    return sorted(p.name for p in corpus_dir().iterdir()
                  if p.is_file() and p.name.endswith(suffix))
