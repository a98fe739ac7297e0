"""Shared corpus loaders for the test suite."""

from __future__ import annotations

from verlinde import corpus, formats

CORPUS_RINGS = ("trivial.fusion", "z2.fusion", "z3.fusion", "fib.fusion",
                "s3rep.fusion", "fib_x_z2.fusion")
CORPUS_ALGEBRAS = ("ground.algebra", "ksquared.algebra",
                   "dual_numbers.algebra", "z2group.algebra",
                   "z3group.algebra", "mat2.algebra", "fib.algebra")
CORPUS_CATEGORIES = ("onepoint.category", "mat2.category")


def load(name: str):
    """Parse a corpus file, inferring the kind from its extension."""
    path = corpus.corpus_path(name)
    kind = formats.kind_for_path(name)
    return formats.parse(kind, path.read_text(encoding="utf-8"),
                         source=name).payload


def load_rings():
    return {name: load(name) for name in CORPUS_RINGS}


def load_algebras():
    return {name: load(name) for name in CORPUS_ALGEBRAS}
