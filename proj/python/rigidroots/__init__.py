"""Rigid reflections of W(m) and reduced positive roots of H(m)."""

import json

from ._core import (
    InvariantError,
    UsageError,
    classify,
    crossing_word,
    dyck_word,
    lemmas,
    q_form,
    reduced_roots,
    root,
    same_element,
    svg,
    symbolic_root,
)
from . import _core


def reduce(a, b, m):
    """Reduction trace of [a, b] as a dict."""
    return json.loads(_core.reduce_json(a, b, m))


def check(m, bound, threads=0):
    """Reduce-and-compare sweep and image census as a dict."""
    return json.loads(_core.check_json(m, bound, threads))


__all__ = [
    "InvariantError",
    "UsageError",
    "check",
    "classify",
    "crossing_word",
    "dyck_word",
    "lemmas",
    "q_form",
    "reduce",
    "reduced_roots",
    "root",
    "same_element",
    "svg",
    "symbolic_root",
]
