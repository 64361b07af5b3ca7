"""Exact arithmetic in invariant skew group rings."""

import json

from ._skewforge import (
    Element,
    Setting,
    SkewforgeError,
    commutator,
    format_element,
    gk_bound,
    gt_generator,
    gt_relations,
    hecke_mul,
    parse,
    preset,
    suite_names,
    tensor_classes,
)
from ._skewforge import run_suite_json as _run_suite_json


def run_suite(name, n=None, seed=1, a=None):
    """Run a verification suite and return its report as a dict."""
    return json.loads(_run_suite_json(name, n, seed, a))


__all__ = [
    "Element",
    "Setting",
    "SkewforgeError",
    "commutator",
    "format_element",
    "gk_bound",
    "gt_generator",
    "gt_relations",
    "hecke_mul",
    "parse",
    "preset",
    "run_suite",
    "suite_names",
    "tensor_classes",
]
