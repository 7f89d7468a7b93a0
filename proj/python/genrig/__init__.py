"""Generic rigidity checks backed by the genrig C++ library."""

import json

from . import _core
from ._core import GenrigError, run_cli

__all__ = [
    "GenrigError",
    "balanced",
    "certificate",
    "check",
    "oracle",
    "reduce",
    "run_cli",
    "straighten",
    "stress",
]


def _text(obj):
    return obj if isinstance(obj, str) else json.dumps(obj)


def oracle(graph, dim=0, seed=0, trials=3):
    return json.loads(_core.oracle(_text(graph), dim, seed, trials))


def check(graph, dim=0, mode="kernel", seed=0, verify=False, certified=False):
    return json.loads(_core.check(_text(graph), dim, mode, seed, verify, certified))


def straighten(text, max_terms=1_000_000):
    return _core.straighten(text, max_terms)


def balanced(orientation, dim, certified=False, seed=0):
    return json.loads(_core.balanced(_text(orientation), dim, certified, seed))


def stress(graph, orientation, sinks, dim=0, seed=0):
    return json.loads(_core.stress(_text(graph), _text(orientation), _text(sinks), dim, seed))


def certificate(graph, dim=0, seed=0):
    out = _core.certificate(_text(graph), dim, seed)
    return None if out is None else json.loads(out)


def reduce(graph, dim=0, seed=0):
    return json.loads(_core.reduce(_text(graph), dim, seed))
