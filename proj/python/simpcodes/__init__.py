"""Codes over Z2[u]/(u^3 - u) built from simplicial defining sets."""

import json as _json

try:  # installed layout: the extension lives inside the package
    from . import _core
except ImportError:  # build tree: the extension sits beside the package root
    import _core

__version__ = _core.__version__

InvalidSpec = _core.InvalidSpec
BudgetExceeded = _core.BudgetExceeded

ring_add = _core.ring_add
ring_mul = _core.ring_mul
gray = _core.gray
lee_weight = _core.lee_weight
ring_str = _core.ring_str
distribution = _core.distribution
code_params = _core.code_params
analyze_json = _core.analyze_json
verify_tables = _core.verify_tables
reproduce_references = _core.reproduce_references
reference_names = _core.reference_names


def analyze(m, L, M, N, comp_L=False, comp_M=False, comp_N=False,
            method="all", with_generator=False):
    """Full analysis of one defining-set configuration, as a dict."""
    return _json.loads(
        analyze_json(m, L, M, N, comp_L, comp_M, comp_N, method,
                     with_generator))


__all__ = [
    "InvalidSpec",
    "BudgetExceeded",
    "ring_add",
    "ring_mul",
    "gray",
    "lee_weight",
    "ring_str",
    "distribution",
    "code_params",
    "analyze",
    "analyze_json",
    "verify_tables",
    "reproduce_references",
    "reference_names",
]
